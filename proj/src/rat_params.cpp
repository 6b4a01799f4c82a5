/*
 * Copyright 2026 the ratchip authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "ratchip/rat_params.hpp"

#include <numeric>
#include <string>

namespace ratchip {

RatParams::RatParams(Chips a, Chips b) : a_(a), b_(b) {
    if (a < 1 || b < 1) throw InputError("a and b must be positive");
    if (std::gcd(a, b) != 1) {
        throw InputError("a = " + std::to_string(a) + " and b = " + std::to_string(b) +
                         " are not coprime; the complete-graph model requires gcd(a,b) = 1 "
                         "(use the general model for other parameters)");
    }
}

}  // namespace ratchip
