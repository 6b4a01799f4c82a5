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
#pragma once

#include <cstdint>

#include "ratchip/errors.hpp"

namespace ratchip {

/// Chip counts and model parameters. All arithmetic is exact 64-bit; every
/// operation below throws ResourceError instead of wrapping silently.
using Chips = std::int64_t;

Chips checked_add(Chips x, Chips y);
Chips checked_sub(Chips x, Chips y);
Chips checked_mul(Chips x, Chips y);
Chips checked_pow(Chips base, Chips exp);

/// Division rounding toward -infinity; the denominator must be positive.
/// floor_div(-7, 5) == -2, unlike C++ operator/ which truncates toward zero.
Chips floor_div(Chips num, Chips den);

/// Remainder matching floor_div: the result is always in [0, den).
Chips floor_mod(Chips num, Chips den);

/// Exact binomial coefficient C(n, k).
Chips binomial(Chips n, Chips k);

}  // namespace ratchip
