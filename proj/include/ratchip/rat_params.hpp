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

#include <compare>

#include "ratchip/int_math.hpp"

namespace ratchip {

/// Parameters of the complete-graph specialization: coprime a, b with the
/// complete graph on {0} u [b] and sink capacity 1 implied. Construction
/// rejects non-coprime pairs; those belong to the general model.
class RatParams {
public:
    RatParams(Chips a, Chips b);

    Chips a() const { return a_; }
    Chips b() const { return b_; }

    /// Number of non-sink vertices (= b).
    int vertex_count() const { return static_cast<int>(b_); }

    friend auto operator<=>(const RatParams&, const RatParams&) = default;

private:
    Chips a_;
    Chips b_;
};

}  // namespace ratchip
