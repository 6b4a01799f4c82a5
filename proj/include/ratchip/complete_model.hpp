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

#include "ratchip/chip_config.hpp"
#include "ratchip/rat_params.hpp"

namespace ratchip {

/// Per-move chip deltas when a set of size s fires on the complete graph:
/// each fired vertex loses `loss` = 1 + floor((b-s)a/b), each bystander
/// gains `gain` = floor(s*a/b). For 1 <= s < b, loss + gain == a; loss == 1
/// when s == b.
struct Offsets {
    Chips loss;
    Chips gain;
};

Offsets offsets(const RatParams& p, Chips s);

/// 1 + floor(a/b). Every 0-stable path ends in at least this many east
/// steps, and the superstable/0-skeletal duality complements chip counts
/// against a minus this value.
Chips min_trailing_easts(const RatParams& p);

/// Closed-form cluster-fire on the complete graph; O(b). Agrees with
/// cluster_fire on SinkedGraph::complete(b) with c = 1.
ChipConfig fire_complete(const RatParams& p, const ChipConfig& d, const VertexSet& s);

/// Exact inverse of fire_complete.
ChipConfig borrow_complete(const RatParams& p, const ChipConfig& d, const VertexSet& s);

/// O(b log b) stability test: no set of size <= k+1 can fire iff for each
/// s = 1..k+1 the s-th richest vertex holds at most floor((b-s)a/b) chips.
bool is_k_stable(const RatParams& p, const ChipConfig& d, int k);

/// Rational parking-function test for slope b/a, via the sorted criterion:
/// with counts z_1 <= ... <= z_b, require b*z_j <= (j-1)*a for every j.
/// Agrees with is_k_stable(p, d, b-1) on nonnegative configurations; a
/// negative entry is never a parking function.
bool is_superstable_parking(const RatParams& p, const ChipConfig& d);

}  // namespace ratchip
