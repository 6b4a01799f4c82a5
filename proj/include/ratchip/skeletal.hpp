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

#include <vector>

#include "ratchip/chip_config.hpp"
#include "ratchip/complete_model.hpp"
#include "ratchip/labeled_path.hpp"
#include "ratchip/lattice_path.hpp"
#include "ratchip/rat_params.hpp"

namespace ratchip {

/// Rightmost lattice point of row s strictly left of the diagonal x = (a/b)y:
/// (floor(s*a/b), s) for s < b, and (a-1, b) for s = b. Their levels are a
/// permutation of {1..b}.
struct MinLevelPoint {
    int s;
    LatticePoint point;
    Chips lvl;
};

std::vector<MinLevelPoint> min_level_points(const RatParams& p);

/// Fast k-skeletal test, O(b^2 log b): a k-stable d fails to be k-skeletal
/// iff for some s its path reaches the s-th min-level point by an east step
/// and borrowing the s poorest vertices yields a k-stable configuration.
/// Configurations that are not k-stable are not k-skeletal.
bool is_k_skeletal_config(const RatParams& p, const ChipConfig& d, int k);

/// Runtime assertion for the borrow/shift correspondence: for 0-stable d
/// whose path reaches the s-th min-level point by an east step, borrowing
/// the s poorest vertices acts on the labeled path as the cyclic shift
/// moving that point to the origin. Returns true on every valid input.
bool special_borrow_check(const RatParams& p, const ChipConfig& d, int s);

/// The unique superstable configuration equivalent to d under firing and
/// borrowing: reduce entries mod a, draw the labeled path, shift its
/// minimum-level point to the origin, decode. Accepts negative entries.
ChipConfig superstabilize(const RatParams& p, const ChipConfig& d);

/// Which qualifying borrow to take when several min-level points qualify at
/// once. The endpoint does not depend on the choice; tests assert that.
enum class BorrowPick { SmallestSet, LargestSet };

struct SkeletalSearch {
    ChipConfig config;
    int borrow_steps = 0;
};

/// The unique k-skeletal configuration equivalent to d: walk up from the
/// superstabilization by qualifying borrows until none applies.
ChipConfig find_k_skeletal_config(const RatParams& p, const ChipConfig& d, int k);
SkeletalSearch find_k_skeletal_config_traced(const RatParams& p, const ChipConfig& d,
                                             int k, BorrowPick pick = BorrowPick::SmallestSet);

/// The superstable <-> 0-skeletal duality d(i) -> a - e - d(i) with
/// e = 1 + floor(a/b). An involution; requires 0 <= d(i) <= a - e.
ChipConfig dual_config(const RatParams& p, const ChipConfig& d);

/// Moves the last e east steps of a 0-stable path to the front. The result
/// is read with its origin at (-e, 0), ending at (a-e, b).
LatticePath invert_path(const LatticePath& q);
LabeledPath invert_path(const LabeledPath& q);

/// Reverses the step sequence; for labeled paths the labels travel with
/// their north steps and are then re-sorted to increase within each run.
/// Read with origin (-e, 0) when checking inverted-Dyck containment.
LatticePath reverse_path(const LatticePath& q);
LabeledPath reverse_path(const LabeledPath& q);

/// Containment in the inverted triangle with vertices (-e,0), (a-e,0),
/// (a-e,b): starting from (-e,0), every visited point satisfies
/// a*y - b*x <= e*b.
bool is_inverted_dyck(const LatticePath& q);
bool is_inverted_dyck(const LabeledPath& q);

}  // namespace ratchip
