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
#include <string>
#include <string_view>
#include <vector>

#include "ratchip/chip_config.hpp"
#include "ratchip/lattice_path.hpp"
#include "ratchip/rat_params.hpp"

namespace ratchip {

/// A lattice path whose b north steps carry the labels 1..b, one each,
/// increasing from bottom to top within every run of consecutive norths.
///
/// Configurations with a chip count >= a produce paths whose top north step
/// reaches y = b to the right of (a,b); those carry more than a east steps,
/// none of them after the final north. Such overflow paths round-trip through
/// decode and render but are rejected by the skeletal operations.
class LabeledPath {
public:
    LabeledPath(Chips a, Chips b, std::string steps, std::vector<int> labels);

    /// Text form "N(2)EEN(1)N(3)EE": each north step carries its label.
    static LabeledPath parse(Chips a, Chips b, std::string_view text);
    std::string str() const;

    Chips a() const { return a_; }
    Chips b() const { return b_; }
    const std::string& steps() const { return steps_; }

    /// Labels of the north steps, bottom to top.
    const std::vector<int>& labels() const { return labels_; }

    /// x-coordinate of each north step, bottom to top.
    std::vector<Chips> north_columns() const;

    bool ends_in_east() const { return !steps_.empty() && steps_.back() == 'E'; }

    /// True when the path runs past x = a (some encoded count exceeds a).
    bool is_overflow() const { return static_cast<Chips>(steps_.size()) - b_ > a_; }

    /// The underlying unlabeled path; rejects overflow paths.
    LatticePath unlabeled() const;

    friend auto operator<=>(const LabeledPath&, const LabeledPath&) = default;

private:
    Chips a_;
    Chips b_;
    std::string steps_;
    std::vector<int> labels_;
};

/// Encodes a nonnegative configuration: one north step per vertex at
/// x = d(v), rows ordered poorest to richest (ties by vertex index).
LabeledPath lpath(const RatParams& p, const ChipConfig& d);

/// Inverse of lpath: d(i) = column of the north step labeled i.
ChipConfig decode(const LabeledPath& q);

/// Rotates the path so that its (j+1)-th east step from the end becomes the
/// last step, carrying labels along; 0 <= j < a. Runs are never broken, and
/// decode gains j on every vertex mod a. The path must end in an east step.
LabeledPath run_preserving_shift(const LabeledPath& q, Chips j);

/// Cyclic shift moving the visited point v to the origin. The step arriving
/// at v must be an east step (so no run is broken); endpoints give identity.
LabeledPath cyclic_shift(const LabeledPath& q, LatticePoint v);

/// Multiset of north-run lengths, sorted ascending.
std::vector<int> run_multiset(const LabeledPath& q);
std::vector<int> run_multiset(const LatticePath& q);

/// Skeletal predicate of the underlying unlabeled path. Paths not ending in
/// an east step (some count >= a) are rejected with InputError; the text of
/// the model is that they are never k-skeletal, and callers holding one
/// almost certainly have a bug.
bool is_k_skeletal_labeled(const LabeledPath& q, int k);

/// The unique k-skeletal labeled path reachable by run-preserving shifts.
LabeledPath find_k_skeletal_labeled(const LabeledPath& q, int k);

}  // namespace ratchip
