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
#include <vector>

#include "ratchip/chip_config.hpp"
#include "ratchip/rat_params.hpp"

namespace ratchip {

/// Element of the group of configurations modulo firing and borrowing,
/// isomorphic to Z_a^(b-1). Stored as the canonical coset representative:
/// entries in {0..a-1} with the last entry zero.
class GroupElement {
public:
    GroupElement(const RatParams& p, ChipConfig rep);

    const RatParams& params() const { return params_; }
    const ChipConfig& rep() const { return rep_; }

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    RatParams params_;
    ChipConfig rep_;
};

/// Reduce entries mod a, then add the multiple of the all-ones vector that
/// zeroes the last entry. Two configurations get equal representatives
/// exactly when a fire/borrow sequence connects them.
GroupElement canonical_rep(const RatParams& p, const ChipConfig& d);

GroupElement identity(const RatParams& p);
GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement neg(const GroupElement& x);

bool equivalent(const RatParams& p, const ChipConfig& d, const ChipConfig& e);

struct Move {
    enum class Kind { Fire, Borrow };
    Kind kind;
    VertexSet verts;
    friend auto operator<=>(const Move&, const Move&) = default;
};

ChipConfig apply_move(const RatParams& p, const ChipConfig& d, const Move& m);
bool move_is_legal(const RatParams& p, const ChipConfig& d, const Move& m);

/// For nonnegative equivalent d, e: a sequence of moves, each legal when
/// applied in order, transforming d into e. Routes through the common
/// superstabilization (legal fires down, then the reverse of e's fires
/// replayed as legal borrows); no attempt at minimality.
std::vector<Move> legal_move_sequence(const RatParams& p, const ChipConfig& d,
                                      const ChipConfig& e);

/// The unique k-skeletal configuration in the class of x.
ChipConfig class_skeletal_rep(const GroupElement& x, int k);

}  // namespace ratchip
