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

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ratchip/rat_params.hpp"

namespace ratchip {

struct LatticePoint {
    Chips x = 0;
    Chips y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Level of a lattice point relative to the line bx = ay: a*y - b*x.
/// North steps raise it by a, east steps lower it by b.
Chips level(Chips a, Chips b, LatticePoint v);

/// A lattice path from (0,0) to (a,b): exactly b north and a east unit
/// steps, stored as a string over {N, E}.
class LatticePath {
public:
    LatticePath(Chips a, Chips b, std::string steps);

    static LatticePath parse(Chips a, Chips b, std::string_view text);

    Chips a() const { return a_; }
    Chips b() const { return b_; }
    const std::string& steps() const { return steps_; }
    const std::string& str() const { return steps_; }

    /// The a+b+1 lattice points visited, in order.
    std::vector<LatticePoint> points() const;

    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
    Chips a_;
    Chips b_;
    std::string steps_;
};

Chips level(const LatticePath& q, LatticePoint v);

/// Minimum level over all visited lattice points (always <= 0).
Chips min_level(const LatticePath& q);

/// Dyck iff every north step starts on or above bx = ay iff min_level == 0.
bool is_dyck(const LatticePath& q);

/// Cyclic shift starting at a visited point v: the steps from v to (a,b)
/// followed by the steps from (0,0) to v.
LatticePath cyclic_shift(const LatticePath& q, LatticePoint v);

/// Level-addressed shift: visited levels are pairwise distinct (coprime a,b),
/// so a nonzero level picks a unique point. Level 0 is the identity.
LatticePath shift_by_level(const LatticePath& q, Chips lvl);

/// All a+b distinct cyclic shifts of q, ordered by decreasing minimum level.
/// The Dyck member comes first. Requires gcd(a,b) = 1.
std::vector<LatticePath> shift_class(const LatticePath& q);

/// Number of trailing north steps (scanning backwards, east steps in between
/// allowed) that start at nonnegative level. The scan stops at the first
/// north step starting below the line. A path is k-stable iff pos > k.
int pos_stat(const LatticePath& q);

/// k-stable: the last k+1 north steps start on or above bx = ay.
bool is_k_stable_path(const LatticePath& q, int k);

/// k-skeletal: the smallest member of q's shift class, in the decreasing-
/// minimum order, having pos > k. Requires gcd(a,b) = 1 and 0 <= k < b.
bool is_k_skeletal_path(const LatticePath& q, int k);
LatticePath find_k_skeletal_in_class(const LatticePath& q, int k);

/// C(a+b, a) / (a+b), exact.
Chips rational_catalan(const RatParams& p);

/// Visits every path with b norths and a easts exactly once, in lexicographic
/// step order with E < N.
template <class Fn>
void for_each_path(Chips a, Chips b, Fn&& fn) {
    std::string s(static_cast<std::size_t>(a), 'E');
    s.append(static_cast<std::size_t>(b), 'N');
    do {
        fn(LatticePath(a, b, s));
    } while (std::next_permutation(s.begin(), s.end()));
}

std::vector<LatticePath> enumerate_dyck(const RatParams& p);
std::vector<LatticePath> enumerate_k_skeletal(const RatParams& p, int k);

}  // namespace ratchip
