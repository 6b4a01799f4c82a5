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
#include "ratchip/lattice_path.hpp"

#include <numeric>

namespace ratchip {

namespace {

void check_coprime(const LatticePath& q, const char* op) {
    if (std::gcd(q.a(), q.b()) != 1) {
        throw InputError(std::string(op) + " requires coprime path parameters");
    }
}

void check_k_range(int k, Chips b) {
    if (k < 0 || k >= b) {
        throw InputError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(b - 1));
    }
}

// Levels at the start of each north step, bottom to top.
std::vector<Chips> north_start_levels(const LatticePath& q) {
    std::vector<Chips> lvls;
    lvls.reserve(static_cast<std::size_t>(q.b()));
    Chips lvl = 0;
    for (char c : q.steps()) {
        if (c == 'N') {
            lvls.push_back(lvl);
            lvl += q.a();
        } else {
            lvl -= q.b();
        }
    }
    return lvls;
}

}  // namespace

Chips level(Chips a, Chips b, LatticePoint v) {
    return checked_sub(checked_mul(a, v.y), checked_mul(b, v.x));
}

Chips level(const LatticePath& q, LatticePoint v) {
    return level(q.a(), q.b(), v);
}

LatticePath::LatticePath(Chips a, Chips b, std::string steps)
    : a_(a), b_(b), steps_(std::move(steps)) {
    if (a < 1 || b < 1) throw InputError("path parameters must be positive");
    Chips norths = 0, easts = 0;
    for (char c : steps_) {
        if (c == 'N') ++norths;
        else if (c == 'E') ++easts;
        else throw InputError(std::string("invalid step character '") + c + "'");
    }
    if (norths != b || easts != a) {
        throw InputError("path must have exactly " + std::to_string(b) + " N and " +
                         std::to_string(a) + " E steps, got " + std::to_string(norths) +
                         " N and " + std::to_string(easts) + " E");
    }
}

LatticePath LatticePath::parse(Chips a, Chips b, std::string_view text) {
    return LatticePath(a, b, std::string(text));
}

std::vector<LatticePoint> LatticePath::points() const {
    std::vector<LatticePoint> pts;
    pts.reserve(steps_.size() + 1);
    LatticePoint cur;
    pts.push_back(cur);
    for (char c : steps_) {
        if (c == 'N') ++cur.y;
        else ++cur.x;
        pts.push_back(cur);
    }
    return pts;
}

Chips min_level(const LatticePath& q) {
    Chips lvl = 0, lo = 0;
    for (char c : q.steps()) {
        lvl += (c == 'N') ? q.a() : -q.b();
        lo = std::min(lo, lvl);
    }
    return lo;
}

bool is_dyck(const LatticePath& q) {
    return min_level(q) == 0;
}

LatticePath cyclic_shift(const LatticePath& q, LatticePoint v) {
    auto pts = q.points();
    for (std::size_t t = 0; t < pts.size(); ++t) {
        if (pts[t] == v) {
            if (t == 0 || t + 1 == pts.size()) return q;
            return LatticePath(q.a(), q.b(), q.steps().substr(t) + q.steps().substr(0, t));
        }
    }
    throw InputError("point (" + std::to_string(v.x) + "," + std::to_string(v.y) +
                     ") does not lie on the path");
}

LatticePath shift_by_level(const LatticePath& q, Chips lvl) {
    if (lvl == 0) return q;
    Chips cur = 0;
    std::size_t t = 0;
    for (char c : q.steps()) {
        cur += (c == 'N') ? q.a() : -q.b();
        ++t;
        if (cur == lvl) {
            return LatticePath(q.a(), q.b(), q.steps().substr(t) + q.steps().substr(0, t));
        }
    }
    throw InputError("no point of level " + std::to_string(lvl) + " on the path");
}

std::vector<LatticePath> shift_class(const LatticePath& q) {
    check_coprime(q, "shift_class");
    LatticePath dyck = shift_by_level(q, min_level(q));
    // The visited levels of the Dyck member, ascending; each names one shift.
    std::vector<Chips> lvls;
    Chips cur = 0;
    lvls.push_back(0);
    for (char c : dyck.steps()) {
        cur += (c == 'N') ? dyck.a() : -dyck.b();
        lvls.push_back(cur);
    }
    lvls.pop_back();  // the endpoint repeats level 0
    std::sort(lvls.begin(), lvls.end());
    std::vector<LatticePath> cls;
    cls.reserve(lvls.size());
    for (Chips lvl : lvls) cls.push_back(shift_by_level(dyck, lvl));
    return cls;
}

int pos_stat(const LatticePath& q) {
    std::vector<Chips> lvls = north_start_levels(q);
    int count = 0;
    for (auto it = lvls.rbegin(); it != lvls.rend(); ++it) {
        if (*it < 0) break;
        ++count;
    }
    return count;
}

bool is_k_stable_path(const LatticePath& q, int k) {
    check_k_range(k, q.b());
    std::vector<Chips> lvls = north_start_levels(q);
    for (int s = 0; s <= k; ++s) {
        if (lvls[lvls.size() - 1 - static_cast<std::size_t>(s)] < 0) return false;
    }
    return true;
}

LatticePath find_k_skeletal_in_class(const LatticePath& q, int k) {
    check_k_range(k, q.b());
    std::vector<LatticePath> cls = shift_class(q);
    // Smallest member of the decreasing-minimum order with pos > k; the Dyck
    // member has pos = b, so one always exists.
    for (auto it = cls.rbegin(); it != cls.rend(); ++it) {
        if (pos_stat(*it) > k) return *it;
    }
    throw std::logic_error("shift class without a k-skeletal member");
}

bool is_k_skeletal_path(const LatticePath& q, int k) {
    return find_k_skeletal_in_class(q, k) == q;
}

Chips rational_catalan(const RatParams& p) {
    Chips total = binomial(p.a() + p.b(), p.a());
    if (total % (p.a() + p.b()) != 0) {
        throw std::logic_error("binomial not divisible by a+b despite coprimality");
    }
    return total / (p.a() + p.b());
}

std::vector<LatticePath> enumerate_dyck(const RatParams& p) {
    std::vector<LatticePath> out;
    for_each_path(p.a(), p.b(), [&](const LatticePath& q) {
        if (is_dyck(q)) out.push_back(q);
    });
    return out;
}

std::vector<LatticePath> enumerate_k_skeletal(const RatParams& p, int k) {
    check_k_range(k, p.b());
    std::vector<LatticePath> out;
    for_each_path(p.a(), p.b(), [&](const LatticePath& q) {
        if (is_k_skeletal_path(q, k)) out.push_back(q);
    });
    return out;
}

}  // namespace ratchip
