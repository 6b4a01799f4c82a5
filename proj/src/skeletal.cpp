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
#include "ratchip/skeletal.hpp"

#include <algorithm>

namespace ratchip {

std::vector<MinLevelPoint> min_level_points(const RatParams& p) {
    std::vector<MinLevelPoint> pts;
    pts.reserve(static_cast<std::size_t>(p.b()));
    for (Chips s = 1; s < p.b(); ++s) {
        LatticePoint v{floor_div(checked_mul(s, p.a()), p.b()), s};
        pts.push_back({static_cast<int>(s), v, level(p.a(), p.b(), v)});
    }
    LatticePoint top{p.a() - 1, p.b()};
    pts.push_back({static_cast<int>(p.b()), top, level(p.a(), p.b(), top)});
    return pts;
}

namespace {

void check_shape(const RatParams& p, const ChipConfig& d) {
    if (d.size() != p.vertex_count()) {
        throw InputError("configuration has " + std::to_string(d.size()) +
                         " entries but b = " + std::to_string(p.b()));
    }
}

// Sorted chip counts, poorest first; the row columns of lpath(d).
std::vector<Chips> sorted_counts(const ChipConfig& d) {
    std::vector<Chips> xs = d.counts();
    std::sort(xs.begin(), xs.end());
    return xs;
}

// Does lpath(d) arrive at the s-th min-level point by an east step?
// For s < b that means x_s < W(s) <= x_{s+1}; for s = b, x_b < a - 1.
bool reaches_by_east(const RatParams& p, const std::vector<Chips>& xs, int s) {
    const auto b = static_cast<std::size_t>(p.b());
    if (s < p.b()) {
        Chips w = offsets(p, s).gain;
        return xs[static_cast<std::size_t>(s - 1)] < w && w <= xs[static_cast<std::size_t>(s)];
    }
    return xs[b - 1] < p.a() - 1;
}

VertexSet poorest_set(const ChipConfig& d, int s) {
    std::vector<int> order = poorest_to_richest(d);
    VertexSet set(order.begin(), order.begin() + s);
    std::sort(set.begin(), set.end());
    return set;
}

// Sizes s for which borrowing the s poorest vertices of the k-stable d
// yields a k-stable configuration again, per the min-level-point test.
std::vector<int> qualifying_borrows(const RatParams& p, const ChipConfig& d, int k) {
    std::vector<int> out;
    std::vector<Chips> xs = sorted_counts(d);
    for (int s = 1; s <= p.vertex_count(); ++s) {
        if (!reaches_by_east(p, xs, s)) continue;
        ChipConfig r = borrow_complete(p, d, poorest_set(d, s));
        if (!r.nonnegative()) continue;
        if (is_k_stable(p, r, k)) out.push_back(s);
    }
    return out;
}

}  // namespace

bool is_k_skeletal_config(const RatParams& p, const ChipConfig& d, int k) {
    check_shape(p, d);
    if (!d.nonnegative()) throw InputError("k-skeletality is defined only for nonnegative configurations");
    if (!is_k_stable(p, d, k)) return false;
    return qualifying_borrows(p, d, k).empty();
}

bool special_borrow_check(const RatParams& p, const ChipConfig& d, int s) {
    check_shape(p, d);
    if (s < 1 || s > p.vertex_count()) {
        throw InputError("s = " + std::to_string(s) + " out of range 1.." + std::to_string(p.b()));
    }
    if (!d.nonnegative() || !is_k_stable(p, d, 0)) {
        throw InputError("special_borrow_check requires a 0-stable configuration");
    }
    std::vector<Chips> xs = sorted_counts(d);
    if (!reaches_by_east(p, xs, s)) {
        throw InputError("lpath does not reach min-level point " + std::to_string(s) +
                         " by an east step");
    }
    LatticePoint v = (s < p.b()) ? LatticePoint{offsets(p, s).gain, s}
                                 : LatticePoint{p.a() - 1, p.b()};
    LabeledPath shifted = cyclic_shift(lpath(p, d), v);
    LabeledPath borrowed = lpath(p, borrow_complete(p, d, poorest_set(d, s)));
    return shifted == borrowed;
}

ChipConfig superstabilize(const RatParams& p, const ChipConfig& d) {
    check_shape(p, d);
    std::vector<Chips> reduced(d.counts());
    for (Chips& c : reduced) c = floor_mod(c, p.a());
    ChipConfig base{std::move(reduced)};

    LabeledPath q = lpath(p, base);
    // Shift the unique minimum-level point to the origin; the arriving step
    // is always an east step, so the shift preserves runs.
    Chips best = 0;
    LatticePoint best_pt{0, 0};
    LatticePoint cur{0, 0};
    for (char c : q.steps()) {
        if (c == 'N') ++cur.y;
        else ++cur.x;
        Chips lvl = level(p.a(), p.b(), cur);
        if (lvl < best) {
            best = lvl;
            best_pt = cur;
        }
    }
    if (best == 0) return base;
    return decode(cyclic_shift(q, best_pt));
}

SkeletalSearch find_k_skeletal_config_traced(const RatParams& p, const ChipConfig& d,
                                             int k, BorrowPick pick) {
    if (k < 0 || k >= p.vertex_count()) {
        throw InputError("k = " + std::to_string(k) + " out of range 0.." +
                         std::to_string(p.vertex_count() - 1));
    }
    SkeletalSearch search{superstabilize(p, d), 0};
    for (;;) {
        std::vector<int> sizes = qualifying_borrows(p, search.config, k);
        if (sizes.empty()) return search;
        int s = (pick == BorrowPick::SmallestSet) ? sizes.front() : sizes.back();
        search.config = borrow_complete(p, search.config, poorest_set(search.config, s));
        ++search.borrow_steps;
    }
}

ChipConfig find_k_skeletal_config(const RatParams& p, const ChipConfig& d, int k) {
    return find_k_skeletal_config_traced(p, d, k).config;
}

ChipConfig dual_config(const RatParams& p, const ChipConfig& d) {
    check_shape(p, d);
    Chips hi = p.a() - min_trailing_easts(p);
    std::vector<Chips> out;
    out.reserve(d.counts().size());
    for (Chips c : d.counts()) {
        if (c < 0 || c > hi) {
            throw InputError("dual_config requires entries in 0.." + std::to_string(hi));
        }
        out.push_back(hi - c);
    }
    return ChipConfig(std::move(out));
}

namespace {

Chips trailing_easts(const std::string& steps) {
    Chips n = 0;
    for (auto it = steps.rbegin(); it != steps.rend() && *it == 'E'; ++it) ++n;
    return n;
}

}  // namespace

LatticePath invert_path(const LatticePath& q) {
    Chips e = 1 + floor_div(q.a(), q.b());
    if (trailing_easts(q.steps()) < e) {
        throw InputError("invert_path requires a 0-stable path (at least " +
                         std::to_string(e) + " trailing east steps)");
    }
    std::size_t cut = q.steps().size() - static_cast<std::size_t>(e);
    return LatticePath(q.a(), q.b(), q.steps().substr(cut) + q.steps().substr(0, cut));
}

LabeledPath invert_path(const LabeledPath& q) {
    Chips e = 1 + floor_div(q.a(), q.b());
    if (trailing_easts(q.steps()) < e) {
        throw InputError("invert_path requires a 0-stable path (at least " +
                         std::to_string(e) + " trailing east steps)");
    }
    std::size_t cut = q.steps().size() - static_cast<std::size_t>(e);
    // Only east steps move, so labels and runs stay put.
    return LabeledPath(q.a(), q.b(), q.steps().substr(cut) + q.steps().substr(0, cut),
                       q.labels());
}

LatticePath reverse_path(const LatticePath& q) {
    std::string steps(q.steps().rbegin(), q.steps().rend());
    return LatticePath(q.a(), q.b(), std::move(steps));
}

LabeledPath reverse_path(const LabeledPath& q) {
    std::string steps(q.steps().rbegin(), q.steps().rend());
    std::vector<int> labels(q.labels().rbegin(), q.labels().rend());
    // Re-sort labels within each run of the reversed path.
    std::size_t row = 0;
    std::size_t run_start = 0;
    bool in_run = false;
    for (char c : steps) {
        if (c == 'N') {
            if (!in_run) {
                run_start = row;
                in_run = true;
            }
            ++row;
        } else if (in_run) {
            std::sort(labels.begin() + static_cast<std::ptrdiff_t>(run_start),
                      labels.begin() + static_cast<std::ptrdiff_t>(row));
            in_run = false;
        }
    }
    if (in_run) {
        std::sort(labels.begin() + static_cast<std::ptrdiff_t>(run_start), labels.end());
    }
    return LabeledPath(q.a(), q.b(), std::move(steps), std::move(labels));
}

bool is_inverted_dyck(const LatticePath& q) {
    Chips e = 1 + floor_div(q.a(), q.b());
    Chips bound = checked_mul(e, q.b());
    // Walk from (-e, 0); containment in the inverted triangle means the
    // level a*y - b*x never exceeds e*b.
    LatticePoint cur{-e, 0};
    if (level(q.a(), q.b(), cur) > bound) return false;
    for (char c : q.steps()) {
        if (c == 'N') ++cur.y;
        else ++cur.x;
        if (level(q.a(), q.b(), cur) > bound) return false;
    }
    return true;
}

bool is_inverted_dyck(const LabeledPath& q) {
    return is_inverted_dyck(q.unlabeled());
}

}  // namespace ratchip
