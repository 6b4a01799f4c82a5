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
#include "ratchip/oracles.hpp"

#include <bit>
#include <cstdint>

#include "ratchip/core_model.hpp"

// Everything below works from the definitions alone. Quantized amounts are
// computed inline with plain division (operands are nonnegative, so
// truncation is the floor), and subsets are walked as bitmasks; none of the
// fast-path helpers are reused.

namespace ratchip {

namespace {

void check_small(int n) {
    if (n > 25) throw ResourceError("brute-force oracle limited to 25 vertices");
}

}  // namespace

bool brute_is_k_stable(const SinkedGraph& g, const GeneralParams& p,
                       const ChipConfig& d, int k) {
    const int n = g.vertex_count();
    check_small(n);
    if (d.size() != n) throw InputError("configuration size does not match graph");
    if (!d.nonnegative()) throw InputError("k-stability is defined only for nonnegative configurations");
    if (k < 0 || k > n - 1) throw InputError("k out of range");

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size > k + 1) continue;
        bool legal = true;
        for (int i = 1; i <= n && legal; ++i) {
            if (!(mask >> (i - 1) & 1u)) continue;
            Chips outside = 0;
            for (int j : g.neighbors(i)) {
                if (!(mask >> (j - 1) & 1u)) ++outside;
            }
            if (d.at(i) < p.c + (outside * p.a) / p.b) legal = false;
        }
        if (legal) return false;
    }
    return true;
}

namespace {

// Complete-graph k-stability from the definition: some set of size <= k+1
// can fire iff every member holds at least 1 + floor((b-s)a/b) chips.
bool complete_stable(const std::vector<Chips>& v, Chips a, int k) {
    const int b = static_cast<int>(v.size());
    if (b <= 0) return true;
    for (std::uint32_t mask = 1; mask < (1u << b); ++mask) {
        int s = std::popcount(mask);
        if (s > k + 1) continue;
        Chips need = 1 + ((b - s) * a) / b;
        bool legal = true;
        for (int i = 0; i < b && legal; ++i) {
            if ((mask >> i & 1u) && v[static_cast<std::size_t>(i)] < need) legal = false;
        }
        if (legal) return false;
    }
    return true;
}

}  // namespace

bool brute_is_k_skeletal(const RatParams& p, const ChipConfig& d, int k) {
    const int b = p.vertex_count();
    check_small(b);
    if (d.size() != b) throw InputError("configuration size does not match b");
    if (!d.nonnegative()) throw InputError("k-skeletality is defined only for nonnegative configurations");
    if (k < 0 || k >= b) throw InputError("k out of range");

    if (!complete_stable(d.counts(), p.a(), k)) return false;

    for (std::uint32_t mask = 1; mask < (1u << b); ++mask) {
        int t = std::popcount(mask);
        Chips up = 1 + ((static_cast<Chips>(b) - t) * p.a()) / p.b();
        Chips down = (static_cast<Chips>(t) * p.a()) / p.b();
        std::vector<Chips> r = d.counts();
        bool legal = true;
        for (int i = 0; i < b; ++i) {
            auto& entry = r[static_cast<std::size_t>(i)];
            entry += (mask >> i & 1u) ? up : -down;
            if (entry < 0) legal = false;
        }
        if (legal && complete_stable(r, p.a(), k)) return false;
    }
    return true;
}

bool brute_path_skeletal(const LatticePath& q, int k) {
    if (k < 0 || k >= q.b()) throw InputError("k out of range");
    const Chips a = q.a(), b = q.b();

    // (R1): the last k+1 north steps start on or above bx = ay.
    auto r1 = [&](const std::string& steps) {
        std::vector<Chips> starts;
        Chips lvl = 0;
        for (char c : steps) {
            if (c == 'N') {
                starts.push_back(lvl);
                lvl += a;
            } else {
                lvl -= b;
            }
        }
        for (int s = 0; s <= k; ++s) {
            if (starts[starts.size() - 1 - static_cast<std::size_t>(s)] < 0) return false;
        }
        return true;
    };

    const std::string& steps = q.steps();
    if (!r1(steps)) return false;

    // (R2): for every lattice point strictly above the line, (R1) fails for
    // the shift starting there.
    Chips lvl = 0;
    for (std::size_t t = 1; t < steps.size(); ++t) {
        lvl += (steps[t - 1] == 'N') ? a : -b;
        if (lvl > 0 && r1(steps.substr(t) + steps.substr(0, t))) return false;
    }
    return true;
}

bool brute_superstable_parking(const RatParams& p, const ChipConfig& d) {
    const int b = p.vertex_count();
    check_small(b);
    if (d.size() != b) throw InputError("configuration size does not match b");
    if (!d.nonnegative()) return false;

    for (std::uint32_t mask = 1; mask < (1u << b); ++mask) {
        int u = std::popcount(mask);
        bool ok = false;
        for (int i = 0; i < b && !ok; ++i) {
            // beta_i <= (b-u) a / b, compared exactly as b*beta_i <= (b-u)*a.
            if ((mask >> i & 1u) &&
                p.b() * d.counts()[static_cast<std::size_t>(i)] <= (p.b() - u) * p.a()) {
                ok = true;
            }
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace ratchip
