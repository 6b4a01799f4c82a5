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
#include "ratchip/complete_model.hpp"

#include <algorithm>
#include <functional>

namespace ratchip {

namespace {

void check_shape(const RatParams& p, const ChipConfig& d) {
    if (d.size() != p.vertex_count()) {
        throw InputError("configuration has " + std::to_string(d.size()) +
                         " entries but b = " + std::to_string(p.b()));
    }
}

}  // namespace

Offsets offsets(const RatParams& p, Chips s) {
    if (s < 1 || s > p.b()) {
        throw InputError("set size " + std::to_string(s) + " out of range 1.." +
                         std::to_string(p.b()));
    }
    Chips loss = checked_add(1, floor_div(checked_mul(p.b() - s, p.a()), p.b()));
    Chips gain = floor_div(checked_mul(s, p.a()), p.b());
    return {loss, gain};
}

Chips min_trailing_easts(const RatParams& p) {
    return 1 + floor_div(p.a(), p.b());
}

ChipConfig fire_complete(const RatParams& p, const ChipConfig& d, const VertexSet& s) {
    check_shape(p, d);
    validate_vertex_set(s, p.vertex_count());
    if (s.empty()) throw InputError("fire_complete requires a nonempty set");
    Offsets off = offsets(p, static_cast<Chips>(s.size()));
    std::vector<Chips> out = d.counts();
    std::size_t next = 0;
    for (int v = 1; v <= p.vertex_count(); ++v) {
        if (next < s.size() && s[next] == v) {
            out[static_cast<std::size_t>(v - 1)] = checked_sub(out[static_cast<std::size_t>(v - 1)], off.loss);
            ++next;
        } else {
            out[static_cast<std::size_t>(v - 1)] = checked_add(out[static_cast<std::size_t>(v - 1)], off.gain);
        }
    }
    return ChipConfig(std::move(out));
}

ChipConfig borrow_complete(const RatParams& p, const ChipConfig& d, const VertexSet& s) {
    check_shape(p, d);
    validate_vertex_set(s, p.vertex_count());
    if (s.empty()) throw InputError("borrow_complete requires a nonempty set");
    Offsets off = offsets(p, static_cast<Chips>(s.size()));
    std::vector<Chips> out = d.counts();
    std::size_t next = 0;
    for (int v = 1; v <= p.vertex_count(); ++v) {
        if (next < s.size() && s[next] == v) {
            out[static_cast<std::size_t>(v - 1)] = checked_add(out[static_cast<std::size_t>(v - 1)], off.loss);
            ++next;
        } else {
            out[static_cast<std::size_t>(v - 1)] = checked_sub(out[static_cast<std::size_t>(v - 1)], off.gain);
        }
    }
    return ChipConfig(std::move(out));
}

bool is_k_stable(const RatParams& p, const ChipConfig& d, int k) {
    check_shape(p, d);
    if (!d.nonnegative()) throw InputError("k-stability is defined only for nonnegative configurations");
    if (k < 0 || k >= p.vertex_count()) {
        throw InputError("k = " + std::to_string(k) + " out of range 0.." +
                         std::to_string(p.vertex_count() - 1));
    }
    std::vector<Chips> sorted = d.counts();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    // An s-set can fire iff the s richest can, iff the s-th richest vertex
    // holds at least 1 + floor((b-s)a/b) chips.
    for (Chips s = 1; s <= k + 1; ++s) {
        if (sorted[static_cast<std::size_t>(s - 1)] >= offsets(p, s).loss) return false;
    }
    return true;
}

bool is_superstable_parking(const RatParams& p, const ChipConfig& d) {
    check_shape(p, d);
    std::vector<Chips> sorted = d.counts();
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 0) return false;
    for (Chips j = 1; j <= p.b(); ++j) {
        // j-th smallest entry must satisfy z_j <= (j-1) a / b, exactly.
        if (checked_mul(p.b(), sorted[static_cast<std::size_t>(j - 1)]) >
            checked_mul(j - 1, p.a())) {
            return false;
        }
    }
    return true;
}

}  // namespace ratchip
