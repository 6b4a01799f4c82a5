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
#include "ratchip/group.hpp"

#include <algorithm>
#include <functional>

#include "ratchip/complete_model.hpp"
#include "ratchip/skeletal.hpp"

namespace ratchip {

namespace {

void check_shape(const RatParams& p, const ChipConfig& d) {
    if (d.size() != p.vertex_count()) {
        throw InputError("configuration has " + std::to_string(d.size()) +
                         " entries but b = " + std::to_string(p.b()));
    }
}

ChipConfig canonicalize(const RatParams& p, const ChipConfig& d) {
    std::vector<Chips> rep(d.counts());
    for (Chips& c : rep) c = floor_mod(c, p.a());
    Chips last = rep.back();
    for (Chips& c : rep) c = floor_mod(c - last, p.a());
    return ChipConfig(std::move(rep));
}

// Legal cluster-fires driving d to the unique superstable configuration.
// Whenever some s-set can fire on the complete graph, the s richest can,
// so scanning sizes b..1 over richest prefixes finds a move iff one exists.
std::vector<VertexSet> fires_to_superstable(const RatParams& p, ChipConfig& d) {
    std::vector<VertexSet> fired;
    for (;;) {
        std::vector<int> order = poorest_to_richest(d);
        std::reverse(order.begin(), order.end());
        std::vector<Chips> sorted = d.counts();
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        int pick = 0;
        for (int s = p.vertex_count(); s >= 1; --s) {
            if (sorted[static_cast<std::size_t>(s - 1)] >= offsets(p, s).loss) {
                pick = s;
                break;
            }
        }
        if (pick == 0) return fired;
        VertexSet set(order.begin(), order.begin() + pick);
        std::sort(set.begin(), set.end());
        d = fire_complete(p, d, set);
        fired.push_back(std::move(set));
    }
}

}  // namespace

GroupElement::GroupElement(const RatParams& p, ChipConfig rep)
    : params_(p), rep_(std::move(rep)) {
    check_shape(p, rep_);
    for (Chips c : rep_.counts()) {
        if (c < 0 || c >= p.a()) {
            throw InputError("canonical representative entries must lie in 0.." +
                             std::to_string(p.a() - 1));
        }
    }
    if (rep_.counts().back() != 0) {
        throw InputError("canonical representative must have last entry 0");
    }
}

GroupElement canonical_rep(const RatParams& p, const ChipConfig& d) {
    check_shape(p, d);
    return GroupElement(p, canonicalize(p, d));
}

GroupElement identity(const RatParams& p) {
    return GroupElement(p, ChipConfig::zeros(p.vertex_count()));
}

GroupElement add(const GroupElement& x, const GroupElement& y) {
    if (x.params() != y.params()) throw InputError("group elements have different parameters");
    std::vector<Chips> sum(x.rep().counts());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = checked_add(sum[i], y.rep().counts()[i]);
    }
    return canonical_rep(x.params(), ChipConfig(std::move(sum)));
}

GroupElement neg(const GroupElement& x) {
    std::vector<Chips> out(x.rep().counts());
    for (Chips& c : out) c = -c;
    return canonical_rep(x.params(), ChipConfig(std::move(out)));
}

bool equivalent(const RatParams& p, const ChipConfig& d, const ChipConfig& e) {
    return canonical_rep(p, d) == canonical_rep(p, e);
}

ChipConfig apply_move(const RatParams& p, const ChipConfig& d, const Move& m) {
    return m.kind == Move::Kind::Fire ? fire_complete(p, d, m.verts)
                                      : borrow_complete(p, d, m.verts);
}

bool move_is_legal(const RatParams& p, const ChipConfig& d, const Move& m) {
    if (!d.nonnegative()) throw InputError("move legality is defined only for nonnegative configurations");
    return apply_move(p, d, m).nonnegative();
}

std::vector<Move> legal_move_sequence(const RatParams& p, const ChipConfig& d,
                                      const ChipConfig& e) {
    if (!d.nonnegative() || !e.nonnegative()) {
        throw InputError("legal_move_sequence requires nonnegative configurations");
    }
    if (!equivalent(p, d, e)) {
        throw InputError("configurations are not fire/borrow equivalent");
    }
    if (d == e) return {};

    ChipConfig from = d;
    std::vector<VertexSet> down = fires_to_superstable(p, from);
    ChipConfig to = e;
    std::vector<VertexSet> up = fires_to_superstable(p, to);
    if (from != to) throw std::logic_error("superstabilizations of equivalent configurations differ");

    std::vector<Move> trace;
    trace.reserve(down.size() + up.size());
    for (auto& s : down) trace.push_back({Move::Kind::Fire, std::move(s)});
    for (auto it = up.rbegin(); it != up.rend(); ++it) {
        trace.push_back({Move::Kind::Borrow, std::move(*it)});
    }
    return trace;
}

ChipConfig class_skeletal_rep(const GroupElement& x, int k) {
    return find_k_skeletal_config(x.params(), x.rep(), k);
}

}  // namespace ratchip
