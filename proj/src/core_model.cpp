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
#include "ratchip/core_model.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <random>

namespace ratchip {

GeneralParams::GeneralParams(Chips a_, Chips b_, Chips c_) : a(a_), b(b_), c(c_) {
    if (a < 1 || b < 1 || c < 1) throw InputError("parameters a, b, c must all be positive");
}

namespace {

std::vector<char> membership(const VertexSet& s, int n) {
    validate_vertex_set(s, n);
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int v : s) in[static_cast<std::size_t>(v)] = 1;
    return in;
}

void check_shape(const SinkedGraph& g, const ChipConfig& d) {
    if (d.size() != g.vertex_count()) {
        throw InputError("configuration has " + std::to_string(d.size()) +
                         " entries but the graph has " + std::to_string(g.vertex_count()) +
                         " non-sink vertices");
    }
}

void check_nonnegative(const ChipConfig& d, const char* op) {
    if (!d.nonnegative()) {
        throw InputError(std::string(op) + " is defined only for nonnegative configurations");
    }
}

// Edges from i crossing the cut defined by `in`.
Chips cross_degree(const SinkedGraph& g, const std::vector<char>& in, int i) {
    Chips cnt = 0;
    for (int j : g.neighbors(i)) {
        if (in[static_cast<std::size_t>(j)] != in[static_cast<std::size_t>(i)]) ++cnt;
    }
    return cnt;
}

// Fire legality needs only the fired vertices: each i in s must hold at
// least c + floor(deg_outside(i) * a/b) chips.
bool fire_is_legal(const SinkedGraph& g, const GeneralParams& p, const ChipConfig& d,
                   const std::vector<char>& in, const VertexSet& s) {
    for (int i : s) {
        Chips need = checked_add(p.c, floor_div(checked_mul(cross_degree(g, in, i), p.a), p.b));
        if (d.at(i) < need) return false;
    }
    return true;
}

// Visits subsets of [n] of sizes 1..max_size in (size, lexicographic) order
// until fn returns true; reports whether any call did.
template <class Fn>
bool scan_subsets(int n, int max_size, Fn&& fn) {
    for (int t = 1; t <= std::min(max_size, n); ++t) {
        VertexSet comb(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            if (fn(comb)) return true;
            int i = t - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - (t - 1 - i)) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < t; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

void check_k_range(int k, int n) {
    if (k < 0 || k > n - 1) {
        throw InputError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(n - 1));
    }
}

}  // namespace

ChipConfig cluster_fire(const SinkedGraph& g, const GeneralParams& p,
                        const ChipConfig& d, const VertexSet& s) {
    check_shape(g, d);
    const int n = g.vertex_count();
    auto in = membership(s, n);
    std::vector<Chips> out = d.counts();
    for (int i = 1; i <= n; ++i) {
        Chips quantized = floor_div(checked_mul(cross_degree(g, in, i), p.a), p.b);
        auto& entry = out[static_cast<std::size_t>(i - 1)];
        if (in[static_cast<std::size_t>(i)]) {
            entry = checked_sub(entry, checked_add(p.c, quantized));
        } else {
            entry = checked_add(entry, quantized);
        }
    }
    return ChipConfig(std::move(out));
}

ChipConfig borrow_general(const SinkedGraph& g, const GeneralParams& p,
                          const ChipConfig& d, const VertexSet& s) {
    check_shape(g, d);
    const int n = g.vertex_count();
    auto in = membership(s, n);
    std::vector<Chips> out = d.counts();
    for (int i = 1; i <= n; ++i) {
        Chips quantized = floor_div(checked_mul(cross_degree(g, in, i), p.a), p.b);
        auto& entry = out[static_cast<std::size_t>(i - 1)];
        if (in[static_cast<std::size_t>(i)]) {
            entry = checked_add(entry, checked_add(p.c, quantized));
        } else {
            entry = checked_sub(entry, quantized);
        }
    }
    return ChipConfig(std::move(out));
}

bool is_legal_fire(const SinkedGraph& g, const GeneralParams& p,
                   const ChipConfig& d, const VertexSet& s) {
    check_nonnegative(d, "fire legality");
    return cluster_fire(g, p, d, s).nonnegative();
}

bool is_legal_borrow(const SinkedGraph& g, const GeneralParams& p,
                     const ChipConfig& d, const VertexSet& s) {
    check_nonnegative(d, "borrow legality");
    return borrow_general(g, p, d, s).nonnegative();
}

bool is_k_stable_general(const SinkedGraph& g, const GeneralParams& p,
                         const ChipConfig& d, int k) {
    check_shape(g, d);
    check_nonnegative(d, "k-stability");
    check_k_range(k, g.vertex_count());
    auto all = membership({}, g.vertex_count());
    return !scan_subsets(g.vertex_count(), k + 1, [&](const VertexSet& s) {
        auto in = all;
        for (int v : s) in[static_cast<std::size_t>(v)] = 1;
        bool legal = fire_is_legal(g, p, d, in, s);
        for (int v : s) in[static_cast<std::size_t>(v)] = 0;
        return legal;
    });
}

StrategySpec StrategySpec::parse(std::string_view text) {
    if (text == "greedy-max") return {Strategy::GreedyMax, 0};
    if (text == "lex-min") return {Strategy::LexMin, 0};
    if (text.starts_with("random:")) {
        std::string_view tail = text.substr(7);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), seed);
        if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
            throw InputError("malformed seed in strategy '" + std::string(text) + "'");
        }
        return {Strategy::SeededRandom, seed};
    }
    throw InputError("unknown strategy '" + std::string(text) +
                     "'; expected greedy-max, lex-min or random:SEED");
}

std::string StrategySpec::str() const {
    switch (kind) {
        case Strategy::GreedyMax: return "greedy-max";
        case Strategy::LexMin: return "lex-min";
        case Strategy::SeededRandom: return "random:" + std::to_string(seed);
    }
    return "?";
}

namespace {

std::optional<VertexSet> pick_lex_min(const SinkedGraph& g, const GeneralParams& p,
                                      const ChipConfig& d, int k) {
    std::optional<VertexSet> found;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    scan_subsets(g.vertex_count(), k + 1, [&](const VertexSet& s) {
        for (int v : s) in[static_cast<std::size_t>(v)] = 1;
        bool legal = fire_is_legal(g, p, d, in, s);
        for (int v : s) in[static_cast<std::size_t>(v)] = 0;
        if (legal) found = s;
        return legal;
    });
    return found;
}

std::optional<VertexSet> pick_greedy_max(const SinkedGraph& g, const GeneralParams& p,
                                         const ChipConfig& d, int k) {
    const int n = g.vertex_count();
    std::vector<int> order = poorest_to_richest(d);
    std::reverse(order.begin(), order.end());
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int l = std::min(k + 1, n); l >= 1; --l) {
        VertexSet s(order.begin(), order.begin() + l);
        std::sort(s.begin(), s.end());
        for (int v : s) in[static_cast<std::size_t>(v)] = 1;
        bool legal = fire_is_legal(g, p, d, in, s);
        for (int v : s) in[static_cast<std::size_t>(v)] = 0;
        if (legal) return s;
    }
    // On a complete graph a legal set implies the equally-sized richest set
    // is legal, so this is only reachable for other graphs.
    return pick_lex_min(g, p, d, k);
}

std::optional<VertexSet> pick_random(const SinkedGraph& g, const GeneralParams& p,
                                     const ChipConfig& d, int k, std::mt19937_64& rng) {
    std::vector<VertexSet> legal;
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    scan_subsets(g.vertex_count(), k + 1, [&](const VertexSet& s) {
        for (int v : s) in[static_cast<std::size_t>(v)] = 1;
        if (fire_is_legal(g, p, d, in, s)) legal.push_back(s);
        for (int v : s) in[static_cast<std::size_t>(v)] = 0;
        return false;
    });
    if (legal.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> dist(0, legal.size() - 1);
    return legal[dist(rng)];
}

}  // namespace

StabilizeResult k_stabilize_general(const SinkedGraph& g, const GeneralParams& p,
                                    const ChipConfig& d, int k, StrategySpec strategy) {
    check_shape(g, d);
    check_nonnegative(d, "k-stabilization");
    check_k_range(k, g.vertex_count());
    std::mt19937_64 rng(strategy.seed);

    StabilizeResult result{d, {}};
    for (;;) {
        std::optional<VertexSet> move;
        switch (strategy.kind) {
            case Strategy::GreedyMax: move = pick_greedy_max(g, p, result.config, k); break;
            case Strategy::LexMin: move = pick_lex_min(g, p, result.config, k); break;
            case Strategy::SeededRandom: move = pick_random(g, p, result.config, k, rng); break;
        }
        if (!move) break;  // k-stable: total chips strictly decrease, so we get here
        result.config = cluster_fire(g, p, result.config, *move);
        result.fired.push_back(std::move(*move));
    }
    return result;
}

std::set<ChipConfig> all_k_stabilizations(const SinkedGraph& g, const GeneralParams& p,
                                          const ChipConfig& d, int k,
                                          std::size_t state_budget) {
    check_shape(g, d);
    check_nonnegative(d, "k-stabilization");
    check_k_range(k, g.vertex_count());

    std::set<ChipConfig> visited{d};
    std::set<ChipConfig> stable;
    std::deque<ChipConfig> frontier{d};
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()) + 1, 0);

    while (!frontier.empty()) {
        ChipConfig cur = std::move(frontier.front());
        frontier.pop_front();
        bool any_move = false;
        scan_subsets(g.vertex_count(), k + 1, [&](const VertexSet& s) {
            for (int v : s) in[static_cast<std::size_t>(v)] = 1;
            bool legal = fire_is_legal(g, p, cur, in, s);
            for (int v : s) in[static_cast<std::size_t>(v)] = 0;
            if (legal) {
                any_move = true;
                ChipConfig next = cluster_fire(g, p, cur, s);
                if (visited.insert(next).second) {
                    if (visited.size() > state_budget) {
                        throw ResourceError(
                            "k-stabilization search exceeded the budget of " +
                            std::to_string(state_budget) + " states (frontier size " +
                            std::to_string(frontier.size()) + ")");
                    }
                    frontier.push_back(std::move(next));
                }
            }
            return false;
        });
        if (!any_move) stable.insert(std::move(cur));
    }
    return stable;
}

}  // namespace ratchip
