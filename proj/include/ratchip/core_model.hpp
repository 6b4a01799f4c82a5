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

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ratchip/chip_config.hpp"
#include "ratchip/sinked_graph.hpp"

namespace ratchip {

/// Parameters of the quantized firing model on an arbitrary sinked graph:
/// every sink edge has capacity c, every non-sink edge capacity a/b.
/// No coprimality is required here.
struct GeneralParams {
    Chips a = 1;
    Chips b = 1;
    Chips c = 1;
    GeneralParams(Chips a_, Chips b_, Chips c_);
};

/// Cluster-fire of the vertex set s: each i in s loses
/// c + floor(deg_outside(i) * a/b) chips and each j outside s gains
/// floor(deg_inside(j) * a/b), where degrees count non-sink neighbors on the
/// other side of the cut. Firing the empty set is the identity.
ChipConfig cluster_fire(const SinkedGraph& g, const GeneralParams& p,
                        const ChipConfig& d, const VertexSet& s);

/// Exact inverse of cluster_fire with the same set.
ChipConfig borrow_general(const SinkedGraph& g, const GeneralParams& p,
                          const ChipConfig& d, const VertexSet& s);

/// A move is legal on d >= 0 when the resulting configuration is >= 0.
bool is_legal_fire(const SinkedGraph& g, const GeneralParams& p,
                   const ChipConfig& d, const VertexSet& s);
bool is_legal_borrow(const SinkedGraph& g, const GeneralParams& p,
                     const ChipConfig& d, const VertexSet& s);

/// True iff no nonempty set of size <= k+1 can legally fire. Decided by
/// subset enumeration; nothing here assumes a complete graph.
bool is_k_stable_general(const SinkedGraph& g, const GeneralParams& p,
                         const ChipConfig& d, int k);

enum class Strategy { GreedyMax, LexMin, SeededRandom };

struct StrategySpec {
    Strategy kind = Strategy::GreedyMax;
    std::uint64_t seed = 0;

    /// "greedy-max" | "lex-min" | "random:SEED"
    static StrategySpec parse(std::string_view text);
    std::string str() const;
};

struct StabilizeResult {
    ChipConfig config;
    std::vector<VertexSet> fired;  // the sets fired, in order
};

/// Drives d to a k-stable configuration by legal k-firing moves. Strategies:
///   greedy-max  fire the l richest vertices for the largest l <= k+1 whose
///               richest set is legal (ties in richness broken by vertex
///               index); falls back to lex-min when no richest-prefix set is
///               legal, which can only happen on non-complete graphs
///   lex-min     the lexicographically smallest legal set, smallest size first
///   random      uniform choice among all legal sets, from the given seed
StabilizeResult k_stabilize_general(const SinkedGraph& g, const GeneralParams& p,
                                    const ChipConfig& d, int k,
                                    StrategySpec strategy = {});

/// Exhaustive closure: the exact set of k-stable configurations reachable
/// from d by legal k-firing sequences. Throws ResourceError once more than
/// state_budget distinct configurations have been expanded.
std::set<ChipConfig> all_k_stabilizations(const SinkedGraph& g, const GeneralParams& p,
                                          const ChipConfig& d, int k,
                                          std::size_t state_budget = 1'000'000);

}  // namespace ratchip
