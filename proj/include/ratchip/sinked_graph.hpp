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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratchip/errors.hpp"

namespace ratchip {

/// Simple undirected graph on {0} u [n] with sink 0. The sink is adjacent to
/// every non-sink vertex; those edges are implicit and never stored. Only
/// edges among the non-sink vertices 1..n are represented.
class SinkedGraph {
public:
    SinkedGraph(int n, const std::vector<std::pair<int, int>>& edges);

    static SinkedGraph complete(int n);

    /// Text form: first line n, then one "i j" pair per edge, 1-indexed.
    static SinkedGraph parse(std::string_view text);
    std::string str() const;

    int vertex_count() const { return n_; }
    bool adjacent(int i, int j) const;

    /// Sorted non-sink neighbors of i.
    const std::vector<int>& neighbors(int i) const;
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;  // 1-based; adj_[0] unused
};

}  // namespace ratchip
