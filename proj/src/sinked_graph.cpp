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
#include "ratchip/sinked_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ratchip {

SinkedGraph::SinkedGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw InputError("graph needs at least one non-sink vertex");
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : edges) {
        if (i < 1 || i > n || j < 1 || j > n) {
            throw InputError("edge endpoint out of range 1.." + std::to_string(n));
        }
        if (i == j) throw InputError("loops are not allowed");
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second) throw InputError("duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
        adj_[static_cast<std::size_t>(i)].push_back(j);
        adj_[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

SinkedGraph SinkedGraph::complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return SinkedGraph(n, edges);
}

SinkedGraph SinkedGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = 0;
    if (!(in >> n)) throw InputError("graph text must start with the vertex count");
    std::vector<std::pair<int, int>> edges;
    int i = 0, j = 0;
    while (in >> i) {
        if (!(in >> j)) throw InputError("dangling edge endpoint in graph text");
        edges.emplace_back(i, j);
    }
    if (!in.eof()) throw InputError("malformed token in graph text");
    return SinkedGraph(n, edges);
}

std::string SinkedGraph::str() const {
    std::string out = std::to_string(n_) + "\n";
    for (int i = 1; i <= n_; ++i) {
        for (int j : neighbors(i)) {
            if (i < j) out += std::to_string(i) + " " + std::to_string(j) + "\n";
        }
    }
    return out;
}

bool SinkedGraph::adjacent(int i, int j) const {
    const auto& nbrs = neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

const std::vector<int>& SinkedGraph::neighbors(int i) const {
    if (i < 1 || i > n_) {
        throw InputError("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    }
    return adj_[static_cast<std::size_t>(i)];
}

}  // namespace ratchip
