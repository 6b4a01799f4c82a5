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

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ratchip/int_math.hpp"

namespace ratchip {

/// Chip counts on the non-sink vertices 1..n. The sink's count is never
/// tracked. Entries may be negative (the group module needs that); dynamics
/// operations state their own nonnegativity preconditions.
class ChipConfig {
public:
    ChipConfig() = default;
    explicit ChipConfig(std::vector<Chips> counts) : counts_(std::move(counts)) {}
    ChipConfig(std::initializer_list<Chips> counts) : counts_(counts) {}

    static ChipConfig zeros(int n);

    /// Parses the comma-separated text form, vertex 1 first: "0,0,3,5,5".
    static ChipConfig parse(std::string_view text);
    std::string str() const;

    int size() const { return static_cast<int>(counts_.size()); }

    /// Chip count at a vertex; vertices are 1-based throughout the library.
    Chips at(int vertex) const;
    Chips& at(int vertex);

    const std::vector<Chips>& counts() const { return counts_; }
    bool nonnegative() const;

    friend auto operator<=>(const ChipConfig&, const ChipConfig&) = default;

private:
    std::vector<Chips> counts_;
};

Chips total_chips(const ChipConfig& d);

/// A set of non-sink vertices, stored sorted and duplicate-free, 1-based.
using VertexSet = std::vector<int>;

/// Parses "1,2,4"; sorts and rejects duplicates.
VertexSet parse_vertex_set(std::string_view text);
std::string vertex_set_str(const VertexSet& s);

/// Throws InputError unless s is sorted, duplicate-free and within 1..n.
void validate_vertex_set(const VertexSet& s, int n);

/// Vertices ordered poorest to richest: by chip count, ties by vertex index.
std::vector<int> poorest_to_richest(const ChipConfig& d);

}  // namespace ratchip
