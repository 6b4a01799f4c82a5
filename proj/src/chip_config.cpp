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
#include "ratchip/chip_config.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ratchip {

namespace {

Chips parse_int(std::string_view tok, const char* what) {
    std::size_t lo = tok.find_first_not_of(" \t");
    std::size_t hi = tok.find_last_not_of(" \t");
    if (lo == std::string_view::npos) throw InputError(std::string("empty entry in ") + what);
    tok = tok.substr(lo, hi - lo + 1);
    Chips value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw InputError(std::string("malformed integer '") + std::string(tok) + "' in " + what);
    }
    return value;
}

std::vector<Chips> split_ints(std::string_view text, const char* what) {
    std::vector<Chips> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view tok = (comma == std::string_view::npos)
                                   ? text.substr(start)
                                   : text.substr(start, comma - start);
        out.push_back(parse_int(tok, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

ChipConfig ChipConfig::zeros(int n) {
    if (n < 1) throw InputError("configuration needs at least one vertex");
    return ChipConfig(std::vector<Chips>(static_cast<std::size_t>(n), 0));
}

ChipConfig ChipConfig::parse(std::string_view text) {
    return ChipConfig(split_ints(text, "configuration"));
}

std::string ChipConfig::str() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out;
}

Chips ChipConfig::at(int vertex) const {
    if (vertex < 1 || vertex > size()) {
        throw InputError("vertex " + std::to_string(vertex) + " out of range 1.." +
                         std::to_string(size()));
    }
    return counts_[static_cast<std::size_t>(vertex - 1)];
}

Chips& ChipConfig::at(int vertex) {
    if (vertex < 1 || vertex > size()) {
        throw InputError("vertex " + std::to_string(vertex) + " out of range 1.." +
                         std::to_string(size()));
    }
    return counts_[static_cast<std::size_t>(vertex - 1)];
}

bool ChipConfig::nonnegative() const {
    return std::all_of(counts_.begin(), counts_.end(), [](Chips c) { return c >= 0; });
}

Chips total_chips(const ChipConfig& d) {
    Chips sum = 0;
    for (Chips c : d.counts()) sum = checked_add(sum, c);
    return sum;
}

VertexSet parse_vertex_set(std::string_view text) {
    std::vector<Chips> raw = split_ints(text, "vertex set");
    VertexSet s;
    s.reserve(raw.size());
    for (Chips v : raw) {
        if (v < 1 || v > (1 << 30)) throw InputError("vertex index out of range: " + std::to_string(v));
        s.push_back(static_cast<int>(v));
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw InputError("duplicate vertex in set");
    }
    return s;
}

std::string vertex_set_str(const VertexSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

void validate_vertex_set(const VertexSet& s, int n) {
    int prev = 0;
    for (int v : s) {
        if (v < 1 || v > n) {
            throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        if (v <= prev) throw InputError("vertex set must be sorted and duplicate-free");
        prev = v;
    }
}

std::vector<int> poorest_to_richest(const ChipConfig& d) {
    std::vector<int> order(static_cast<std::size_t>(d.size()));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (d.at(i) != d.at(j)) return d.at(i) < d.at(j);
        return i < j;
    });
    return order;
}

}  // namespace ratchip
