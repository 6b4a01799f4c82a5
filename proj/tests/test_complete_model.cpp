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
#include <doctest.h>

#include <numeric>

#include "ratchip/complete_model.hpp"
#include "ratchip/core_model.hpp"

using namespace ratchip;

namespace {

template <class Fn>
void for_each_config(int b, Chips max_chip, Fn&& fn) {
    std::vector<Chips> v(static_cast<std::size_t>(b), 0);
    for (;;) {
        fn(ChipConfig(v));
        std::size_t i = 0;
        while (i < v.size() && v[i] == max_chip) {
            v[i] = 0;
            ++i;
        }
        if (i == v.size()) break;
        ++v[i];
    }
}

template <class Fn>
void for_each_nonempty_set(int b, Fn&& fn) {
    for (unsigned mask = 1; mask < (1u << b); ++mask) {
        VertexSet s;
        for (int v = 1; v <= b; ++v) {
            if (mask >> (v - 1) & 1u) s.push_back(v);
        }
        fn(s);
    }
}

}  // namespace

TEST_SUITE("complete_model") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(RatParams(4, 2), InputError);
    CHECK_THROWS_AS(RatParams(6, 3), InputError);
    CHECK_THROWS_AS(RatParams(0, 1), InputError);
    CHECK_THROWS_WITH_AS(RatParams(4, 2), doctest::Contains("general model"), InputError);
    RatParams p(7, 5);
    CHECK(p.a() == 7);
    CHECK(p.vertex_count() == 5);
}

TEST_CASE("offsets") {
    RatParams p75(7, 5);
    CHECK(offsets(p75, 1).loss == 6);
    CHECK(offsets(p75, 1).gain == 1);
    CHECK(offsets(p75, 2).loss == 5);
    CHECK(offsets(p75, 2).gain == 2);
    CHECK(offsets(p75, 3).loss == 3);
    CHECK(offsets(p75, 3).gain == 4);

    RatParams p85(8, 5);
    CHECK(offsets(p85, 2).loss == 5);
    CHECK(offsets(p85, 2).gain == 3);

    RatParams p53(5, 3);
    CHECK(offsets(p53, 1).loss == 4);
    CHECK(offsets(p53, 1).gain == 1);

    CHECK_THROWS_AS(offsets(p75, 0), InputError);
    CHECK_THROWS_AS(offsets(p75, 6), InputError);
}

TEST_CASE("offset identities across a parameter grid") {
    for (Chips a = 1; a <= 13; ++a) {
        for (Chips b = 1; b <= 9; ++b) {
            if (std::gcd(a, b) != 1) continue;
            RatParams p(a, b);
            for (Chips s = 1; s < b; ++s) {
                CHECK(offsets(p, s).loss + offsets(p, s).gain == a);
            }
            CHECK(offsets(p, b).loss == 1);
            // single-vertex threshold never exceeds a
            CHECK(offsets(p, 1).loss <= a);
            CHECK(offsets(p, 1).loss == 1 + a + floor_div(-a, b));
            // the duality offset is the (b-1)-set fire cost
            if (b >= 2) CHECK(min_trailing_easts(p) == offsets(p, b - 1).loss);
        }
    }
}

TEST_CASE("fire and borrow in closed form") {
    RatParams p53(5, 3);
    CHECK(fire_complete(p53, {5, 5, 5}, {1, 2}) == ChipConfig{3, 3, 8});
    CHECK(fire_complete(p53, {3, 3, 3}, {1, 2, 3}) == ChipConfig{2, 2, 2});

    RatParams p85(8, 5);
    CHECK(borrow_complete(p85, {1, 3, 0, 3, 5}, {1, 3}) == ChipConfig{6, 0, 5, 0, 2});

    CHECK_THROWS_AS(fire_complete(p53, {1, 1, 1}, {}), InputError);
    CHECK_THROWS_AS(fire_complete(p53, {1, 1, 1}, {4}), InputError);
}

TEST_CASE("closed form agrees with the general model on the complete graph") {
    for (auto [a, b] : {std::pair<Chips, Chips>{3, 2}, {5, 3}, {4, 3}, {2, 5}}) {
        RatParams p(a, b);
        SinkedGraph g = SinkedGraph::complete(static_cast<int>(b));
        GeneralParams gp(a, b, 1);
        for_each_config(static_cast<int>(b), a, [&](const ChipConfig& d) {
            for_each_nonempty_set(static_cast<int>(b), [&](const VertexSet& s) {
                CHECK(fire_complete(p, d, s) == cluster_fire(g, gp, d, s));
                CHECK(borrow_complete(p, d, s) == borrow_general(g, gp, d, s));
            });
            for (int k = 0; k < b; ++k) {
                CHECK(is_k_stable(p, d, k) == is_k_stable_general(g, gp, d, k));
            }
        });
    }
}

TEST_CASE("k-stability") {
    RatParams p(7, 5);
    CHECK(is_k_stable(p, {4, 4, 0, 2, 2}, 2));
    CHECK_FALSE(is_k_stable(p, {5, 5, 1, 3, 3}, 2));
    CHECK(is_k_stable(p, {2, 2, 5, 0, 0}, 2));
    // an entry >= a can always fire alone
    for (int k = 0; k < 5; ++k) CHECK_FALSE(is_k_stable(p, {7, 0, 0, 0, 0}, k));
    CHECK_THROWS_AS(is_k_stable(p, {0, 0, 0, 0, -1}, 0), InputError);
    CHECK_THROWS_AS(is_k_stable(p, {0, 0, 0, 0, 0}, 5), InputError);
}

TEST_CASE("integral reduction when a = m*b + 1") {
    for (auto [m, b] : {std::pair<Chips, Chips>{1, 3}, {2, 4}, {3, 2}}) {
        Chips a = m * b + 1;
        RatParams p(a, b);
        for (Chips s = 1; s <= b; ++s) {
            CHECK(offsets(p, s).loss == 1 + m * (b - s));
            if (s < b) CHECK(offsets(p, s).gain == m * s);
        }
    }
}

TEST_CASE("superstable parking test") {
    RatParams p(5, 3);
    CHECK(is_superstable_parking(p, {0, 0, 0}));
    CHECK_FALSE(is_superstable_parking(p, {3, 3, 3}));
    CHECK_FALSE(is_superstable_parking(p, {-1, 0, 0}));

    // 25 = a^(b-1) superstable configurations among {0..a-1}^b
    int count = 0;
    for_each_config(3, 4, [&](const ChipConfig& d) {
        if (is_superstable_parking(p, d)) ++count;
    });
    CHECK(count == 25);

    // agreement with (b-1)-stability over {0..a}^b
    for_each_config(3, 5, [&](const ChipConfig& d) {
        CHECK(is_superstable_parking(p, d) == is_k_stable(p, d, 2));
    });
}

TEST_CASE("poorest-to-richest order breaks ties by vertex index") {
    CHECK(poorest_to_richest(ChipConfig{5, 5, 1}) == std::vector<int>{3, 1, 2});
    CHECK(poorest_to_richest(ChipConfig{2, 0, 2}) == std::vector<int>{2, 1, 3});
    CHECK(poorest_to_richest(ChipConfig{1, 3, 0, 3, 5}) == std::vector<int>{3, 1, 2, 4, 5});
}

}  // TEST_SUITE
