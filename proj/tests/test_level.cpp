// Copyright 2026 The hrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <sstream>

#include <hrt/bounds.hpp>
#include <hrt/level.hpp>
#include <hrt/macaulay.hpp>

#include "oracles.hpp"

using hrt::Integer;
using hrt::LevelHilbert;

namespace
{

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("LevelHilbert validation")
{
    CHECK_THROWS_AS(LevelHilbert(ints({1})), std::invalid_argument);
    CHECK_THROWS_AS(LevelHilbert(ints({1, 0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(LevelHilbert(ints({1, 2}), 0), std::invalid_argument);
    CHECK(LevelHilbert(ints({1, 3, 2})).socle_degree() == 2);
}

TEST_CASE("compute_hG and compute_hGM: table rows")
{
    const LevelHilbert a(ints({1, 3, 3, 3, 2}));
    CHECK(hrt::compute_hG(a) == ints({1, 2, 3, 2}));
    CHECK(hrt::compute_hGM(a) == ints({1, 3, 2, 1}));

    const LevelHilbert b(ints({1, 3, 6, 8, 5, 2}));
    CHECK(hrt::compute_hG(b) == ints({1, 3, 6, 4, 2}));
    CHECK(hrt::compute_hGM(b) == ints({1, 3, 5, 5, 2}));

    const LevelHilbert g(ints({1, 1}));
    CHECK(hrt::compute_hG(g) == ints({1}));
    CHECK(hrt::compute_hGM(g) == ints({1}));
}

TEST_CASE("compare_bounds: win positions")
{
    CHECK(hrt::compare_bounds(LevelHilbert(ints({1, 3, 3, 3, 2}))).win_positions == std::vector<int>{2});
    CHECK(hrt::compare_bounds(LevelHilbert(ints({1, 3, 6, 8, 5, 2}))).win_positions == std::vector<int>{4});
    CHECK(hrt::compare_bounds(LevelHilbert(ints({1, 3, 6, 10, 6, 2}))).win_positions == std::vector<int>{4});
    const auto cmp = hrt::compare_bounds(LevelHilbert(ints({1, 2, 1})));
    CHECK(cmp.hG.size() == 2);
    CHECK(cmp.hGM.size() == 2);
}

TEST_CASE("proposition conditions: examples")
{
    const LevelHilbert a(ints({1, 3, 3, 3, 2}));
    const auto c1 = hrt::proposition_conditions(a, 1);
    CHECK(c1.position_ok);
    CHECK(c1.plateau);
    CHECK(c1.below_capacity);
    CHECK(c1.all);
    CHECK(c1.conclusion_holds);

    const auto c3 = hrt::proposition_conditions(LevelHilbert(ints({1, 3, 6, 8, 5, 2})), 3);
    CHECK_FALSE(c3.plateau);
    CHECK_FALSE(c3.all);

    const auto g = hrt::proposition_conditions(LevelHilbert(ints({1, 1})), 0);
    CHECK(g.all);
    CHECK(g.conclusion_holds);

    CHECK_THROWS_AS(hrt::proposition_conditions(a, 4), std::out_of_range);
    CHECK_THROWS_AS(hrt::proposition_conditions(a, -1), std::out_of_range);
}

TEST_CASE("proposition conditions as stated admit a counterexample in the first table row")
{
    // h = (1,3,3,3,2), i = 2: 1 <= 2, h_2 = h_3 = 3, s_2 = 6 > 3, yet
    // hGM_2 = 3 - kappa(3,2) = 2 < hG_2 = 3 - kappa(3,3) = 3.
    const LevelHilbert a(ints({1, 3, 3, 3, 2}));
    const auto c = hrt::proposition_conditions(a, 2);
    CHECK(c.all);
    CHECK_FALSE(c.conclusion_holds);
    CHECK(hrt::compute_hGM(a)[2] == 2);
    CHECK(hrt::compute_hG(a)[2] == 3);
}

TEST_CASE("proposition with 2i + 1 <= c holds on a randomized sweep")
{
    // With h_i = h_{i+1} below s_{c-i} the braced bound has q = 0, so the
    // comparison is kappa(h, c-i) against kappa(h, i+1); degree monotonicity
    // of kappa needs c - i >= i + 1.
    std::mt19937_64 rng(2024);
    std::size_t literal_failures = 0, strengthened_cases = 0;
    for (int t = 0; t < 20000; ++t) {
        const int c = 1 + static_cast<int>(rng() % 8);
        std::vector<Integer> h{1};
        for (int i = 1; i <= c; ++i) {
            // Repeat the previous entry often so plateaus are common.
            h.push_back(rng() % 3 == 0 ? h.back() : Integer(1 + rng() % 20));
        }
        const LevelHilbert lh(h, 3);
        const auto hG = hrt::compute_hG(lh);
        const auto hGM = hrt::compute_hGM(lh);
        for (int i = 0; i < c; ++i) {
            const auto cond = hrt::proposition_conditions(lh, i);
            const auto ui = static_cast<std::size_t>(i);
            REQUIRE(cond.conclusion_holds == (!cond.all || hGM[ui] >= hG[ui]));
            if (!cond.conclusion_holds) {
                ++literal_failures;
                REQUIRE(2 * i + 1 > c);
            }
            if (cond.all && 2 * i + 1 <= c) {
                ++strengthened_cases;
                REQUIRE(hGM[ui] >= hG[ui]);
            }
        }
    }
    CHECK(strengthened_cases > 1000);
    CHECK(literal_failures > 0);
}

TEST_CASE("hGM reduces to h - kappa(h, c - i) below capacity")
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 2000; ++t) {
        const int c = 1 + static_cast<int>(rng() % 7);
        std::vector<Integer> h;
        for (int i = 0; i <= c; ++i) {
            h.push_back(1 + rng() % 30);
        }
        const LevelHilbert lh(h, 3);
        const auto hGM = hrt::compute_hGM(lh);
        for (int i = 0; i < c; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            if (h[ui] < hrt::monomial_count(3, c - i)) {
                REQUIRE(hGM[ui] == h[ui] - hrt::kappa(h[ui], c - i));
            }
        }
    }
}

TEST_CASE("hG against the independent greedy")
{
    const oracle::Pascal C(200, 12);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; ++t) {
        const int c = 1 + static_cast<int>(rng() % 8);
        std::vector<Integer> h;
        std::vector<std::uint64_t> raw;
        for (int i = 0; i <= c; ++i) {
            raw.push_back(1 + rng() % 40);
            h.push_back(raw.back());
        }
        const auto hG = hrt::compute_hG(LevelHilbert(h, 3));
        for (int i = 0; i < c; ++i) {
            const auto next = raw[static_cast<std::size_t>(i + 1)];
            REQUIRE(hG[static_cast<std::size_t>(i)] == next - oracle::kappa_greedy(C, next, i + 1));
        }
    }
}

TEST_CASE("table parsing")
{
    std::istringstream in("# comment\n\n2;1,3,3,3,2;1,3,2,1;1,2,3,2\n");
    const auto rows = hrt::parse_table(in);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].position == 2);
    CHECK(rows[0].h == ints({1, 3, 3, 3, 2}));
    CHECK(rows[0].hGM == ints({1, 3, 2, 1}));
    CHECK(rows[0].hG == ints({1, 2, 3, 2}));

    std::istringstream bad("2;1,3,3,3,2;1,3,2,1\n");
    try {
        hrt::parse_table(bad);
        FAIL("expected input_error");
    } catch (const hrt::input_error &e) {
        CHECK(e.field() == "line 1");
    }
    std::istringstream junk("2;1,3,x;1;1\n");
    CHECK_THROWS_AS(hrt::parse_table(junk), hrt::input_error);
    CHECK_THROWS_AS(hrt::read_table_file("/nonexistent/table.txt"), hrt::input_error);
}

TEST_CASE("bundled table reproduces row by row")
{
    const auto rows = hrt::read_table_file(hrt::default_table_path());
    REQUIRE(rows.size() == 21);
    const auto report = hrt::reproduce_table(rows);
    CHECK(report.passed());
    for (const auto &r : report.rows) {
        CHECK(r.hG_matches);
        CHECK(r.hGM_matches);
        CHECK(r.position_wins);
    }
    CHECK(hrt::reproduce_table({}).passed());
    CHECK(hrt::reproduce_table({}).rows.empty());
}

TEST_CASE("a corrupted row is reported, not hidden")
{
    std::istringstream in("3;1,3,3,3,2;1,3,2,1;1,2,3,2\n2;1,3,3,3,2;1,3,2,2;1,2,3,2\n");
    const auto report = hrt::reproduce_table(hrt::parse_table(in));
    REQUIRE(report.rows.size() == 2);
    CHECK_FALSE(report.rows[0].position_wins);
    CHECK(report.rows[0].hGM_matches);
    CHECK_FALSE(report.rows[1].hGM_matches);
    CHECK_FALSE(report.passed());
    const auto doc = hrt::table_report_to_json(report);
    CHECK(doc["passed"] == 0);
}

TEST_CASE("comparison JSON layout")
{
    const auto doc = hrt::comparison_to_json(hrt::compare_bounds(LevelHilbert(ints({1, 3, 3, 3, 2}))));
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"n", "h", "hGM", "hG", "positions", "conditions"});
    CHECK(doc["positions"] == hrt::Json::array({2}));
}
