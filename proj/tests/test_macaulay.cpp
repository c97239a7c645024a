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
#include <stdexcept>
#include <vector>

#include <hrt/macaulay.hpp>

#include "oracles.hpp"
#include "properties.hpp"

using hrt::Integer;

namespace
{

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

// Arbitrary-precision Pascal triangle, rows 0..n_max.
std::vector<std::vector<Integer>> big_pascal(int n_max)
{
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        auto &row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n + 1), 1);
        for (int k = 1; k < n; ++k) {
            row[static_cast<std::size_t>(k)] =
                rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        }
    }
    return rows;
}

} // namespace

TEST_CASE("binomial: small values and the zero convention")
{
    CHECK(hrt::binomial(5, 3) == 10);
    CHECK(hrt::binomial(2, 3) == 0);
    CHECK(hrt::binomial(0, 0) == 1);
    CHECK(hrt::binomial(7, 0) == 1);
    CHECK_THROWS_AS(hrt::binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(hrt::binomial(3, -1), std::domain_error);
}

TEST_CASE("binomial agrees with Pascal's triangle up to n = 200")
{
    const auto P = big_pascal(200);
    for (int n = 0; n <= 200; ++n) {
        for (int k = 0; k <= n + 2; ++k) {
            const Integer expected = k <= n ? P[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : Integer(0);
            REQUIRE(hrt::binomial(n, k) == expected);
        }
    }
}

TEST_CASE("macaulay_rep: worked examples")
{
    const auto r8 = hrt::macaulay_rep(8, 3);
    CHECK(r8.numerators() == ints({4, 3, 1}));
    CHECK(r8.delta() == 1);
    CHECK(r8.expansion() == "C(4,3)+C(3,2)+C(1,1)");

    const auto r10 = hrt::macaulay_rep(10, 3);
    CHECK(r10.numerators() == ints({5}));
    CHECK(r10.delta() == 3);

    const auto r0 = hrt::macaulay_rep(0, 4);
    CHECK(r0.empty());
    CHECK(hrt::rep_value(r0) == 0);
    CHECK(r0.expansion() == "0");
}

TEST_CASE("macaulay_rep: rejects degenerate input")
{
    CHECK_THROWS_AS(hrt::macaulay_rep(5, 0), std::domain_error);
    CHECK_THROWS_AS(hrt::macaulay_rep(-1, 3), std::domain_error);
    CHECK_THROWS_AS(hrt::kappa(5, 0), std::domain_error);
}

TEST_CASE("MacaulayRep constructor enforces canonical form")
{
    CHECK_NOTHROW(hrt::MacaulayRep(3, ints({4, 3, 1})));
    CHECK_THROWS_AS(hrt::MacaulayRep(3, ints({4, 4, 1})), std::invalid_argument);
    CHECK_THROWS_AS(hrt::MacaulayRep(3, ints({4, 1})), std::invalid_argument); // a_2 = 1 < 2
    CHECK_THROWS_AS(hrt::MacaulayRep(2, ints({5, 3, 1})), std::invalid_argument);
    CHECK_THROWS_AS(hrt::MacaulayRep(0, {}), std::domain_error);
}

TEST_CASE("rep_value: examples")
{
    CHECK(hrt::rep_value(hrt::MacaulayRep(3, ints({4, 3, 1}))) == 8);
    CHECK(hrt::rep_value(hrt::MacaulayRep(3, ints({5}))) == 10);
    CHECK(hrt::rep_value(hrt::MacaulayRep(2, {})) == 0);
}

TEST_CASE("extended view pads with zeros down to degree 1")
{
    CHECK(hrt::macaulay_rep(8, 3).extended() == ints({4, 3, 1}));
    CHECK(hrt::macaulay_rep(7, 3).extended() == ints({4, 3, 0}));
    CHECK(hrt::macaulay_rep(10, 3).extended() == ints({5, 0, 0}));
    CHECK(hrt::macaulay_rep(0, 2).extended() == ints({0, 0}));
}

TEST_CASE("kappa: examples")
{
    CHECK(hrt::kappa(8, 3) == 2);
    CHECK(hrt::kappa(10, 3) == 4);
    for (int d = 1; d <= 6; ++d) {
        CHECK(hrt::kappa(0, d) == 0);
    }
    CHECK(hrt::kappa(hrt::macaulay_rep(8, 3)) == 2);
}

TEST_CASE("kappa matches an independent greedy on machine integers")
{
    const oracle::Pascal C(3000, 10);
    for (int d = 1; d <= 8; ++d) {
        for (std::uint64_t a = 0; a <= 2500; ++a) {
            REQUIRE(hrt::kappa(Integer(a), d) == oracle::kappa_greedy(C, a, d));
            REQUIRE(hrt::kappa(Integer(a), d) <= a);
        }
    }
}

TEST_CASE("kappa of a full degree-d space drops one variable")
{
    for (int n = 1; n <= 8; ++n) {
        for (int d = 1; d <= 8; ++d) {
            CHECK(hrt::kappa(hrt::binomial(n + d - 1, d), d) == hrt::binomial(n + d - 2, d));
        }
    }
}

TEST_CASE("rep_compare: examples")
{
    CHECK(hrt::rep_compare(8, 7, 3) == std::strong_ordering::greater);
    CHECK(hrt::rep_compare(5, 5, 2) == std::strong_ordering::equal);
    CHECK(hrt::rep_compare(0, 1, 2) == std::strong_ordering::less);
    CHECK_THROWS_AS(hrt::rep_compare(hrt::macaulay_rep(3, 2), hrt::macaulay_rep(3, 3)), std::invalid_argument);
}

TEST_CASE("large values round-trip across the machine-word boundary")
{
    const Integer two62 = Integer(1) << 62;
    std::vector<Integer> probes;
    for (int k = -3; k <= 3; ++k) {
        probes.push_back(two62 + k);
    }
    probes.push_back(Integer(1) << 64);
    probes.push_back(Integer("123456789012345678901234567890123456789"));
    probes.push_back(hrt::binomial(300, 7));
    probes.push_back(hrt::binomial(300, 7) - 1);
    for (int d : {1, 2, 3, 7, 12, 25}) {
        for (const auto &a : probes) {
            const auto rep = hrt::macaulay_rep(a, d);
            CHECK(hrt::rep_value(rep) == a);
            CHECK(hrt::kappa(a, d) == hrt::kappa(rep));
            CHECK(hrt::kappa(a, d) <= a);
        }
    }
    CHECK(hrt::macaulay_rep(hrt::binomial(300, 7), 7).numerators() == ints({300}));
    CHECK(hrt::kappa(hrt::binomial(300, 7), 7) == hrt::binomial(299, 7));
}

TEST_CASE("order agreement on random large pairs")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const Integer a = (Integer(rng()) << 40) + rng() % 1000;
        const Integer b = (Integer(rng()) << 40) + rng() % 1000;
        const int d = 1 + static_cast<int>(rng() % 10);
        const auto expected = a < b ? std::strong_ordering::less
                              : a > b ? std::strong_ordering::greater
                                      : std::strong_ordering::equal;
        REQUIRE(hrt::rep_compare(a, b, d) == expected);
    }
}

TEST_CASE("monomial_count")
{
    CHECK(hrt::monomial_count(3, 2) == 6);
    CHECK(hrt::monomial_count(2, 0) == 1);
    CHECK(hrt::monomial_count(3, -1) == 0);
}

TEST_CASE("property: round-trip (reduced range)")
{
    const auto r = props::round_trip(20000, 12);
    INFO(r.first_failure);
    CHECK(r.passed());
}

TEST_CASE("property: uniqueness against exhaustive search")
{
    const auto r = props::uniqueness(2000, 6);
    INFO(r.first_failure);
    CHECK(r.passed());
}

TEST_CASE("property: order agreement (reduced range)")
{
    const auto r = props::order_agreement(400, 6);
    INFO(r.first_failure);
    CHECK(r.passed());
}

TEST_CASE("property: kappa is monotone in a")
{
    const auto r = props::kappa_monotone(2000, 6);
    INFO(r.first_failure);
    CHECK(r.passed());
}
