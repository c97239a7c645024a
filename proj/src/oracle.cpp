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

#include <hrt/oracle.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <hrt/bounds.hpp>
#include <hrt/prime_field.hpp>

namespace hrt
{

namespace
{

using Key = std::pair<std::size_t, std::vector<int>>;

std::vector<std::uint64_t> draw_form(int n, std::uint64_t p, std::uint64_t seed, int trial)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint64_t> any(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = any(rng);
    }
    coeffs.back() = nonzero(rng);
    return coeffs;
}

} // namespace

Integer restriction_dim_for_form(const MonomialModule &module, int m, std::uint64_t p,
                                 const std::vector<std::uint64_t> &coeffs)
{
    const auto &shape = module.shape();
    const int n = shape.variables();
    if (coeffs.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("linear form needs one coefficient per variable");
    }

    const auto basis = module_monomials(shape, m);
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index.emplace(Key{basis[i].component, basis[i].monomial.exponents()}, i);
    }

    const auto in_module = degree_part(module, m);
    const auto lower = module_monomials(shape, m - 1);
    PrimeFieldMatrix mat(p, in_module.size() + lower.size(), basis.size());

    std::size_t row = 0;
    for (const auto &u : in_module) {
        mat.set(row++, index.at(Key{u.component, u.monomial.exponents()}), 1);
    }
    // l * (v e_i) = sum_k c_k x_k v e_i
    for (const auto &w : lower) {
        auto exps = w.monomial.exponents();
        for (std::size_t k = 0; k < exps.size(); ++k) {
            if (coeffs[k] % p == 0) {
                continue;
            }
            ++exps[k];
            mat.add(row, index.at(Key{w.component, exps}), coeffs[k]);
            --exps[k];
        }
        ++row;
    }
    return Integer(basis.size()) - Integer(mat.rank());
}

RestrictionReport generic_restriction_dim(const MonomialModule &module, int m, std::uint64_t p, int trials,
                                          std::uint64_t seed)
{
    if (trials < 1) {
        throw std::invalid_argument("at least one trial is required");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    }
    const auto &shape = module.shape();
    const Integer dim = shape.dimension(m);
    if (Integer(p) <= 2 * dim) {
        throw std::invalid_argument("p = " + std::to_string(p) + " must exceed 2 dim F_m = " + Integer(2 * dim).str());
    }

    RestrictionReport rep{module, m, p, trials, seed, {}, 0, 0, false, false, false};
    for (int t = 0; t < trials; ++t) {
        rep.dims.push_back(restriction_dim_for_form(module, m, p, draw_form(shape.variables(), p, seed, t)));
    }
    rep.generic_dim = *std::min_element(rep.dims.begin(), rep.dims.end());
    rep.bound = module_bound(hilbert_value_module(module, m), m, shape).total;
    rep.lex_slice = is_lex_slice(module, m);
    rep.holds = rep.generic_dim <= rep.bound;
    rep.equality = rep.generic_dim == rep.bound;
    return rep;
}

RestrictionReport certify_main_theorem(const MonomialModule &module, int m, std::uint64_t p, int trials,
                                       std::uint64_t seed)
{
    auto rep = generic_restriction_dim(module, m, p, trials, seed);
    if (rep.lex_slice && !rep.equality) {
        rep.holds = false;
    }
    return rep;
}

Json report_to_json(const RestrictionReport &report)
{
    Json doc;
    doc["m"] = report.m;
    doc["p"] = report.p;
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    Json dims = Json::array();
    for (const auto &d : report.dims) {
        dims.push_back(integer_json(d));
    }
    doc["dims"] = std::move(dims);
    doc["generic_dim"] = integer_json(report.generic_dim);
    doc["bound"] = integer_json(report.bound);
    doc["holds"] = report.holds;
    doc["equality"] = report.equality;
    return doc;
}

} // namespace hrt
