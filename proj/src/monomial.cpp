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

#include <hrt/monomial.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hrt
{

namespace
{

std::strong_ordering compare_ints(int a, int b)
{
    return a <=> b;
}

void check_same_variables(const Monomial &a, const Monomial &b)
{
    if (a.variables() != b.variables()) {
        throw std::invalid_argument("monomials over different variable counts");
    }
}

// Fills exps[pos..] with every split of `remaining`, largest first exponent
// first; this emits S_d in lex-decreasing order without a sort.
void descend(std::vector<int> &exps, std::size_t pos, int remaining, std::vector<Monomial> &out)
{
    if (pos + 1 == exps.size()) {
        exps[pos] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        exps[pos] = e;
        descend(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}

} // namespace

Monomial::Monomial(std::vector<int> exponents) : m_exponents(std::move(exponents))
{
    if (m_exponents.empty()) {
        throw std::invalid_argument("monomial needs at least one variable");
    }
    for (int e : m_exponents) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent " + std::to_string(e));
        }
        m_degree += e;
    }
}

Monomial Monomial::unit(int n)
{
    return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

bool Monomial::divides(const Monomial &other) const
{
    check_same_variables(*this, other);
    for (std::size_t i = 0; i < m_exponents.size(); ++i) {
        if (m_exponents[i] > other.m_exponents[i]) {
            return false;
        }
    }
    return true;
}

std::strong_ordering lex_compare(const Monomial &a, const Monomial &b)
{
    check_same_variables(a, b);
    for (std::size_t i = 0; i < a.exponents().size(); ++i) {
        if (auto c = compare_ints(a[i], b[i]); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering deglex_compare(const Monomial &a, const Monomial &b)
{
    if (auto c = compare_ints(a.degree(), b.degree()); c != 0) {
        return c;
    }
    return lex_compare(a, b);
}

std::strong_ordering revlex_compare(const Monomial &a, const Monomial &b)
{
    check_same_variables(a, b);
    if (auto c = compare_ints(a.degree(), b.degree()); c != 0) {
        return c;
    }
    // The last differing exponent decides; the smaller one is the larger
    // monomial.
    for (std::size_t i = a.exponents().size(); i-- > 0;) {
        if (auto c = compare_ints(b[i], a[i]); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : m_n(n)
{
    if (n < 1) {
        throw std::invalid_argument("monomial ideal needs n >= 1");
    }
    for (const auto &g : generators) {
        if (g.variables() != n) {
            throw std::invalid_argument("generator has " + std::to_string(g.variables()) + " exponents, expected " +
                                        std::to_string(n));
        }
    }
    std::sort(generators.begin(), generators.end(),
              [](const Monomial &a, const Monomial &b) { return deglex_compare(a, b) < 0; });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // Ascending degree: anything dividing g was already kept.
    for (auto &g : generators) {
        const bool redundant =
            std::any_of(m_generators.begin(), m_generators.end(), [&](const Monomial &k) { return k.divides(g); });
        if (!redundant) {
            m_generators.push_back(std::move(g));
        }
    }
    std::reverse(m_generators.begin(), m_generators.end());
}

bool MonomialIdeal::contains(const Monomial &m) const
{
    return std::any_of(m_generators.begin(), m_generators.end(), [&](const Monomial &g) { return g.divides(m); });
}

MonomialModule::MonomialModule(FreeModuleShape shape, std::vector<MonomialIdeal> components)
    : m_shape(std::move(shape)), m_components(std::move(components))
{
    if (static_cast<int>(m_components.size()) != m_shape.rank()) {
        throw std::invalid_argument("expected " + std::to_string(m_shape.rank()) + " component ideals, got " +
                                    std::to_string(m_components.size()));
    }
    for (const auto &ideal : m_components) {
        if (ideal.variables() != m_shape.variables()) {
            throw std::invalid_argument("component ideal over the wrong number of variables");
        }
    }
}

MonomialModule MonomialModule::zero(const FreeModuleShape &shape)
{
    return MonomialModule(shape, std::vector<MonomialIdeal>(static_cast<std::size_t>(shape.rank()),
                                                            MonomialIdeal(shape.variables())));
}

MonomialModule MonomialModule::generated_by(const FreeModuleShape &shape, const std::vector<ModuleMonomial> &gens)
{
    std::vector<std::vector<Monomial>> per(static_cast<std::size_t>(shape.rank()));
    for (const auto &u : gens) {
        if (u.component >= per.size()) {
            throw std::invalid_argument("module monomial component out of range");
        }
        per[u.component].push_back(u.monomial);
    }
    std::vector<MonomialIdeal> ideals;
    for (auto &g : per) {
        ideals.emplace_back(shape.variables(), std::move(g));
    }
    return MonomialModule(shape, std::move(ideals));
}

bool MonomialModule::contains(const ModuleMonomial &u) const
{
    return m_components.at(u.component).contains(u.monomial);
}

std::vector<Monomial> enumerate_monomials(int n, int d)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_monomials needs n >= 1");
    }
    std::vector<Monomial> out;
    if (d < 0) {
        return out;
    }
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    descend(exps, 0, d, out);
    return out;
}

std::vector<ModuleMonomial> module_monomials(const FreeModuleShape &shape, int m)
{
    std::vector<ModuleMonomial> out;
    for (std::size_t i = 0; i < shape.degrees().size(); ++i) {
        for (auto &mono : enumerate_monomials(shape.variables(), m - shape.degrees()[i])) {
            out.push_back({i, std::move(mono)});
        }
    }
    return out;
}

std::strong_ordering deglex_compare(const ModuleMonomial &u, const ModuleMonomial &v, const FreeModuleShape &shape)
{
    if (u.component >= static_cast<std::size_t>(shape.rank()) || v.component >= static_cast<std::size_t>(shape.rank())) {
        throw std::invalid_argument("module monomial component out of range");
    }
    if (u.component != v.component) {
        return v.component <=> u.component;
    }
    return deglex_compare(u.monomial, v.monomial);
}

std::strong_ordering revlex_compare(const ModuleMonomial &u, const ModuleMonomial &v, const FreeModuleShape &shape)
{
    if (u.component >= static_cast<std::size_t>(shape.rank()) || v.component >= static_cast<std::size_t>(shape.rank())) {
        throw std::invalid_argument("module monomial component out of range");
    }
    if (auto c = compare_ints(u.degree(shape), v.degree(shape)); c != 0) {
        return c;
    }
    if (auto c = revlex_compare(u.monomial, v.monomial); c != 0) {
        return c;
    }
    return v.component <=> u.component;
}

std::vector<Monomial> lex_segment(int n, int d, std::size_t k)
{
    auto all = enumerate_monomials(n, d);
    if (k > all.size()) {
        throw capacity_error("k", "lex-segment of length " + std::to_string(k) + " in a space of dimension " +
                                      std::to_string(all.size()));
    }
    all.resize(k, Monomial::unit(n));
    return all;
}

std::vector<ModuleMonomial> lex_module_slice(const FreeModuleShape &shape, int m, std::size_t k)
{
    auto all = module_monomials(shape, m);
    if (k > all.size()) {
        throw capacity_error("k", "lex slice of length " + std::to_string(k) + " in F_m of dimension " +
                                      std::to_string(all.size()));
    }
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
    return all;
}

std::vector<ModuleMonomial> degree_part(const MonomialModule &module, int m)
{
    auto all = module_monomials(module.shape(), m);
    std::erase_if(all, [&](const ModuleMonomial &u) { return !module.contains(u); });
    return all;
}

Integer hilbert_value_module(const MonomialModule &module, int m)
{
    std::size_t count = 0;
    for (const auto &u : module_monomials(module.shape(), m)) {
        if (!module.contains(u)) {
            ++count;
        }
    }
    return count;
}

Integer restrict_xn_count(const MonomialModule &module, int m)
{
    const auto last = static_cast<std::size_t>(module.shape().variables() - 1);
    std::size_t count = 0;
    for (const auto &u : module_monomials(module.shape(), m)) {
        if (u.monomial[last] == 0 && !module.contains(u)) {
            ++count;
        }
    }
    return count;
}

bool is_lex_slice(const MonomialModule &module, int m)
{
    // Members of M must form a prefix of the deglex listing.
    bool seen_outside = false;
    for (const auto &u : module_monomials(module.shape(), m)) {
        if (module.contains(u)) {
            if (seen_outside) {
                return false;
            }
        } else {
            seen_outside = true;
        }
    }
    return true;
}

} // namespace hrt
