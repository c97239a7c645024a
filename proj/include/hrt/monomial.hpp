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

#ifndef HRT_MONOMIAL_HPP
#define HRT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include <hrt/bounds.hpp>
#include <hrt/integer.hpp>

namespace hrt
{

/// Dense exponent vector x_1^{e_1} ... x_n^{e_n}.
class Monomial
{
public:
    /// Throws std::invalid_argument on a negative exponent or n == 0.
    explicit Monomial(std::vector<int> exponents);

    static Monomial unit(int n);

    int variables() const noexcept
    {
        return static_cast<int>(m_exponents.size());
    }
    int degree() const noexcept
    {
        return m_degree;
    }
    const std::vector<int> &exponents() const noexcept
    {
        return m_exponents;
    }
    int operator[](std::size_t i) const
    {
        return m_exponents[i];
    }

    bool divides(const Monomial &other) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<int> m_exponents;
    int m_degree = 0;
};

// Orders on S with x_1 > x_2 > ... > x_n.  The degree-compatible ones compare
// total degree first.
std::strong_ordering lex_compare(const Monomial &a, const Monomial &b);
std::strong_ordering deglex_compare(const Monomial &a, const Monomial &b);
std::strong_ordering revlex_compare(const Monomial &a, const Monomial &b);

/// Monomial ideal kept as its minimal generating set.
class MonomialIdeal
{
public:
    explicit MonomialIdeal(int n, std::vector<Monomial> generators = {});

    int variables() const noexcept
    {
        return m_n;
    }
    /// Minimal generators, deglex-decreasing.
    const std::vector<Monomial> &generators() const noexcept
    {
        return m_generators;
    }
    bool contains(const Monomial &m) const;

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
    int m_n;
    std::vector<Monomial> m_generators;
};

/// m e_i with a 0-based component index.
struct ModuleMonomial {
    std::size_t component;
    Monomial monomial;

    int degree(const FreeModuleShape &shape) const
    {
        return monomial.degree() + shape.degrees()[component];
    }

    friend bool operator==(const ModuleMonomial &, const ModuleMonomial &) = default;
};

/// M = I_1 e_1 + ... + I_r e_r inside F.
class MonomialModule
{
public:
    /// Throws std::invalid_argument unless there is one ideal per component,
    /// all in the shape's variable count.
    MonomialModule(FreeModuleShape shape, std::vector<MonomialIdeal> components);

    static MonomialModule zero(const FreeModuleShape &shape);

    /// Module generated by a set of module monomials.
    static MonomialModule generated_by(const FreeModuleShape &shape, const std::vector<ModuleMonomial> &gens);

    const FreeModuleShape &shape() const noexcept
    {
        return m_shape;
    }
    const std::vector<MonomialIdeal> &components() const noexcept
    {
        return m_components;
    }
    bool contains(const ModuleMonomial &u) const;

    friend bool operator==(const MonomialModule &, const MonomialModule &) = default;

private:
    FreeModuleShape m_shape;
    std::vector<MonomialIdeal> m_components;
};

/// All monomials of S_d in n variables, strictly lex-decreasing.
std::vector<Monomial> enumerate_monomials(int n, int d);

/// Monomial basis of F_m, deglex-decreasing (component 1 first).
std::vector<ModuleMonomial> module_monomials(const FreeModuleShape &shape, int m);

/// Position-over-term: smaller component index wins, deglex inside a component.
std::strong_ordering deglex_compare(const ModuleMonomial &u, const ModuleMonomial &v, const FreeModuleShape &shape);

/// Term-over-position: module degree, then degrevlex on S, then smaller
/// component index.
std::strong_ordering revlex_compare(const ModuleMonomial &u, const ModuleMonomial &v, const FreeModuleShape &shape);

/// The k lex-largest monomials of S_d.  Throws capacity_error if k > dim S_d.
std::vector<Monomial> lex_segment(int n, int d, std::size_t k);

/// The k deglex-largest monomials of F_m.  Throws capacity_error if
/// k > dim F_m.
std::vector<ModuleMonomial> lex_module_slice(const FreeModuleShape &shape, int m, std::size_t k);

/// Monomials of F_m lying in M, deglex-decreasing.
std::vector<ModuleMonomial> degree_part(const MonomialModule &module, int m);

/// dim (F/M)_m.
Integer hilbert_value_module(const MonomialModule &module, int m);

/// dim (F/(M + x_n F))_m: monomials of F_m outside M with no x_n.
Integer restrict_xn_count(const MonomialModule &module, int m);

/// True when the degree-m part of M is exactly a deglex-top slice of F_m.
bool is_lex_slice(const MonomialModule &module, int m);

} // namespace hrt

#endif
