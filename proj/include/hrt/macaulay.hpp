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

#ifndef HRT_MACAULAY_HPP
#define HRT_MACAULAY_HPP

#include <compare>
#include <string>
#include <vector>

#include <hrt/integer.hpp>

namespace hrt
{

/// Exact binomial coefficient C(n, k), with C(n, k) = 0 whenever n < k.
/// Throws std::domain_error on negative arguments.
Integer binomial(const Integer &n, const Integer &k);

/// The d-th Macaulay representation
///
///     a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_delta, delta),
///
/// with a_d > a_{d-1} > ... > a_delta >= delta >= 1.  Numerators are stored
/// highest degree first.  The representation of zero is empty and reports
/// delta() == d + 1, so that numerators().size() == d - delta() + 1 always.
class MacaulayRep
{
public:
    /// Validates strict decrease, length <= d and a_delta >= delta.
    MacaulayRep(int d, std::vector<Integer> numerators);

    int degree() const noexcept
    {
        return m_degree;
    }
    int delta() const noexcept
    {
        return m_degree + 1 - static_cast<int>(m_numerators.size());
    }
    bool empty() const noexcept
    {
        return m_numerators.empty();
    }
    const std::vector<Integer> &numerators() const noexcept
    {
        return m_numerators;
    }

    /// Numerator attached to degree i (1 <= i <= d); zero past delta.
    Integer numerator(int i) const;

    /// Zero-padded view (a_d, ..., a_1).
    std::vector<Integer> extended() const;

    /// "C(4,3)+C(3,2)+C(1,1)", or "0" for the empty representation.
    std::string expansion() const;

    friend bool operator==(const MacaulayRep &, const MacaulayRep &) = default;

private:
    int m_degree;
    std::vector<Integer> m_numerators;
};

/// Greedy construction of the d-th Macaulay representation of a >= 0.
/// Throws std::domain_error for d < 1 or a < 0.
MacaulayRep macaulay_rep(const Integer &a, int d);

/// Sum of C(a_i, i) over the representation.
Integer rep_value(const MacaulayRep &rep);

/// a_<d>: every numerator decremented, C(c, i) = 0 when c < i.
Integer kappa(const MacaulayRep &rep);
Integer kappa(const Integer &a, int d);

/// Lexicographic comparison of the zero-padded numerator vectors.  Both
/// representations must share the same base; throws std::invalid_argument
/// otherwise.
std::strong_ordering rep_compare(const MacaulayRep &a, const MacaulayRep &b);
std::strong_ordering rep_compare(const Integer &a, const Integer &b, int d);

/// Number of monomials of degree d in n variables (zero for d < 0, and for
/// n == 0 unless d == 0).
Integer monomial_count(int n, int d);

} // namespace hrt

#endif
