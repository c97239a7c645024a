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

#ifndef HRT_BOUNDS_HPP
#define HRT_BOUNDS_HPP

#include <span>
#include <vector>

#include <hrt/integer.hpp>

namespace hrt
{

/// Graded free module F = S e_1 + ... + S e_r over S = k[x_1..x_n] with
/// generator degrees f_1 <= ... <= f_r.
class FreeModuleShape
{
public:
    /// Throws std::invalid_argument for n < 1, r < 1 or unsorted degrees.
    FreeModuleShape(int n, std::vector<int> degrees);

    int variables() const noexcept
    {
        return m_n;
    }
    int rank() const noexcept
    {
        return static_cast<int>(m_degrees.size());
    }
    const std::vector<int> &degrees() const noexcept
    {
        return m_degrees;
    }

    /// d_i = m - f_i for every component, non-increasing.
    std::vector<int> component_degrees(int m) const;
    /// N_i = dim S_{m - f_i}, zero when m < f_i.
    std::vector<Integer> capacities(int m) const;
    /// dim F_m.
    Integer dimension(int m) const;

    friend bool operator==(const FreeModuleShape &, const FreeModuleShape &) = default;

private:
    int m_n;
    std::vector<int> m_degrees;
};

/// Evaluated form of the piecewise module bound: the components after the
/// pivot are full, the pivot component carries the remainder.
struct BoundBreakdown {
    int pivot = 1; // 1-based
    std::vector<int> component_degrees;
    std::vector<Integer> capacities;
    Integer head;
    Integer head_term;
    std::vector<Integer> tail_terms; // components pivot+1 .. r
    Integer total;
};

/// Bound on the restriction of one component of degree d holding `value`
/// monomials: kappa for d >= 1, the identity in degree 0, zero below.
Integer component_bound(const Integer &value, int d);

/// Green's bound for a quotient of S with Hilbert value h in degree d.
/// Degree 0 returns h unchanged.
Integer green_bound(const Integer &h, int d);

/// Right-hand side of the two-summand inequality with d1 >= d2 >= 0.
/// Throws capacity_error naming "a" or "b" when a > N_1 or b > N_2, and
/// std::invalid_argument when d1 < d2.
Integer rank2_bound(const Integer &a, const Integer &b, int d1, int d2, int n);

/// Piecewise bound for a total of h spread over components of degrees
/// d_1 >= ... >= d_r in n variables.  Picks the largest pivot j with
/// sum_{i>j} N_i <= h <= sum_{i>=j} N_i.
BoundBreakdown summand_bound(const Integer &h, int n, std::span<const int> degrees);

/// Same with an explicit 1-based pivot; throws std::invalid_argument when the
/// pivot does not sandwich h.
BoundBreakdown summand_bound_at(const Integer &h, int n, std::span<const int> degrees, int pivot);

/// H(F/M, m)_{m,r} for a quotient with Hilbert value h in degree m.
/// Throws capacity_error when h > dim F_m and std::domain_error when h < 0.
BoundBreakdown module_bound(const Integer &h, int m, const FreeModuleShape &shape);
BoundBreakdown module_bound_at(const Integer &h, int m, const FreeModuleShape &shape, int pivot);

/// a_{i} = q kappa(s_i, i) + kappa(r, i) with a = q s_i + r, s_i = dim S_i.
Integer braced_bound(const Integer &a, int i, int n);

/// (n - 1) / (n + d - 1) * h, exactly.  The factor is 1 at d = 0.
Rational scaled_bound(const Integer &h, int n, int d);

} // namespace hrt

#endif
