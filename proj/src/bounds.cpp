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

#include <hrt/bounds.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <hrt/macaulay.hpp>

namespace hrt
{

namespace
{

void check_variables(int n)
{
    if (n < 1) {
        throw std::invalid_argument("number of variables must be >= 1");
    }
}

void check_non_increasing(std::span<const int> degrees)
{
    if (degrees.empty()) {
        throw std::invalid_argument("at least one component is required");
    }
    if (!std::is_sorted(degrees.begin(), degrees.end(), std::greater<>{})) {
        throw std::invalid_argument("component degrees must be non-increasing");
    }
}

std::vector<Integer> capacities_of(int n, std::span<const int> degrees)
{
    std::vector<Integer> caps;
    caps.reserve(degrees.size());
    for (int d : degrees) {
        caps.push_back(monomial_count(n, d));
    }
    return caps;
}

BoundBreakdown evaluate(const Integer &h, std::span<const int> degrees, std::vector<Integer> caps, int pivot)
{
    BoundBreakdown out;
    out.pivot = pivot;
    out.component_degrees.assign(degrees.begin(), degrees.end());
    const auto j = static_cast<std::size_t>(pivot - 1);
    Integer tail = 0;
    for (std::size_t i = j + 1; i < caps.size(); ++i) {
        tail += caps[i];
        out.tail_terms.push_back(component_bound(caps[i], degrees[i]));
    }
    out.head = h - tail;
    out.head_term = component_bound(out.head, degrees[j]);
    out.total = out.head_term;
    for (const auto &t : out.tail_terms) {
        out.total += t;
    }
    out.capacities = std::move(caps);
    return out;
}

void check_total(const Integer &h, const std::vector<Integer> &caps)
{
    if (h < 0) {
        throw std::domain_error("Hilbert value must be non-negative");
    }
    Integer sum = 0;
    for (const auto &c : caps) {
        sum += c;
    }
    if (h > sum) {
        throw capacity_error("h", "Hilbert value " + h.str() + " exceeds the dimension " + sum.str());
    }
}

} // namespace

FreeModuleShape::FreeModuleShape(int n, std::vector<int> degrees) : m_n(n), m_degrees(std::move(degrees))
{
    check_variables(n);
    if (m_degrees.empty()) {
        throw std::invalid_argument("free module needs rank >= 1");
    }
    if (!std::is_sorted(m_degrees.begin(), m_degrees.end())) {
        throw std::invalid_argument("generator degrees must be sorted non-decreasing");
    }
}

std::vector<int> FreeModuleShape::component_degrees(int m) const
{
    std::vector<int> out;
    out.reserve(m_degrees.size());
    for (int f : m_degrees) {
        out.push_back(m - f);
    }
    return out;
}

std::vector<Integer> FreeModuleShape::capacities(int m) const
{
    return capacities_of(m_n, component_degrees(m));
}

Integer FreeModuleShape::dimension(int m) const
{
    Integer sum = 0;
    for (const auto &c : capacities(m)) {
        sum += c;
    }
    return sum;
}

Integer component_bound(const Integer &value, int d)
{
    if (d < 0) {
        return 0;
    }
    if (d == 0) {
        return value;
    }
    return kappa(value, d);
}

Integer green_bound(const Integer &h, int d)
{
    if (d < 0) {
        throw std::domain_error("green_bound: negative degree");
    }
    if (h < 0) {
        throw std::domain_error("green_bound: negative Hilbert value");
    }
    return component_bound(h, d);
}

Integer rank2_bound(const Integer &a, const Integer &b, int d1, int d2, int n)
{
    check_variables(n);
    if (d1 < d2) {
        throw std::invalid_argument("rank2_bound requires d1 >= d2");
    }
    if (d2 < 0) {
        throw std::domain_error("rank2_bound requires d2 >= 0");
    }
    if (a < 0 || b < 0) {
        throw std::domain_error("rank2_bound: negative summand");
    }
    const Integer n1 = monomial_count(n, d1);
    const Integer n2 = monomial_count(n, d2);
    if (a > n1) {
        throw capacity_error("a", "a = " + a.str() + " exceeds N_1 = " + n1.str());
    }
    if (b > n2) {
        throw capacity_error("b", "b = " + b.str() + " exceeds N_2 = " + n2.str());
    }
    const Integer s = a + b;
    if (s <= n2) {
        return component_bound(s, d2);
    }
    return component_bound(s - n2, d1) + component_bound(n2, d2);
}

BoundBreakdown summand_bound(const Integer &h, int n, std::span<const int> degrees)
{
    check_variables(n);
    check_non_increasing(degrees);
    auto caps = capacities_of(n, degrees);
    check_total(h, caps);
    // Largest j with h <= sum_{i>=j} N_i; the lower sandwich side then holds
    // because pivot j + 1 failed.
    Integer suffix = 0;
    int pivot = static_cast<int>(caps.size());
    for (; pivot >= 1; --pivot) {
        suffix += caps[static_cast<std::size_t>(pivot - 1)];
        if (h <= suffix) {
            break;
        }
    }
    return evaluate(h, degrees, std::move(caps), pivot);
}

BoundBreakdown summand_bound_at(const Integer &h, int n, std::span<const int> degrees, int pivot)
{
    check_variables(n);
    check_non_increasing(degrees);
    auto caps = capacities_of(n, degrees);
    check_total(h, caps);
    if (pivot < 1 || pivot > static_cast<int>(caps.size())) {
        throw std::invalid_argument("pivot outside 1..r");
    }
    Integer tail = 0;
    for (std::size_t i = static_cast<std::size_t>(pivot); i < caps.size(); ++i) {
        tail += caps[i];
    }
    if (h < tail || h > tail + caps[static_cast<std::size_t>(pivot - 1)]) {
        throw std::invalid_argument("pivot " + std::to_string(pivot) + " does not sandwich h = " + h.str());
    }
    return evaluate(h, degrees, std::move(caps), pivot);
}

BoundBreakdown module_bound(const Integer &h, int m, const FreeModuleShape &shape)
{
    const auto degrees = shape.component_degrees(m);
    return summand_bound(h, shape.variables(), degrees);
}

BoundBreakdown module_bound_at(const Integer &h, int m, const FreeModuleShape &shape, int pivot)
{
    const auto degrees = shape.component_degrees(m);
    return summand_bound_at(h, shape.variables(), degrees, pivot);
}

Integer braced_bound(const Integer &a, int i, int n)
{
    check_variables(n);
    if (i < 1) {
        throw std::domain_error("braced_bound requires i >= 1");
    }
    if (a < 0) {
        throw std::domain_error("braced_bound: negative argument");
    }
    const Integer s = monomial_count(n, i);
    const Integer q = a / s;
    const Integer r = a % s;
    return q * kappa(s, i) + kappa(r, i);
}

Rational scaled_bound(const Integer &h, int n, int d)
{
    check_variables(n);
    if (d < 0) {
        throw std::domain_error("scaled_bound: negative degree");
    }
    if (d == 0) {
        return Rational(h);
    }
    return Rational(Integer(n - 1), Integer(n + d - 1)) * Rational(h);
}

} // namespace hrt
