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

#include <hrt/macaulay.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hrt
{

namespace
{

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Values up to this bound take the machine-word path.
constexpr u64 small_limit = u64(1) << 62;

// C(x, k), or any value > cap when the true value exceeds cap.  The partial
// products C(x-k+j, j) are non-decreasing in j, so saturating early is sound.
u64 binomial_saturating(u64 x, u64 k, u64 cap)
{
    if (k > x) {
        return 0;
    }
    k = std::min(k, x - k);
    u128 c = 1;
    for (u64 j = 1; j <= k; ++j) {
        c = c * (x - k + j) / j;
        if (c > cap) {
            return cap + 1;
        }
    }
    return static_cast<u64>(c);
}

bool fits_small(const Integer &x)
{
    return x >= 0 && x <= small_limit;
}

std::vector<u64> greedy_small(u64 a, int d)
{
    std::vector<u64> out;
    u64 rem = a;
    u64 prev = std::numeric_limits<u64>::max();
    for (int i = d; i >= 1 && rem > 0; --i) {
        const auto ii = static_cast<u64>(i);
        // Largest x < prev with C(x, i) <= rem.  C(x, i) >= x - i + 1.
        u64 lo = ii;
        u64 hi = std::min(prev - 1, rem + ii - 1);
        while (lo < hi) {
            const u64 mid = lo + (hi - lo + 1) / 2;
            if (binomial_saturating(mid, ii, rem) <= rem) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        out.push_back(lo);
        rem -= binomial_saturating(lo, ii, rem);
        prev = lo;
    }
    return out;
}

std::vector<Integer> greedy_big(const Integer &a, int d)
{
    std::vector<Integer> out;
    Integer rem = a;
    for (int i = d; i >= 1 && rem > 0; --i) {
        Integer lo = i;
        Integer step = 1;
        Integer hi = lo + step;
        while (binomial(hi, i) <= rem) {
            lo = hi;
            step *= 2;
            hi = lo + step;
        }
        // C(lo, i) <= rem < C(hi, i)
        while (hi - lo > 1) {
            Integer mid = (lo + hi) / 2;
            if (binomial(mid, i) <= rem) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rem -= binomial(lo, i);
        out.push_back(std::move(lo));
    }
    return out;
}

void check_base(int d)
{
    if (d < 1) {
        throw std::domain_error("Macaulay representation needs base d >= 1, got " + std::to_string(d));
    }
}

} // namespace

Integer binomial(const Integer &n, const Integer &k)
{
    if (n < 0 || k < 0) {
        throw std::domain_error("binomial: negative argument");
    }
    if (n < k) {
        return 0;
    }
    const Integer kk = std::min<Integer>(k, n - k);
    if (kk > std::numeric_limits<u64>::max() / 2) {
        throw std::overflow_error("binomial: lower index too large");
    }
    const auto small_k = static_cast<u64>(kk);
    if (n <= std::numeric_limits<u64>::max()) {
        const u64 c = binomial_saturating(static_cast<u64>(n), small_k, small_limit);
        if (c <= small_limit) {
            return c;
        }
    }
    Integer c = 1;
    const Integer base = n - kk;
    for (u64 j = 1; j <= small_k; ++j) {
        c *= base + j;
        c /= j;
    }
    return c;
}

Integer monomial_count(int n, int d)
{
    if (d < 0 || n < 0) {
        return 0;
    }
    if (n == 0) {
        return d == 0 ? 1 : 0;
    }
    return binomial(Integer(n + d - 1), Integer(d));
}

MacaulayRep::MacaulayRep(int d, std::vector<Integer> numerators) : m_degree(d), m_numerators(std::move(numerators))
{
    check_base(d);
    if (m_numerators.size() > static_cast<std::size_t>(d)) {
        throw std::invalid_argument("Macaulay representation has more than d numerators");
    }
    for (std::size_t i = 1; i < m_numerators.size(); ++i) {
        if (!(m_numerators[i - 1] > m_numerators[i])) {
            throw std::invalid_argument("Macaulay numerators must be strictly decreasing");
        }
    }
    if (!m_numerators.empty() && m_numerators.back() < delta()) {
        throw std::invalid_argument("Macaulay representation must end with a_delta >= delta");
    }
}

Integer MacaulayRep::numerator(int i) const
{
    if (i < 1 || i > m_degree) {
        throw std::out_of_range("numerator degree outside 1..d");
    }
    const auto pos = static_cast<std::size_t>(m_degree - i);
    return pos < m_numerators.size() ? m_numerators[pos] : Integer(0);
}

std::vector<Integer> MacaulayRep::extended() const
{
    std::vector<Integer> out(m_numerators);
    out.resize(static_cast<std::size_t>(m_degree), Integer(0));
    return out;
}

std::string MacaulayRep::expansion() const
{
    if (m_numerators.empty()) {
        return "0";
    }
    std::ostringstream os;
    int i = m_degree;
    for (const auto &a : m_numerators) {
        if (i != m_degree) {
            os << '+';
        }
        os << "C(" << a << ',' << i << ')';
        --i;
    }
    return os.str();
}

MacaulayRep macaulay_rep(const Integer &a, int d)
{
    check_base(d);
    if (a < 0) {
        throw std::domain_error("Macaulay representation of a negative integer");
    }
    if (fits_small(a)) {
        const auto small = greedy_small(static_cast<u64>(a), d);
        return MacaulayRep(d, std::vector<Integer>(small.begin(), small.end()));
    }
    return MacaulayRep(d, greedy_big(a, d));
}

Integer rep_value(const MacaulayRep &rep)
{
    Integer total = 0;
    int i = rep.degree();
    for (const auto &a : rep.numerators()) {
        total += binomial(a, i--);
    }
    return total;
}

Integer kappa(const MacaulayRep &rep)
{
    Integer total = 0;
    int i = rep.degree();
    for (const auto &a : rep.numerators()) {
        total += binomial(a - 1, i--);
    }
    return total;
}

Integer kappa(const Integer &a, int d)
{
    check_base(d);
    if (a < 0) {
        throw std::domain_error("kappa of a negative integer");
    }
    if (fits_small(a)) {
        // C(a_i - 1, i) <= C(a_i, i) <= a, so the sum stays in range.
        u64 total = 0;
        u64 i = static_cast<u64>(d);
        for (u64 x : greedy_small(static_cast<u64>(a), d)) {
            total += binomial_saturating(x - 1, i--, small_limit);
        }
        return total;
    }
    return kappa(macaulay_rep(a, d));
}

std::strong_ordering rep_compare(const MacaulayRep &a, const MacaulayRep &b)
{
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("rep_compare: representations in different bases");
    }
    // Compare the zero-padded vectors without materializing them.
    const auto &na = a.numerators();
    const auto &nb = b.numerators();
    const Integer zero = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.degree()); ++i) {
        const Integer &x = i < na.size() ? na[i] : zero;
        const Integer &y = i < nb.size() ? nb[i] : zero;
        if (x != y) {
            return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::strong_ordering rep_compare(const Integer &a, const Integer &b, int d)
{
    return rep_compare(macaulay_rep(a, d), macaulay_rep(b, d));
}

} // namespace hrt
