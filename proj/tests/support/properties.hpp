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

// Property suites shared by the unit tests and the acceptance runner.

#ifndef HRT_TEST_PROPERTIES_HPP
#define HRT_TEST_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <utility>

namespace props
{

struct Result {
    explicit Result(std::string n) : name(std::move(n)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const
    {
        return cases > 0 && failures == 0;
    }
    void fail(const std::string &what)
    {
        if (failures++ == 0) {
            first_failure = what;
        }
    }
};

/// rep_value(macaulay_rep(a,d)) == a for a <= a_max, 1 <= d <= d_max.
Result round_trip(long a_max, int d_max);

/// Exhaustive search finds exactly one canonical vector per value, and it is
/// the one macaulay_rep returns; kappa matches the vector's decremented sum.
Result uniqueness(long a_max, int d_max);

/// rep_compare on representations agrees with integer order.
Result order_agreement(long a_max, int d_max);

/// a <= b implies kappa(a,d) <= kappa(b,d).
Result kappa_monotone(long a_max, int d_max);

/// Whenever h equals a tail sum, pivots j and j+1 give the same bound.
/// Shapes: n <= n_max, generator degrees in 0..f_max, rank <= r_max, 0 <= m <= m_max.
Result boundary_consistency(int n_max, int r_max, int f_max, int m_max);

/// All generator degrees equal f: module_bound(h,m) == braced_bound(h,m-f,n).
Result equal_degree_consistency(int n_max, int r_max, int f_max, int i_max);

} // namespace props

#endif
