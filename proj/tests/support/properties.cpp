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

#include "properties.hpp"

#include <sstream>
#include <vector>

#include <hrt/bounds.hpp>
#include <hrt/macaulay.hpp>

#include "oracles.hpp"

namespace props
{

namespace
{

std::string show(const std::vector<long> &v)
{
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        s << (i ? "," : "") << v[i];
    }
    s << ')';
    return s.str();
}

/// Non-decreasing degree sequences of length 1..r_max with entries in 0..f_max.
std::vector<std::vector<int>> sorted_degree_shapes(int r_max, int f_max)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int lo) -> void {
        if (!cur.empty()) {
            out.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == r_max) {
            return;
        }
        for (int f = lo; f <= f_max; ++f) {
            cur.push_back(f);
            self(self, f);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

Result round_trip(long a_max, int d_max)
{
    Result r{"round-trip a<=" + std::to_string(a_max) + " d<=" + std::to_string(d_max)};
    for (int d = 1; d <= d_max; ++d) {
        for (long a = 0; a <= a_max; ++a) {
            ++r.cases;
            const auto rep = hrt::macaulay_rep(a, d);
            if (hrt::rep_value(rep) != a) {
                r.fail("a=" + std::to_string(a) + " d=" + std::to_string(d) + " gives " + rep.expansion());
            }
        }
    }
    return r;
}

Result uniqueness(long a_max, int d_max)
{
    Result r{"uniqueness a<=" + std::to_string(a_max) + " d<=" + std::to_string(d_max)};
    const oracle::Pascal C(static_cast<int>(a_max) + d_max + 2, d_max + 1);
    for (int d = 1; d <= d_max; ++d) {
        const auto found = oracle::all_representations(C, a_max, d);
        for (long a = 0; a <= a_max; ++a) {
            ++r.cases;
            const auto &cands = found[static_cast<std::size_t>(a)];
            const std::string where = "a=" + std::to_string(a) + " d=" + std::to_string(d);
            if (cands.size() != 1) {
                r.fail(where + ": " + std::to_string(cands.size()) + " representations");
                continue;
            }
            const auto rep = hrt::macaulay_rep(a, d);
            std::vector<long> got;
            for (const auto &x : rep.numerators()) {
                got.push_back(static_cast<long>(x));
            }
            if (got != cands[0]) {
                r.fail(where + ": library " + show(got) + " vs search " + show(cands[0]));
            } else if (hrt::kappa(rep) != oracle::kappa_of(C, cands[0], d)) {
                r.fail(where + ": kappa mismatch");
            }
        }
    }
    return r;
}

Result order_agreement(long a_max, int d_max)
{
    Result r{"order agreement a,b<=" + std::to_string(a_max) + " d<=" + std::to_string(d_max)};
    for (int d = 1; d <= d_max; ++d) {
        std::vector<hrt::MacaulayRep> reps;
        reps.reserve(static_cast<std::size_t>(a_max + 1));
        for (long a = 0; a <= a_max; ++a) {
            reps.push_back(hrt::macaulay_rep(a, d));
        }
        for (long a = 0; a <= a_max; ++a) {
            for (long b = 0; b <= a_max; ++b) {
                ++r.cases;
                if (hrt::rep_compare(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]) !=
                    (a <=> b)) {
                    r.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " d=" + std::to_string(d));
                }
            }
        }
    }
    return r;
}

Result kappa_monotone(long a_max, int d_max)
{
    Result r{"kappa monotone in a, a<=" + std::to_string(a_max) + " d<=" + std::to_string(d_max)};
    for (int d = 1; d <= d_max; ++d) {
        std::vector<hrt::Integer> k;
        for (long a = 0; a <= a_max; ++a) {
            k.push_back(hrt::kappa(a, d));
        }
        // a <= b for all pairs reduces to adjacent pairs once a running max is kept.
        hrt::Integer running = 0;
        for (long b = 0; b <= a_max; ++b) {
            r.cases += static_cast<std::uint64_t>(b + 1);
            if (k[static_cast<std::size_t>(b)] < running) {
                r.fail("d=" + std::to_string(d) + " b=" + std::to_string(b));
            }
            running = std::max(running, k[static_cast<std::size_t>(b)]);
        }
    }
    return r;
}

Result boundary_consistency(int n_max, int r_max, int f_max, int m_max)
{
    Result r{"boundary consistency n<=" + std::to_string(n_max) + " r<=" + std::to_string(r_max) +
             " m<=" + std::to_string(m_max)};
    for (int n = 1; n <= n_max; ++n) {
        for (const auto &degrees : sorted_degree_shapes(r_max, f_max)) {
            const hrt::FreeModuleShape shape(n, degrees);
            const int rank = shape.rank();
            for (int m = 0; m <= m_max; ++m) {
                const auto caps = shape.capacities(m);
                // h = N_{j+1} + ... + N_r with 1-based j in 1..r-1.
                for (int j = 1; j < rank; ++j) {
                    hrt::Integer tail = 0;
                    for (int i = j; i < rank; ++i) {
                        tail += caps[static_cast<std::size_t>(i)];
                    }
                    ++r.cases;
                    const auto lo = hrt::module_bound_at(tail, m, shape, j);
                    const auto hi = hrt::module_bound_at(tail, m, shape, j + 1);
                    const auto chosen = hrt::module_bound(tail, m, shape);
                    if (lo.total != hi.total || chosen.total != lo.total) {
                        r.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " j=" + std::to_string(j) +
                               ": " + lo.total.str() + " vs " + hi.total.str());
                    }
                }
            }
        }
    }
    return r;
}

Result equal_degree_consistency(int n_max, int r_max, int f_max, int i_max)
{
    Result r{"equal-degree consistency n<=" + std::to_string(n_max) + " r<=" + std::to_string(r_max) +
             " i<=" + std::to_string(i_max)};
    for (int n = 1; n <= n_max; ++n) {
        for (int rank = 1; rank <= r_max; ++rank) {
            for (int f = 0; f <= f_max; ++f) {
                const hrt::FreeModuleShape shape(n, std::vector<int>(static_cast<std::size_t>(rank), f));
                for (int i = 1; i <= i_max; ++i) {
                    const int m = f + i;
                    const hrt::Integer dim = shape.dimension(m);
                    for (hrt::Integer h = 0; h <= dim; ++h) {
                        ++r.cases;
                        const auto lhs = hrt::module_bound(h, m, shape).total;
                        const auto rhs = hrt::braced_bound(h, i, n);
                        if (lhs != rhs) {
                            r.fail("n=" + std::to_string(n) + " r=" + std::to_string(rank) + " i=" +
                                   std::to_string(i) + " h=" + h.str() + ": " + lhs.str() + " vs " + rhs.str());
                        }
                    }
                }
            }
        }
    }
    return r;
}

} // namespace props
