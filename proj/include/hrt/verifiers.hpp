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

#ifndef HRT_VERIFIERS_HPP
#define HRT_VERIFIERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <hrt/json.hpp>
#include <hrt/monomial.hpp>
#include <hrt/oracle.hpp>

namespace hrt
{

/// One failing input with both sides of the inequality evaluated.
struct Counterexample {
    Json inputs;
    std::string lhs;
    std::string rhs;
};

/// Result of sweeping one statement over a parameter range.  An empty
/// counterexample list means the statement held on every case.
struct VerificationOutcome {
    std::string statement;
    Json ranges = Json::object();
    std::uint64_t cases = 0;
    std::vector<Counterexample> counterexamples;

    bool passed() const noexcept
    {
        return counterexamples.empty();
    }
};

/// Sums case counts and concatenates counterexamples.  The statements must
/// match; `ranges` of the first argument are kept.
VerificationOutcome merge(VerificationOutcome into, const VerificationOutcome &other);

/// {"statement","ranges","cases","counterexamples":[{"inputs","lhs","rhs"}]}
Json outcome_to_json(const VerificationOutcome &outcome);

/// Recomputes both sides of a counterexample; true iff it is a genuine
/// violation of the outcome's statement.
bool reverify(const std::string &statement, const Counterexample &cx);

// kappa(a,d) + kappa(b,d) <= kappa(a+b,d) for a, b <= a_max, 1 <= d <= d_max,
// and kappa(a,d+1) <= kappa(a,d) for 1 <= d < d_max.
VerificationOutcome check_kappa_lemma(int a_max, int d_max);

// kappa(a-1,d) == kappa(a,d) iff the representation of a ends with
// a_delta == delta, for 1 <= a <= a_max, 1 <= d <= d_max.
VerificationOutcome check_herz_tail(int a_max, int d_max);

// kappa(a,d1) + kappa(b,d2) <= rank2_bound for all a <= N_1, b <= N_2.
VerificationOutcome check_rank2(int n, int d1, int d2);
// check_rank2 over 1 <= n <= n_max, 1 <= d2 <= d1 <= d_max.
VerificationOutcome check_rank2_range(int n_max, int d_max);

/// Non-increasing tuples of length 1..r_max with entries in 1..d_max.
std::vector<std::vector<int>> degree_tuples(int r_max, int d_max);

// sum kappa(a_i, d_i) <= piecewise bound, over every corner a_i in {0, N_i}
// plus `samples` uniform draws per tuple.
VerificationOutcome check_higher(int n, const std::vector<std::vector<int>> &tuples, int samples,
                                 std::uint64_t seed);

// The codimension of the x_n-specialization of every k-term lex-segment in
// S_d equals kappa(codim, d).
VerificationOutcome check_lex_restriction(int n, int d);
VerificationOutcome check_lex_restriction_range(int n_max, int d_max);

/// Parameters of a seeded sweep of random monomial modules.
struct ModuleSweep {
    std::size_t count = 500;
    int n_max = 3;
    int r_max = 3;
    int m_max = 5;
    int f_max = 2;
    std::uint64_t seed = 0;
};

struct SweepCase {
    MonomialModule module;
    int m;
    std::uint64_t seed; // oracle seed for this case
};

/// Deterministic in `sweep`.  Roughly a third of the shapes have all
/// generator degrees zero and a fifth of the modules are lex slices.
std::vector<SweepCase> generate_sweep(const ModuleSweep &sweep);

Json sweep_ranges(const ModuleSweep &sweep, std::uint64_t p, int trials);

// certify_main_theorem on every case of the sweep.
VerificationOutcome check_main_theorem(const ModuleSweep &sweep, std::uint64_t p, int trials);

// H((F/M)_l, d) <= (n-1)/(n+d-1) H(F/M, d) on the sweep cases whose shapes
// have every generator in degree 0, with equality demanded for M = 0.
VerificationOutcome check_scaled_corollary(const ModuleSweep &sweep, std::uint64_t p, int trials);

} // namespace hrt

#endif
