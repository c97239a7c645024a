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

#ifndef HRT_ORACLE_HPP
#define HRT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include <hrt/integer.hpp>
#include <hrt/json.hpp>
#include <hrt/monomial.hpp>

namespace hrt
{

inline constexpr std::uint64_t default_prime = 32003;
inline constexpr int default_trials = 3;

/// Outcome of sampling random linear forms l and measuring
/// dim (F/(M + lF))_m over Z/pZ.
///
/// A single draw can only overestimate the generic value, so the reported
/// dimension is the minimum over trials.  Over a finite field this is a
/// high-probability certificate, not a proof.
struct RestrictionReport {
    MonomialModule module;
    int m = 0;
    std::uint64_t p = default_prime;
    int trials = default_trials;
    std::uint64_t seed = 0;
    std::vector<Integer> dims;
    Integer generic_dim;
    Integer bound;
    bool lex_slice = false;
    bool holds = false;
    bool equality = false;
};

/// dim (F/(M + lF))_m for the linear form l = sum coeffs[i] x_{i+1}.
Integer restriction_dim_for_form(const MonomialModule &module, int m, std::uint64_t p,
                                 const std::vector<std::uint64_t> &coeffs);

/// Samples `trials` forms with coefficients uniform in Z/pZ (the x_n
/// coefficient nonzero); trial t draws from a stream seeded by (seed, t).
/// Requires p prime with p > 2 dim F_m and trials >= 1.  The verdict is
/// generic_dim <= module bound.
RestrictionReport generic_restriction_dim(const MonomialModule &module, int m, std::uint64_t p, int trials,
                                          std::uint64_t seed);

/// As above, and additionally demands equality when the degree-m part of M
/// is a deglex-top slice.  A failed verdict is returned, not thrown.
RestrictionReport certify_main_theorem(const MonomialModule &module, int m, std::uint64_t p, int trials,
                                       std::uint64_t seed);

/// {"m","p","trials","seed","dims","generic_dim","bound","holds","equality"}
Json report_to_json(const RestrictionReport &report);

} // namespace hrt

#endif
