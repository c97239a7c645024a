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

#include <hrt/verifiers.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

#include <hrt/bounds.hpp>
#include <hrt/macaulay.hpp>
#include <hrt/module_json.hpp>

namespace hrt
{

namespace
{

struct Evaluation {
    std::string lhs;
    std::string rhs;
    bool violated;
};

Integer json_integer(const Json &v)
{
    if (v.is_string()) {
        return Integer(v.get<std::string>());
    }
    return Integer(v.get<std::int64_t>());
}

std::string bool_string(bool b)
{
    return b ? "true" : "false";
}

void record(VerificationOutcome &out, Json inputs, const Evaluation &ev)
{
    ++out.cases;
    if (ev.violated) {
        out.counterexamples.push_back({std::move(inputs), ev.lhs, ev.rhs});
    }
}

std::seed_seq stream_seed(std::uint64_t seed, std::uint64_t index)
{
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
}

// kappa(a, d) for a in [0, a_max], from the arbitrary-precision routine.
std::vector<Integer> kappa_table(int a_max, int d)
{
    std::vector<Integer> t;
    t.reserve(static_cast<std::size_t>(a_max) + 1);
    for (int a = 0; a <= a_max; ++a) {
        t.push_back(kappa(Integer(a), d));
    }
    return t;
}

Evaluation eval_superadditive(const Integer &a, const Integer &b, int d)
{
    const Integer lhs = kappa(a, d) + kappa(b, d);
    const Integer rhs = kappa(a + b, d);
    return {lhs.str(), rhs.str(), lhs > rhs};
}

Evaluation eval_monotone(const Integer &a, int d)
{
    const Integer lhs = kappa(a, d + 1);
    const Integer rhs = kappa(a, d);
    return {lhs.str(), rhs.str(), lhs > rhs};
}

Evaluation eval_herz(const Integer &a, int d)
{
    const bool stalls = kappa(a - 1, d) == kappa(a, d);
    const auto rep = macaulay_rep(a, d);
    const bool tail = !rep.empty() && rep.numerators().back() == rep.delta();
    return {bool_string(stalls), bool_string(tail), stalls != tail};
}

Evaluation eval_rank2(int n, int d1, int d2, const Integer &a, const Integer &b)
{
    const Integer lhs = kappa(a, d1) + kappa(b, d2);
    const Integer rhs = rank2_bound(a, b, d1, d2, n);
    return {lhs.str(), rhs.str(), lhs > rhs};
}

Evaluation eval_higher(int n, const std::vector<int> &degrees, const std::vector<Integer> &values)
{
    Integer lhs = 0;
    Integer sum = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        lhs += kappa(values[i], degrees[i]);
        sum += values[i];
    }
    const Integer rhs = summand_bound(sum, n, degrees).total;
    return {lhs.str(), rhs.str(), lhs > rhs};
}

Evaluation eval_lex_restriction(int n, int d, std::size_t k)
{
    const auto segment = lex_segment(n, d, k);
    const auto last = static_cast<std::size_t>(n - 1);
    const auto survivors = std::count_if(segment.begin(), segment.end(),
                                         [&](const Monomial &m) { return m[last] == 0; });
    const Integer lhs = monomial_count(n - 1, d) - Integer(survivors);
    const Integer codim = monomial_count(n, d) - Integer(k);
    const Integer rhs = green_bound(codim, d);
    return {lhs.str(), rhs.str(), lhs != rhs};
}

bool all_degrees_zero(const FreeModuleShape &shape)
{
    return std::all_of(shape.degrees().begin(), shape.degrees().end(), [](int f) { return f == 0; });
}

bool is_zero_module(const MonomialModule &module)
{
    return std::all_of(module.components().begin(), module.components().end(),
                       [](const MonomialIdeal &i) { return i.generators().empty(); });
}

Evaluation eval_main(const MonomialModule &module, int m, std::uint64_t p, int trials, std::uint64_t seed)
{
    const auto rep = certify_main_theorem(module, m, p, trials, seed);
    return {rep.generic_dim.str(), rep.bound.str(), !rep.holds};
}

Evaluation eval_scaled(const MonomialModule &module, int d, std::uint64_t p, int trials, std::uint64_t seed)
{
    const auto rep = generic_restriction_dim(module, d, p, trials, seed);
    const Integer h = hilbert_value_module(module, d);
    const Rational rhs = scaled_bound(h, module.shape().variables(), d);
    const Rational lhs(rep.generic_dim);
    bool violated = lhs > rhs;
    if (is_zero_module(module) && lhs != rhs) {
        violated = true;
    }
    return {to_string(lhs), to_string(rhs), violated};
}

Json module_case_inputs(const SweepCase &c, std::uint64_t p, int trials)
{
    return Json{{"module", module_to_json(c.module)}, {"m", c.m}, {"p", p}, {"trials", trials}, {"seed", c.seed}};
}

Monomial random_monomial(std::mt19937_64 &rng, int n, int degree)
{
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int i = 0; i < degree; ++i) {
        ++e[static_cast<std::size_t>(var(rng))];
    }
    return Monomial(std::move(e));
}

} // namespace

VerificationOutcome merge(VerificationOutcome into, const VerificationOutcome &other)
{
    if (into.statement != other.statement) {
        throw std::invalid_argument("cannot merge outcomes of different statements");
    }
    into.cases += other.cases;
    into.counterexamples.insert(into.counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
    return into;
}

Json outcome_to_json(const VerificationOutcome &outcome)
{
    Json cxs = Json::array();
    for (const auto &cx : outcome.counterexamples) {
        cxs.push_back(Json{{"inputs", cx.inputs}, {"lhs", cx.lhs}, {"rhs", cx.rhs}});
    }
    Json doc;
    doc["statement"] = outcome.statement;
    doc["ranges"] = outcome.ranges;
    doc["cases"] = outcome.cases;
    doc["counterexamples"] = std::move(cxs);
    return doc;
}

bool reverify(const std::string &statement, const Counterexample &cx)
{
    const auto &in = cx.inputs;
    if (statement == "kappa-lemma") {
        if (in.at("part") == "superadditive") {
            return eval_superadditive(json_integer(in.at("a")), json_integer(in.at("b")), in.at("d").get<int>())
                .violated;
        }
        return eval_monotone(json_integer(in.at("a")), in.at("d").get<int>()).violated;
    }
    if (statement == "herz") {
        return eval_herz(json_integer(in.at("a")), in.at("d").get<int>()).violated;
    }
    if (statement == "rank2") {
        return eval_rank2(in.at("n").get<int>(), in.at("d1").get<int>(), in.at("d2").get<int>(),
                          json_integer(in.at("a")), json_integer(in.at("b")))
            .violated;
    }
    if (statement == "higher") {
        std::vector<Integer> values;
        for (const auto &v : in.at("values")) {
            values.push_back(json_integer(v));
        }
        return eval_higher(in.at("n").get<int>(), in.at("degrees").get<std::vector<int>>(), values).violated;
    }
    if (statement == "lex-restriction") {
        return eval_lex_restriction(in.at("n").get<int>(), in.at("d").get<int>(), in.at("k").get<std::size_t>())
            .violated;
    }
    if (statement == "main-theorem" || statement == "scaled") {
        const auto module = module_from_json(in.at("module"));
        const int m = in.at("m").get<int>();
        const auto p = in.at("p").get<std::uint64_t>();
        const int trials = in.at("trials").get<int>();
        const auto seed = in.at("seed").get<std::uint64_t>();
        return statement == "scaled" ? eval_scaled(module, m, p, trials, seed).violated
                                     : eval_main(module, m, p, trials, seed).violated;
    }
    throw std::invalid_argument("unknown statement '" + statement + "'");
}

VerificationOutcome check_kappa_lemma(int a_max, int d_max)
{
    if (a_max < 1 || d_max < 1) {
        throw std::invalid_argument("check_kappa_lemma needs a_max, d_max >= 1");
    }
    VerificationOutcome out{"kappa-lemma", Json{{"a_max", a_max}, {"d_max", d_max}}, 0, {}};
    std::vector<std::vector<Integer>> tables;
    for (int d = 1; d <= d_max; ++d) {
        tables.push_back(kappa_table(2 * a_max, d));
    }
    for (int d = 1; d <= d_max; ++d) {
        const auto &t = tables[static_cast<std::size_t>(d - 1)];
        for (int a = 0; a <= a_max; ++a) {
            for (int b = 0; b <= a_max; ++b) {
                const auto ua = static_cast<std::size_t>(a);
                const auto ub = static_cast<std::size_t>(b);
                const Integer lhs = t[ua] + t[ub];
                ++out.cases;
                if (lhs > t[ua + ub]) {
                    out.counterexamples.push_back(
                        {Json{{"part", "superadditive"}, {"a", a}, {"b", b}, {"d", d}}, lhs.str(), t[ua + ub].str()});
                }
            }
            if (d < d_max) {
                const auto ua = static_cast<std::size_t>(a);
                const auto &next = tables[static_cast<std::size_t>(d)][ua];
                ++out.cases;
                if (next > t[ua]) {
                    out.counterexamples.push_back(
                        {Json{{"part", "monotone"}, {"a", a}, {"d", d}}, next.str(), t[ua].str()});
                }
            }
        }
    }
    return out;
}

VerificationOutcome check_herz_tail(int a_max, int d_max)
{
    if (a_max < 2 || d_max < 1) {
        throw std::invalid_argument("check_herz_tail needs a_max >= 2, d_max >= 1");
    }
    VerificationOutcome out{"herz", Json{{"a_max", a_max}, {"d_max", d_max}}, 0, {}};
    for (int d = 1; d <= d_max; ++d) {
        for (int a = 1; a <= a_max; ++a) {
            record(out, Json{{"a", a}, {"d", d}}, eval_herz(a, d));
        }
    }
    return out;
}

VerificationOutcome check_rank2(int n, int d1, int d2)
{
    if (n < 1 || d2 < 1 || d1 < d2) {
        throw std::invalid_argument("check_rank2 needs n >= 1 and d1 >= d2 >= 1");
    }
    VerificationOutcome out{"rank2", Json{{"n", n}, {"d1", d1}, {"d2", d2}}, 0, {}};
    const Integer n1 = monomial_count(n, d1);
    const Integer n2 = monomial_count(n, d2);
    for (Integer a = 0; a <= n1; ++a) {
        for (Integer b = 0; b <= n2; ++b) {
            record(out, Json{{"n", n}, {"d1", d1}, {"d2", d2}, {"a", integer_json(a)}, {"b", integer_json(b)}},
                   eval_rank2(n, d1, d2, a, b));
        }
    }
    return out;
}

VerificationOutcome check_rank2_range(int n_max, int d_max)
{
    VerificationOutcome out{"rank2", Json{{"n_max", n_max}, {"d_max", d_max}}, 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        for (int d1 = 1; d1 <= d_max; ++d1) {
            for (int d2 = 1; d2 <= d1; ++d2) {
                out = merge(std::move(out), check_rank2(n, d1, d2));
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> degree_tuples(int r_max, int d_max)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto extend = [&](auto &&self, int ceiling) -> void {
        if (!cur.empty()) {
            out.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == r_max) {
            return;
        }
        for (int d = ceiling; d >= 1; --d) {
            cur.push_back(d);
            self(self, d);
            cur.pop_back();
        }
    };
    extend(extend, d_max);
    return out;
}

VerificationOutcome check_higher(int n, const std::vector<std::vector<int>> &tuples, int samples,
                                 std::uint64_t seed)
{
    if (n < 1 || samples < 0) {
        throw std::invalid_argument("check_higher needs n >= 1 and samples >= 0");
    }
    for (const auto &t : tuples) {
        if (t.empty() || !std::is_sorted(t.begin(), t.end(), std::greater<>{}) || t.back() < 1) {
            throw std::invalid_argument("malformed degree tuple: entries must be non-increasing and >= 1");
        }
    }
    VerificationOutcome out{"higher", Json{{"n", n}, {"tuples", tuples.size()}, {"samples", samples}, {"seed", seed}},
                            0, {}};
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        const auto &degrees = tuples[ti];
        const std::size_t r = degrees.size();
        std::vector<Integer> caps;
        for (int d : degrees) {
            caps.push_back(monomial_count(n, d));
        }
        auto check = [&](const std::vector<Integer> &values) {
            Json vals = Json::array();
            for (const auto &v : values) {
                vals.push_back(integer_json(v));
            }
            record(out, Json{{"n", n}, {"degrees", degrees}, {"values", std::move(vals)}},
                   eval_higher(n, degrees, values));
        };
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << r); ++mask) {
            std::vector<Integer> values(r);
            for (std::size_t i = 0; i < r; ++i) {
                values[i] = (mask >> i) & 1 ? caps[i] : Integer(0);
            }
            check(values);
        }
        auto seq = stream_seed(seed, ti);
        std::mt19937_64 rng(seq);
        for (int s = 0; s < samples; ++s) {
            std::vector<Integer> values(r);
            for (std::size_t i = 0; i < r; ++i) {
                std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(caps[i]));
                values[i] = pick(rng);
            }
            check(values);
        }
    }
    return out;
}

VerificationOutcome check_lex_restriction(int n, int d)
{
    if (n < 1) {
        throw std::invalid_argument("check_lex_restriction needs n >= 1");
    }
    VerificationOutcome out{"lex-restriction", Json{{"n", n}, {"d", d}}, 0, {}};
    const auto total = static_cast<std::size_t>(monomial_count(n, d));
    for (std::size_t k = 0; k <= total; ++k) {
        record(out, Json{{"n", n}, {"d", d}, {"k", k}}, eval_lex_restriction(n, d, k));
    }
    return out;
}

VerificationOutcome check_lex_restriction_range(int n_max, int d_max)
{
    VerificationOutcome out{"lex-restriction", Json{{"n_max", n_max}, {"d_max", d_max}}, 0, {}};
    for (int n = 1; n <= n_max; ++n) {
        for (int d = 0; d <= d_max; ++d) {
            out = merge(std::move(out), check_lex_restriction(n, d));
        }
    }
    return out;
}

std::vector<SweepCase> generate_sweep(const ModuleSweep &sweep)
{
    if (sweep.n_max < 1 || sweep.r_max < 1 || sweep.m_max < 0 || sweep.f_max < 0) {
        throw std::invalid_argument("module sweep needs n_max, r_max >= 1 and m_max, f_max >= 0");
    }
    std::vector<SweepCase> out;
    out.reserve(sweep.count);
    for (std::size_t idx = 0; idx < sweep.count; ++idx) {
        auto seq = stream_seed(sweep.seed, idx);
        std::mt19937_64 rng(seq);
        auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

        const int n = uniform(1, sweep.n_max);
        const int r = uniform(1, sweep.r_max);
        std::vector<int> degrees(static_cast<std::size_t>(r), 0);
        if (uniform(0, 2) != 0) {
            for (auto &f : degrees) {
                f = uniform(0, sweep.f_max);
            }
            std::sort(degrees.begin(), degrees.end());
        }
        FreeModuleShape shape(n, degrees);
        // Keep F_m nonzero in positive degree when the range allows it.
        const int m = uniform(std::min(degrees.front() + 1, sweep.m_max), sweep.m_max);
        const std::uint64_t case_seed = sweep.seed * 1000003u + idx;

        if (uniform(0, 4) == 0) {
            const auto dim = static_cast<int>(shape.dimension(m));
            const auto k = static_cast<std::size_t>(uniform(0, dim));
            out.push_back({MonomialModule::generated_by(shape, lex_module_slice(shape, m, k)), m, case_seed});
            continue;
        }
        std::vector<MonomialIdeal> ideals;
        for (int f : degrees) {
            std::vector<Monomial> gens;
            const int count = uniform(0, 3);
            const int top = m - f;
            for (int g = 0; g < count; ++g) {
                // Unit generators (the whole component) stay rare; otherwise
                // stay near degree m - f so M_m is a proper, nonzero subspace.
                const bool unit = uniform(0, 19) == 0;
                const int deg = unit || top < 1 ? 0 : uniform(std::max(1, top - 2), top);
                if (deg == 0 && !unit) {
                    continue;
                }
                gens.push_back(random_monomial(rng, n, deg));
            }
            ideals.emplace_back(n, std::move(gens));
        }
        out.push_back({MonomialModule(shape, std::move(ideals)), m, case_seed});
    }
    return out;
}

Json sweep_ranges(const ModuleSweep &sweep, std::uint64_t p, int trials)
{
    return Json{{"count", sweep.count}, {"n_max", sweep.n_max}, {"r_max", sweep.r_max}, {"m_max", sweep.m_max},
                {"f_max", sweep.f_max},  {"seed", sweep.seed},   {"p", p},               {"trials", trials}};
}

VerificationOutcome check_main_theorem(const ModuleSweep &sweep, std::uint64_t p, int trials)
{
    VerificationOutcome out{"main-theorem", sweep_ranges(sweep, p, trials), 0, {}};
    for (const auto &c : generate_sweep(sweep)) {
        record(out, module_case_inputs(c, p, trials), eval_main(c.module, c.m, p, trials, c.seed));
    }
    return out;
}

VerificationOutcome check_scaled_corollary(const ModuleSweep &sweep, std::uint64_t p, int trials)
{
    VerificationOutcome out{"scaled", sweep_ranges(sweep, p, trials), 0, {}};
    for (const auto &c : generate_sweep(sweep)) {
        if (!all_degrees_zero(c.module.shape())) {
            continue;
        }
        record(out, module_case_inputs(c, p, trials), eval_scaled(c.module, c.m, p, trials, c.seed));
    }
    return out;
}

} // namespace hrt
