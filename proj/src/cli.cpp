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

#include <hrt/cli.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include <hrt/bounds.hpp>
#include <hrt/level.hpp>
#include <hrt/macaulay.hpp>
#include <hrt/module_json.hpp>
#include <hrt/oracle.hpp>
#include <hrt/verifiers.hpp>

namespace hrt::cli
{

namespace
{

struct Config {
    std::string format = "human";
    std::uint64_t seed = 0;
    std::uint64_t p = default_prime;
    int trials = default_trials;
};

Integer parse_integer(const std::string &text, const std::string &field)
{
    const bool neg = !text.empty() && text[0] == '-';
    const auto digits = text.substr(neg ? 1 : 0);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw input_error(field, "'" + text + "' is not an integer");
    }
    return Integer(text);
}

Integer parse_natural(const std::string &text, const std::string &field)
{
    Integer v = parse_integer(text, field);
    if (v < 0) {
        throw input_error(field, "must be >= 0, got " + text);
    }
    return v;
}

int parse_int(const std::string &text, const std::string &field, int lo)
{
    const Integer v = parse_integer(text, field);
    if (v < lo) {
        throw input_error(field, "must be >= " + std::to_string(lo) + ", got " + text);
    }
    if (v > std::numeric_limits<int>::max()) {
        throw input_error(field, "out of range");
    }
    return static_cast<int>(v);
}

Json integers_json(const std::vector<Integer> &v)
{
    Json out = Json::array();
    for (const auto &x : v) {
        out.push_back(integer_json(x));
    }
    return out;
}

std::string join(const std::vector<Integer> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i].str();
    }
    return s;
}

std::string join_ints(const std::vector<int> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

class Runner
{
public:
    Runner(std::ostream &out) : m_out(out) {}

    void add_format(CLI::App *sub)
    {
        sub->add_option("--format", m_cfg.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    }
    void add_seed(CLI::App *sub)
    {
        sub->add_option("--seed", m_cfg.seed, "Root RNG seed");
    }
    void add_field(CLI::App *sub)
    {
        sub->add_option("--p", m_cfg.p, "Prime modulus");
        sub->add_option("--trials", m_cfg.trials, "Random linear forms per module")->check(CLI::PositiveNumber);
        add_seed(sub);
    }

    bool json() const
    {
        return m_cfg.format == "json";
    }
    const Config &config() const
    {
        return m_cfg;
    }

    void emit(const Json &doc)
    {
        m_out << doc.dump(2) << '\n';
    }
    std::ostream &out()
    {
        return m_out;
    }

private:
    std::ostream &m_out;
    Config m_cfg;
};

int report_outcome(Runner &r, const VerificationOutcome &o)
{
    if (r.json()) {
        r.emit(outcome_to_json(o));
    } else {
        r.out() << o.statement << ": " << o.cases << " cases, " << o.counterexamples.size() << " counterexamples\n";
        const std::size_t shown = std::min<std::size_t>(o.counterexamples.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto &cx = o.counterexamples[i];
            r.out() << "  " << cx.inputs.dump() << ": lhs " << cx.lhs << " vs rhs " << cx.rhs << '\n';
        }
        r.out() << (o.passed() ? "verified" : "VIOLATED") << '\n';
    }
    return o.passed() ? exit_ok : exit_violation;
}

int report_restriction(Runner &r, const RestrictionReport &rep)
{
    if (r.json()) {
        r.emit(report_to_json(rep));
    } else {
        r.out() << "m = " << rep.m << ", p = " << rep.p << ", trials = " << rep.trials << ", seed = " << rep.seed
                << '\n';
        r.out() << "trial dims: " << join(rep.dims) << '\n';
        r.out() << "generic dim " << rep.generic_dim << " vs bound " << rep.bound << (rep.equality ? " (equality)" : "")
                << (rep.lex_slice ? ", lex slice" : "") << '\n';
        r.out() << (rep.holds ? "holds" : "VIOLATED") << '\n';
    }
    return rep.holds ? exit_ok : exit_violation;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Macaulay representations, hyperplane restriction bounds and their verifiers", "hrt"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Runner r(out);
    std::function<int()> action;

    // rep / kappa
    std::string a_text, d_text;
    auto *rep = app.add_subcommand("rep", "d-th Macaulay representation of a");
    rep->add_option("a", a_text)->required();
    rep->add_option("d", d_text)->required();
    r.add_format(rep);
    rep->callback([&] {
        action = [&] {
            const Integer a = parse_natural(a_text, "a");
            const int d = parse_int(d_text, "d", 1);
            const auto mr = macaulay_rep(a, d);
            if (r.json()) {
                r.emit(Json{{"a", integer_json(a)},
                            {"d", d},
                            {"numerators", integers_json(mr.numerators())},
                            {"delta", mr.delta()},
                            {"expansion", mr.expansion()}});
            } else {
                r.out() << a << " = " << mr.expansion() << '\n';
            }
            return exit_ok;
        };
    });

    auto *kap = app.add_subcommand("kappa", "a_<d>: decrement every numerator of the representation");
    kap->add_option("a", a_text)->required();
    kap->add_option("d", d_text)->required();
    r.add_format(kap);
    kap->callback([&] {
        action = [&] {
            const Integer a = parse_natural(a_text, "a");
            const int d = parse_int(d_text, "d", 1);
            const auto mr = macaulay_rep(a, d);
            const Integer k = kappa(mr);
            if (r.json()) {
                r.emit(Json{{"a", integer_json(a)},
                            {"d", d},
                            {"numerators", integers_json(mr.numerators())},
                            {"kappa", integer_json(k)}});
            } else {
                r.out() << a << " = " << mr.expansion() << '\n' << "kappa(" << a << ", " << d << ") = " << k << '\n';
            }
            return exit_ok;
        };
    });

    // bound
    auto *bound = app.add_subcommand("bound", "Closed-form restriction bounds");
    bound->require_subcommand(1);
    std::string h_text;
    auto *green = bound->add_subcommand("green", "Green's bound kappa(h, d)");
    green->add_option("h", h_text)->required();
    green->add_option("d", d_text)->required();
    r.add_format(green);
    green->callback([&] {
        action = [&] {
            const Integer h = parse_natural(h_text, "h");
            const int d = parse_int(d_text, "d", 0);
            const Integer b = green_bound(h, d);
            if (r.json()) {
                r.emit(Json{{"h", integer_json(h)}, {"d", d}, {"bound", integer_json(b)}});
            } else {
                r.out() << "green_bound(" << h << ", " << d << ") = " << b << '\n';
            }
            return exit_ok;
        };
    });

    int n_opt = 0, m_opt = 0, d_opt = 0;
    std::vector<int> degrees_opt;
    auto *modb = bound->add_subcommand("module", "Piecewise bound H(F/M,m)_{m,r}");
    modb->add_option("--n", n_opt)->required();
    modb->add_option("--degrees", degrees_opt)->required()->delimiter(',');
    modb->add_option("--m", m_opt)->required();
    modb->add_option("--h", h_text)->required();
    r.add_format(modb);
    modb->callback([&] {
        action = [&] {
            const Integer h = parse_natural(h_text, "--h");
            FreeModuleShape shape(n_opt, degrees_opt);
            const auto bd = module_bound(h, m_opt, shape);
            if (r.json()) {
                r.emit(Json{{"h", integer_json(h)},
                            {"m", m_opt},
                            {"n", n_opt},
                            {"degrees", degrees_opt},
                            {"pivot", bd.pivot},
                            {"component_degrees", bd.component_degrees},
                            {"capacities", integers_json(bd.capacities)},
                            {"head", integer_json(bd.head)},
                            {"head_term", integer_json(bd.head_term)},
                            {"tail_terms", integers_json(bd.tail_terms)},
                            {"total", integer_json(bd.total)}});
            } else {
                r.out() << "d_i = " << join_ints(bd.component_degrees) << ", N_i = " << join(bd.capacities) << '\n';
                r.out() << "pivot j = " << bd.pivot << ", head = " << bd.head << " -> " << bd.head_term << '\n';
                r.out() << "tail terms = " << (bd.tail_terms.empty() ? "-" : join(bd.tail_terms)) << '\n';
                r.out() << "bound = " << bd.total << '\n';
            }
            return exit_ok;
        };
    });

    auto *scaled = bound->add_subcommand("scaled", "(n-1)/(n+d-1) * h");
    scaled->add_option("--n", n_opt)->required();
    scaled->add_option("--d", d_opt)->required();
    scaled->add_option("--h", h_text)->required();
    r.add_format(scaled);
    scaled->callback([&] {
        action = [&] {
            const Integer h = parse_natural(h_text, "--h");
            const Rational b = scaled_bound(h, n_opt, d_opt);
            if (r.json()) {
                r.emit(Json{{"h", integer_json(h)}, {"n", n_opt}, {"d", d_opt}, {"bound", rational_json(b)}});
            } else {
                r.out() << "(" << n_opt - 1 << ")/(" << n_opt + d_opt - 1 << ") * " << h << " = " << to_string(b)
                        << '\n';
            }
            return exit_ok;
        };
    });

    // level
    auto *level = app.add_subcommand("level", "Level algebra bound comparison");
    level->require_subcommand(1);
    std::vector<std::string> hs;
    int level_n = 3;
    auto *analyze = level->add_subcommand("analyze", "Compare h^GM with h^G");
    analyze->add_option("--h", hs)->required()->delimiter(',');
    analyze->add_option("--n", level_n);
    r.add_format(analyze);
    analyze->callback([&] {
        action = [&] {
            std::vector<Integer> h;
            for (std::size_t i = 0; i < hs.size(); ++i) {
                h.push_back(parse_natural(hs[i], "--h[" + std::to_string(i) + "]"));
            }
            const auto cmp = compare_bounds(LevelHilbert(h, level_n));
            const bool ok = std::all_of(cmp.conditions.begin(), cmp.conditions.end(),
                                        [](const PropositionConditions &c) { return c.conclusion_holds; });
            if (r.json()) {
                r.emit(comparison_to_json(cmp));
            } else {
                r.out() << "h    = " << join(cmp.h) << '\n';
                r.out() << "hGM  = " << join(cmp.hGM) << '\n';
                r.out() << "hG   = " << join(cmp.hG) << '\n';
                r.out() << "positions = " << (cmp.win_positions.empty() ? "-" : join_ints(cmp.win_positions)) << '\n';
                for (const auto &c : cmp.conditions) {
                    if (c.all) {
                        r.out() << "conditions hold at i = " << c.index
                                << (c.conclusion_holds ? "" : " but hGM < hG (VIOLATED)") << '\n';
                    }
                }
            }
            return ok ? exit_ok : exit_violation;
        };
    });

    std::string data_path = default_table_path();
    auto *table = level->add_subcommand("table", "Recompute the bundled level-algebra table");
    table->add_option("--data", data_path, "Table file (position;h;hGM;hG per line)");
    table->add_option("--n", level_n);
    r.add_format(table);
    table->callback([&] {
        action = [&] {
            const auto report = reproduce_table(read_table_file(data_path), level_n);
            if (r.json()) {
                r.emit(table_report_to_json(report));
            } else {
                std::size_t passed = 0;
                for (const auto &row : report.rows) {
                    passed += row.passed() ? 1 : 0;
                    r.out() << (row.passed() ? "PASS " : "FAIL ") << row.row.position << " | " << join(row.row.h)
                            << " | hGM " << join(row.hGM) << " | hG " << join(row.hG) << '\n';
                }
                r.out() << passed << "/" << report.rows.size() << " rows reproduced\n";
            }
            return report.passed() ? exit_ok : exit_violation;
        };
    });

    // verify
    auto *verify = app.add_subcommand("verify", "Exhaustive and randomized inequality sweeps");
    verify->require_subcommand(1);
    int a_max = 2000, d_max = 6, n_max = 0, r_max = 4, samples = 100, d1 = 0, d2 = 0;
    std::optional<int> n_single, d_single;

    auto *vk = verify->add_subcommand("kappa-lemma", "Superadditivity and degree monotonicity of kappa");
    vk->add_option("--a-max", a_max);
    vk->add_option("--d-max", d_max);
    r.add_format(vk);
    vk->callback([&] { action = [&] { return report_outcome(r, check_kappa_lemma(a_max, d_max)); }; });

    auto *vh = verify->add_subcommand("herz", "kappa(a-1) = kappa(a) iff a_delta = delta");
    vh->add_option("--a-max", a_max);
    vh->add_option("--d-max", d_max);
    r.add_format(vh);
    vh->callback([&] { action = [&] { return report_outcome(r, check_herz_tail(a_max, d_max)); }; });

    auto *vr = verify->add_subcommand("rank2", "Two-summand inequality, exhaustive");
    vr->add_option("--n", n_single);
    vr->add_option("--d1", d1);
    vr->add_option("--d2", d2);
    vr->add_option("--n-max", n_max, "Sweep 1..n-max when --n is absent (default 4)");
    vr->add_option("--d-max", d_max, "Sweep 1 <= d2 <= d1 <= d-max when --d1/--d2 are absent (default 5)");
    r.add_format(vr);
    vr->callback([&] {
        action = [&] {
            const bool single = n_single || vr->count("--d1") || vr->count("--d2");
            if (single) {
                if (!n_single || !vr->count("--d1") || !vr->count("--d2")) {
                    throw input_error("--n/--d1/--d2", "give all three or none");
                }
                return report_outcome(r, check_rank2(*n_single, d1, d2));
            }
            return report_outcome(r, check_rank2_range(n_max ? n_max : 4, vr->count("--d-max") ? d_max : 5));
        };
    });

    auto *vhi = verify->add_subcommand("higher", "r-summand inequality, corners plus random samples");
    vhi->add_option("--n", n_single, "Single variable count (default: sweep 1..n-max)");
    vhi->add_option("--n-max", n_max);
    vhi->add_option("--r-max", r_max);
    vhi->add_option("--d-max", d_max);
    vhi->add_option("--samples", samples);
    r.add_format(vhi);
    r.add_seed(vhi);
    vhi->callback([&] {
        action = [&] {
            const int dm = vhi->count("--d-max") ? d_max : 5;
            const auto tuples = degree_tuples(r_max, dm);
            if (n_single) {
                return report_outcome(r, check_higher(*n_single, tuples, samples, r.config().seed));
            }
            VerificationOutcome all{"higher", Json{{"n_max", n_max ? n_max : 3}, {"r_max", r_max}, {"d_max", dm},
                                                   {"samples", samples}, {"seed", r.config().seed}}, 0, {}};
            for (int n = 1; n <= (n_max ? n_max : 3); ++n) {
                all = merge(std::move(all), check_higher(n, tuples, samples, r.config().seed));
            }
            return report_outcome(r, all);
        };
    });

    auto *vl = verify->add_subcommand("lex-restriction", "x_n-specialization of lex-segments");
    vl->add_option("--n", n_single);
    vl->add_option("--d", d_single);
    vl->add_option("--n-max", n_max);
    vl->add_option("--d-max", d_max);
    r.add_format(vl);
    vl->callback([&] {
        action = [&] {
            if (n_single || d_single) {
                if (!n_single || !d_single) {
                    throw input_error("--n/--d", "give both or neither");
                }
                return report_outcome(r, check_lex_restriction(*n_single, *d_single));
            }
            return report_outcome(r, check_lex_restriction_range(n_max ? n_max : 4, vl->count("--d-max") ? d_max : 4));
        };
    });

    ModuleSweep sweep;
    auto add_sweep = [&](CLI::App *sub) {
        sub->add_option("--count", sweep.count);
        sub->add_option("--n-max", sweep.n_max);
        sub->add_option("--r-max", sweep.r_max);
        sub->add_option("--m-max", sweep.m_max);
        sub->add_option("--f-max", sweep.f_max);
        r.add_format(sub);
        r.add_field(sub);
    };
    auto *vs = verify->add_subcommand("scaled", "Scaled bound on degree-0 generated quotients");
    add_sweep(vs);
    vs->callback([&] {
        action = [&] {
            sweep.seed = r.config().seed;
            return report_outcome(r, check_scaled_corollary(sweep, r.config().p, r.config().trials));
        };
    });
    auto *vm = verify->add_subcommand("main-theorem", "Oracle certification over random monomial modules");
    add_sweep(vm);
    vm->callback([&] {
        action = [&] {
            sweep.seed = r.config().seed;
            return report_outcome(r, check_main_theorem(sweep, r.config().p, r.config().trials));
        };
    });

    // oracle
    auto *oracle = app.add_subcommand("oracle", "Generic restriction over a prime field");
    oracle->require_subcommand(1);
    std::string module_path;
    auto add_oracle = [&](CLI::App *sub) {
        sub->add_option("--module", module_path, "Module description JSON file")->required();
        sub->add_option("--m", m_opt)->required();
        r.add_format(sub);
        r.add_field(sub);
    };
    auto *restrict_cmd = oracle->add_subcommand("restrict", "Generic dimension of (F/(M + lF))_m");
    add_oracle(restrict_cmd);
    restrict_cmd->callback([&] {
        action = [&] {
            const auto module = read_module_file(module_path);
            const auto &c = r.config();
            return report_restriction(r, generic_restriction_dim(module, m_opt, c.p, c.trials, c.seed));
        };
    });
    auto *certify = oracle->add_subcommand("certify", "Check the module bound, with equality on lex slices");
    add_oracle(certify);
    certify->callback([&] {
        action = [&] {
            const auto module = read_module_file(module_path);
            const auto &c = r.config();
            return report_restriction(r, certify_main_theorem(module, m_opt, c.p, c.trials, c.seed));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        // Show help for the innermost subcommand that was named.
        const CLI::App *cur = &app;
        while (!cur->get_subcommands().empty()) {
            cur = cur->get_subcommands().front();
        }
        out << cur->help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        return action ? action() : exit_usage;
    } catch (const input_error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const capacity_error &e) {
        err << "error: " << e.field() << ": " << e.what() << '\n';
    } catch (const std::logic_error &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_usage;
}

} // namespace hrt::cli
