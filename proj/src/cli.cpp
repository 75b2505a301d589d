#include "binsum/cli.hpp"

#include "binsum/energy.hpp"
#include "binsum/inequality.hpp"
#include "binsum/means.hpp"
#include "binsum/parse.hpp"
#include "binsum/report.hpp"
#include "binsum/rng.hpp"
#include "binsum/walk.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>

namespace binsum {

namespace {

struct Globals {
    Precision prec = kDefaultPrecision;
    Precision cap = kDefaultPrecisionCap;
    int jobs = 0;
    std::string format = "text";
    std::string out;
    int digits = 10;
    bool timing = false;

    VerifyOptions verify() const { return {prec, cap, Exec::Parallel}; }

    /// Parameters that change the report content; --jobs, --format, --out
    /// and --timing are deliberately left out.
    Fields with(Fields f) const {
        f.emplace_back("prec", std::to_string(prec));
        f.emplace_back("prec-cap", std::to_string(cap));
        f.emplace_back("digits", std::to_string(digits));
        return f;
    }
};

using Action = std::function<Report()>;

std::string fixed(double v, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

unsigned to_k(unsigned long k) {
    if (k == 0 || k > 100000) {
        throw DomainError("k must lie in 1..100000");
    }
    return static_cast<unsigned>(k);
}

template <class Fn>
void for_k(const Range& r, Fn&& fn) {
    for (unsigned long k = r.lo; k <= r.hi; ++k) {
        fn(to_k(k));
    }
}

HypercubeSubset load_set(const std::string& file, const std::string& mask, unsigned d) {
    if (!file.empty()) {
        return read_set_file(file);
    }
    if (mask.empty()) {
        throw DomainError("give either --set FILE or --mask HEX with --d D");
    }
    auto a = HypercubeSubset::from_hex(d, mask);
    if (a.empty()) {
        throw DomainError("the subset is empty");
    }
    return a;
}

// --- pk ---------------------------------------------------------------------

void add_pk(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* sub = app.add_subcommand("pk", "sharp exponent p_k = log2 C(2k,k) with its bounds");
    auto k = std::make_shared<std::string>();
    sub->add_option("--k", *k, "k or lo..hi")->required();
    actions.emplace_back(sub, [&g, k] {
        const Range r = parse_range(*k);
        Report rep("pk", g.with({{"k", r.str()}}), g.digits);
        for_k(r, [&](unsigned kk) {
            const auto check = [kk](Precision p) { return pk_bounds_check(kk, p); };
            const EscalationResult e = escalate(check, g.prec, g.cap);
            const Interval p = pk(kk, e.precision);
            Record rec;
            rec.case_id = "k=" + std::to_string(kk) + " bounds";
            rec.verdict = to_verdict(e.certainty);
            rec.precision = e.precision;
            rec.extra = {{"central_binomial", binomial(2 * kk, kk).get_str()},
                         {"p_k_lo", p.lower_string(g.digits)},
                         {"p_k_hi", p.upper_string(g.digits)}};
            rep.add(std::move(rec));
        });
        return rep;
    });
}

// --- ineq ---------------------------------------------------------------------

void add_ineq(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* ineq = app.add_subcommand("ineq", "the main inequality and its lemmas");
    ineq->require_subcommand(1);

    {
        auto* sub = ineq->add_subcommand("main", "f_k(x) <= 1 on a closed grid over [0, 1]");
        auto k = std::make_shared<std::string>();
        auto grid = std::make_shared<std::size_t>(1001);
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--grid", *grid, "grid points including both ends")->capture_default_str();
        actions.emplace_back(sub, [&g, k, grid] {
            const Range r = parse_range(*k);
            Report rep("ineq main", g.with({{"k", r.str()}, {"grid", std::to_string(*grid)}}), g.digits);
            const GridSpec spec = GridSpec::closed(0, 1, *grid);
            spec.validate();
            for_k(r, [&](unsigned kk) {
                for (const auto& rr : verify_main_inequality(kk, spec, g.verify())) {
                    rep.add(rr);
                }
            });
            return rep;
        });
    }
    {
        auto* sub = ineq->add_subcommand("lemmas", "finite lemma checks, c_k < 0, the sufficient condition, bounds");
        auto k = std::make_shared<std::string>();
        auto grid = std::make_shared<std::size_t>(41);
        sub->add_option("--k", *k, "lo..hi with lo >= 2")->required();
        sub->add_option("--grid", *grid, "points of the c_k grid on [1/10, 1/2)")->capture_default_str();
        actions.emplace_back(sub, [&g, k, grid] {
            const Range r = parse_range(*k);
            if (r.lo < 2) {
                throw DomainError("ineq lemmas needs k >= 2");
            }
            Report rep("ineq lemmas", g.with({{"k", r.str()}, {"grid", std::to_string(*grid)}}), g.digits);
            const VerifyOptions opts = g.verify();
            for (const auto& rr : verify_lemma4_ranges(to_k(r.lo), to_k(r.hi), opts)) {
                rep.add(rr);
            }
            const GridSpec ck_grid = GridSpec::half_open(ExactRational(1, 10), ExactRational(1, 2), *grid);
            for_k(r, [&](unsigned kk) {
                for (const auto& rr : verify_ck_negative(kk, ck_grid, opts)) {
                    rep.add(rr);
                }
            });
            for_k(r, [&](unsigned kk) { rep.add(verify_suff3(kk, opts)); });
            for_k(r, [&](unsigned kk) {
                Record s;
                s.case_id = "n=" + std::to_string(kk) + " stirling";
                s.verdict = to_verdict(verify_with_escalation(
                    [kk](Precision p) { return stirling_bounds_check(kk, p); }, g.prec, g.cap));
                s.precision = g.prec;
                rep.add(std::move(s));
                Record b;
                b.case_id = "k=" + std::to_string(kk) + " p_k bounds";
                b.verdict = to_verdict(
                    verify_with_escalation([kk](Precision p) { return pk_bounds_check(kk, p); }, g.prec, g.cap));
                b.precision = g.prec;
                rep.add(std::move(b));
            });
            return rep;
        });
    }
    {
        auto* sub = ineq->add_subcommand("legendre", "f_k against its Legendre-polynomial form at seeded points");
        auto k = std::make_shared<std::string>();
        auto samples = std::make_shared<std::size_t>(20);
        auto seed = std::make_shared<std::uint64_t>(1);
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--samples", *samples, "rational points in (0, 1)")->capture_default_str();
        sub->add_option("--seed", *seed)->capture_default_str();
        actions.emplace_back(sub, [&g, k, samples, seed] {
            const Range r = parse_range(*k);
            Report rep("ineq legendre",
                       g.with({{"k", r.str()}, {"samples", std::to_string(*samples)}, {"seed", std::to_string(*seed)}}),
                       g.digits);
            std::vector<ExactRational> xs;
            for (std::size_t i = 0; i < *samples; ++i) {
                Xoshiro256 rng(*seed, i);
                ExactRational x = unit_rational(rng);
                while (x == ExactRational(1, 2)) {
                    x = unit_rational(rng);
                }
                xs.push_back(x);
            }
            for_k(r, [&](unsigned kk) {
                const auto reports = indexed_map<VerificationReport>(
                    xs.size(), Exec::Parallel, [&](std::size_t i) { return legendre_reformulation_check(kk, xs[i], g.verify()); });
                for (const auto& rr : reports) {
                    rep.add(rr);
                }
            });
            return rep;
        });
    }
}

// --- ode ------------------------------------------------------------------------

void add_ode(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* ode = app.add_subcommand("ode", "second-order identities of f_k and h_k");
    ode->require_subcommand(1);
    auto* sub = ode->add_subcommand("residual", "residual enclosures at seeded (k, x) pairs");
    auto k = std::make_shared<std::string>();
    auto samples = std::make_shared<std::size_t>(200);
    auto seed = std::make_shared<std::uint64_t>(1);
    sub->add_option("--k", *k, "k or lo..hi; each sample draws k uniformly")->required();
    sub->add_option("--samples", *samples)->capture_default_str();
    sub->add_option("--seed", *seed)->capture_default_str();
    actions.emplace_back(sub, [&g, k, samples, seed] {
        const Range r = parse_range(*k);
        to_k(r.lo);
        to_k(r.hi);
        Report rep("ode residual",
                   g.with({{"k", r.str()}, {"samples", std::to_string(*samples)}, {"seed", std::to_string(*seed)}}),
                   g.digits);
        const auto pairs = indexed_map<std::pair<VerificationReport, VerificationReport>>(
            *samples, Exec::Parallel, [&](std::size_t i) {
                Xoshiro256 rng(*seed, i);
                const auto kk = static_cast<unsigned>(r.lo + rng.below(r.hi - r.lo + 1));
                const ExactRational x = unit_rational(rng);
                return std::pair{verify_ode_residual(kk, x, g.verify()), verify_hk_ode_residual(kk, x, g.verify())};
            });
        for (const auto& [f, h] : pairs) {
            rep.add(f);
            rep.add(h);
        }
        return rep;
    });
}

// --- energy ----------------------------------------------------------------------

struct SetArgs {
    std::string file;
    std::string mask;
    unsigned d = 0;
};

void add_set_options(CLI::App* sub, SetArgs& s) {
    auto* file = sub->add_option("--set", s.file, "vertex file: one 0/1 string per line");
    auto* mask = sub->add_option("--mask", s.mask, "subset as a hex bitmask over vertex codes");
    auto* d = sub->add_option("--d", s.d, "dimension for --mask");
    file->excludes(mask);
    mask->needs(d);
}

void add_energy(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* energy_cmd = app.add_subcommand("energy", "k-additive energies of hypercube subsets");
    energy_cmd->require_subcommand(1);
    auto budget = std::make_shared<std::size_t>(EnergyOptions{}.cell_budget);
    const auto eopts = [budget] {
        EnergyOptions o;
        o.cell_budget = *budget;
        return o;
    };

    for (const bool verify : {false, true}) {
        auto* sub = energy_cmd->add_subcommand(verify ? "verify" : "compute",
                                               verify ? "E_k(A) <= |A|^{p_k}" : "E_k(A) from the sum tally");
        auto k = std::make_shared<std::string>();
        auto set = std::make_shared<SetArgs>();
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--cell-budget", *budget, "largest tally box (cells)")->capture_default_str();
        add_set_options(sub, *set);
        actions.emplace_back(sub, [&g, k, set, verify, budget, eopts] {
            const Range r = parse_range(*k);
            const HypercubeSubset a = load_set(set->file, set->mask, set->d);
            const std::string name = verify ? "energy verify" : "energy compute";
            Report rep(name,
                       g.with({{"k", r.str()},
                               {"d", std::to_string(a.dimension())},
                               {"mask", a.hex()},
                               {"cell-budget", std::to_string(*budget)}}),
                       g.digits);
            for_k(r, [&](unsigned kk) {
                if (verify) {
                    rep.add(verify_energy_bound(a, kk, g.verify(), eopts()));
                    return;
                }
                Record rec;
                rec.case_id = "d=" + std::to_string(a.dimension()) + " k=" + std::to_string(kk) + " mask=" + a.hex();
                ExactInt n;
                mpz_ui_pow_ui(n.get_mpz_t(), a.size(), kk);
                rec.extra = {{"size", std::to_string(a.size())},
                             {"energy", energy(a, kk, eopts()).get_str()},
                             {"size_pow_k", n.get_str()}};
                rep.add(std::move(rec));
            });
            return rep;
        });
    }
    {
        auto* sub = energy_cmd->add_subcommand("exhaustive", "every nonempty subset of {0,1}^d, d <= 4");
        auto d = std::make_shared<unsigned>(0);
        auto k = std::make_shared<std::string>();
        sub->add_option("--d", *d)->required();
        sub->add_option("--k", *k, "k or lo..hi")->required();
        actions.emplace_back(sub, [&g, d, k, eopts] {
            const Range r = parse_range(*k);
            Report rep("energy exhaustive", g.with({{"d", std::to_string(*d)}, {"k", r.str()}}), g.digits);
            for_k(r, [&](unsigned kk) {
                const ExhaustiveSummary s = exhaustive_verify(*d, kk, g.verify(), eopts());
                rep.tally(s.counts);
                const std::string prefix = "d=" + std::to_string(*d) + " k=" + std::to_string(kk);
                for (const auto& w : s.witnesses) {
                    Record rec;
                    rec.case_id = prefix + " mask=" + w;
                    rec.verdict = Verdict::ExactEquality;
                    rec.margin = "0";
                    rec.precision = g.prec;
                    rep.add(std::move(rec), false);
                }
                for (const auto& f : s.failures) {
                    Report scratch("", {}, g.digits);
                    scratch.add(f);
                    rep.add(scratch.records().front(), false);
                }
                rep.note(prefix + " subsets", std::to_string(s.counts.total()));
                rep.note(prefix + " equality_cases", std::to_string(s.witnesses.size()));
                if (!s.maximizer.empty()) {
                    rep.note(prefix + " maximizer", s.maximizer);
                }
                if (s.max_ratio) {
                    rep.note(prefix + " max_log_ratio", s.max_ratio->to_string(g.digits));
                }
            });
            return rep;
        });
    }
    {
        auto* sub = energy_cmd->add_subcommand("random", "seeded random subsets");
        auto d = std::make_shared<unsigned>(0);
        auto k = std::make_shared<std::string>();
        auto samples = std::make_shared<std::size_t>(100);
        auto seed = std::make_shared<std::uint64_t>(1);
        sub->add_option("--d", *d)->required();
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--samples", *samples)->capture_default_str();
        sub->add_option("--seed", *seed)->capture_default_str();
        sub->add_option("--cell-budget", *budget, "largest tally box (cells)")->capture_default_str();
        actions.emplace_back(sub, [&g, d, k, samples, seed, budget, eopts] {
            const Range r = parse_range(*k);
            Report rep("energy random",
                       g.with({{"d", std::to_string(*d)},
                               {"k", r.str()},
                               {"samples", std::to_string(*samples)},
                               {"seed", std::to_string(*seed)},
                               {"cell-budget", std::to_string(*budget)}}),
                       g.digits);
            for_k(r, [&](unsigned kk) {
                const RandomSummary s = random_verify(*d, kk, *samples, *seed, g.verify(), eopts());
                for (auto rr : s.reports) {
                    rr.case_id = "k=" + std::to_string(kk) + " " + rr.case_id;
                    rep.add(rr);
                }
            });
            return rep;
        });
    }
}

// --- walk -----------------------------------------------------------------------------

void add_walk(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* walk = app.add_subcommand("walk", "lazy random walk: P(S_k=0)^{1/p} <= P(S_k=-k)^{1/p} + P(S_k=k)^{1/p}");
    walk->require_subcommand(1);
    {
        auto* sub = walk->add_subcommand("verify", "exact endpoint laws on a q grid");
        auto k = std::make_shared<std::string>();
        auto q_grid = std::make_shared<std::size_t>(101);
        auto p = std::make_shared<std::string>();
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--q-grid", *q_grid, "points of the closed q grid on [0, 1]")->capture_default_str();
        sub->add_option("--p", *p, "exponent to test instead of p_k");
        actions.emplace_back(sub, [&g, k, q_grid, p] {
            const Range r = parse_range(*k);
            std::optional<ExactRational> exponent;
            Fields params{{"k", r.str()}, {"q-grid", std::to_string(*q_grid)}};
            if (!p->empty()) {
                exponent = parse_rational(*p);
                params.emplace_back("p", exponent->get_str());
            }
            Report rep("walk verify", g.with(params), g.digits);
            const GridSpec grid = GridSpec::closed(0, 1, *q_grid);
            grid.validate();
            const auto qs = grid.points();
            // The headline counterexample is the one at q = 1/2 when it fails
            // (the extremal law), otherwise the first failure.
            std::optional<std::string> counterexample;
            bool at_half = false;
            for_k(r, [&](unsigned kk) {
                const auto reports = indexed_map<VerificationReport>(qs.size(), Exec::Parallel, [&](std::size_t i) {
                    return verify_probineq(WalkLaw::from_q(qs[i]), kk, g.verify(), exponent);
                });
                for (std::size_t i = 0; i < reports.size(); ++i) {
                    if (reports[i].verdict == Verdict::CertainFalse && !at_half) {
                        const bool half = qs[i] == ExactRational(1, 2);
                        if (!counterexample || half) {
                            counterexample = reports[i].case_id;
                            at_half = half;
                        }
                    }
                    rep.add(reports[i]);
                }
            });
            if (counterexample) {
                rep.note("counterexample", *counterexample);
            }
            return rep;
        });
    }
    {
        auto* sub = walk->add_subcommand("simulate", "Monte Carlo endpoint frequencies against exact values");
        auto q = std::make_shared<std::string>();
        auto p_right = std::make_shared<std::string>();
        auto k = std::make_shared<unsigned>(0);
        auto trials = std::make_shared<std::uint64_t>(1000000);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto* qo = sub->add_option("--q", *q, "q = 2 P(X=1) in [0, 1]");
        auto* po = sub->add_option("--p-right", *p_right, "P(X=1) in [0, 1/2]");
        qo->excludes(po);
        sub->add_option("--k", *k)->required();
        sub->add_option("--trials", *trials)->capture_default_str();
        sub->add_option("--seed", *seed)->capture_default_str();
        actions.emplace_back(sub, [&g, q, p_right, k, trials, seed] {
            if (q->empty() == p_right->empty()) {
                throw DomainError("give exactly one of --q and --p-right");
            }
            const WalkLaw law =
                q->empty() ? WalkLaw::from_right_probability(parse_rational(*p_right)) : WalkLaw::from_q(parse_rational(*q));
            const unsigned kk = to_k(*k);
            Report rep("walk simulate",
                       g.with({{"q", law.q.get_str()},
                               {"k", std::to_string(kk)},
                               {"trials", std::to_string(*trials)},
                               {"seed", std::to_string(*seed)}}),
                       g.digits);
            const SimulationResult s = simulate(law, kk, *trials, *seed);
            Record rec;
            rec.case_id = "k=" + std::to_string(kk) + " q=" + law.q.get_str() + " trials=" + std::to_string(*trials) +
                          " seed=" + std::to_string(*seed);
            rec.verdict = s.verdict;
            const char* names[] = {"left", "middle", "right"};
            for (std::size_t i = 0; i < s.endpoints.size(); ++i) {
                const auto& e = s.endpoints[i];
                const std::string n = names[i];
                rec.extra.emplace_back(n + "_count", std::to_string(e.count));
                rec.extra.emplace_back(n + "_exact", e.exact.get_str());
                rec.extra.emplace_back(n + "_z", fixed(e.z, 4));
            }
            rec.extra.emplace_back("negative_count", std::to_string(s.negative));
            rep.add(std::move(rec));
            rep.note("max_abs_z", fixed(s.max_abs_z, 4));
            return rep;
        });
    }
}

// --- means -------------------------------------------------------------------------------

void add_means(CLI::App& app, const Globals& g, std::vector<std::pair<CLI::App*, Action>>& actions) {
    auto* means = app.add_subcommand("means", "Whiteley means against power means");
    means->require_subcommand(1);
    {
        auto* sub = means->add_subcommand("verify", "comparisons on the ray y = 1, x in [0, 4]");
        auto k = std::make_shared<std::string>();
        auto grid = std::make_shared<std::size_t>(101);
        auto direction = std::make_shared<std::string>("both");
        auto prior = std::make_shared<bool>(false);
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--grid", *grid)->capture_default_str();
        sub->add_option("--direction", *direction)
            ->check(CLI::IsMember({"upper", "lower", "both"}))
            ->capture_default_str();
        sub->add_flag("--prior-bounds", *prior, "also check the exponent-1/2 lower and scaled upper bounds");
        actions.emplace_back(sub, [&g, k, grid, direction, prior] {
            const Range r = parse_range(*k);
            Fields params{{"k", r.str()}, {"grid", std::to_string(*grid)}, {"direction", *direction}};
            if (*prior) {
                params.emplace_back("prior-bounds", "");
            }
            Report rep("means verify", g.with(params), g.digits);
            if (*grid < 2) {
                throw DomainError("grid requires at least 2 points");
            }
            const auto pairs = ray_grid(*grid);
            for_k(r, [&](unsigned kk) {
                if (*direction != "lower") {
                    for (const auto& rr : verify_upper(kk, pairs, g.verify()).reports) {
                        rep.add(rr);
                    }
                }
                if (*direction != "upper") {
                    for (const auto& rr : verify_lower(kk, pairs, g.verify(), *prior).reports) {
                        rep.add(rr);
                    }
                }
            });
            return rep;
        });
    }
    {
        auto* sub = means->add_subcommand("expand", "second-order coefficient of the Whiteley mean near x = y");
        auto k = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>("1/10000");
        auto tol = std::make_shared<std::string>("1/1000");
        sub->add_option("--k", *k, "k or lo..hi")->required();
        sub->add_option("--eps", *eps)->capture_default_str();
        sub->add_option("--tol", *tol, "allowed relative error")->capture_default_str();
        actions.emplace_back(sub, [&g, k, eps, tol] {
            const Range r = parse_range(*k);
            const ExactRational e = parse_rational(*eps);
            const ExactRational t = parse_rational(*tol);
            if (t <= 0) {
                throw DomainError("tolerance must be positive");
            }
            Report rep("means expand", g.with({{"k", r.str()}, {"eps", e.get_str()}, {"tol", t.get_str()}}), g.digits);
            for_k(r, [&](unsigned kk) {
                const std::string id = "k=" + std::to_string(kk) + " eps=" + e.get_str() + " expansion";
                const ExactRational limit = expansion_limit(kk);
                const auto eval = [&](Precision prec) {
                    const Interval c = expansion_coefficient(kk, e, prec);
                    VerificationReport out;
                    if (limit == 0) {
                        out = exact_equality(id, prec);
                        if (!c.is_zero()) {
                            out.verdict = Verdict::CertainFalse;
                            out.margin.reset();
                        }
                    } else {
                        const Interval rel = (c - Interval::from_rational(limit, prec)) / Interval::from_rational(limit, prec);
                        const Interval tol_i = Interval::from_rational(t, prec);
                        if (rel.contains_zero()) {
                            out.case_id = id;
                            out.verdict = to_verdict(certified_compare(Interval::hull(rel, -rel), tol_i));
                        } else {
                            out = compare_logs(id, log2(rel.is_negative() ? -rel : rel), log2(tol_i));
                        }
                    }
                    out.value = c;
                    out.precision = prec;
                    return out;
                };
                rep.add(escalate_report(eval, g.prec, g.cap), {{"limit", limit.get_str()}});
            });
            return rep;
        });
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Certified verification of binomial-sum, additive-energy, random-walk and mean inequalities",
                 "binsum"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--prec", g.prec, "starting precision in bits")->capture_default_str();
    app.add_option("--prec-cap", g.cap, "largest precision reached by escalation")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write the report to a file");
    app.add_option("--digits", g.digits, "significant digits of printed margins")
        ->check(CLI::Range(1, 200))
        ->capture_default_str();
    app.add_flag("--timing", g.timing, "include wall time in the report");

    std::vector<std::pair<CLI::App*, Action>> actions;
    add_pk(app, g, actions);
    add_ineq(app, g, actions);
    add_ode(app, g, actions);
    add_energy(app, g, actions);
    add_walk(app, g, actions);
    add_means(app, g, actions);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (g.prec < 32 || g.prec > g.cap || g.cap > (Precision{1} << 20)) {
            throw DomainError("precision must satisfy 32 <= --prec <= --prec-cap <= 2^20");
        }
        if (g.jobs > 0) {
            set_worker_count(g.jobs);
        }
        const ReportFormat format = parse_format(g.format);
        const auto it = std::find_if(actions.begin(), actions.end(), [](const auto& a) { return a.first->parsed(); });
        if (it == actions.end()) {
            throw DomainError("no command given");
        }
        const auto start = std::chrono::steady_clock::now();
        Report report = it->second();
        if (g.timing) {
            report.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        if (g.out.empty()) {
            report.write(out, format);
        } else {
            std::ofstream file(g.out);
            if (!file) {
                throw DomainError("cannot write '" + g.out + "'");
            }
            report.write(file, format);
        }
        return report.exit_code();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"binsum"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace binsum
