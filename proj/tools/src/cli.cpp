#include "suptor_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "suptor/arith.hpp"
#include "suptor/class_invariants.hpp"
#include "suptor/commutator.hpp"
#include "suptor/curve_gate.hpp"
#include "suptor/errors.hpp"
#include "suptor/hermitian.hpp"
#include "suptor/int_poly.hpp"
#include "suptor/mat_local.hpp"
#include "suptor/selftest.hpp"
#include "suptor/unit_lattices.hpp"

namespace suptor::cli {

namespace {

using nlohmann::json;

struct Flags {
    int ell = 0;
    int r = 0;
    int n = 0;
    int d = 0;
    int k = 1;
    std::string poly;
    int precision = 0;
    int budget = kDefaultGaloisBudget;
    int trials = 0;
    std::uint64_t seed = 1;
    bool json = false;
    bool override_hypotheses = false;
};

class Output {
public:
    Output(std::ostream &out, bool json_mode) : out_(out), json_(json_mode) {}

    void emit(const json &j, const std::string &text) {
        if (json_)
            out_ << j.dump(2) << '\n';
        else
            out_ << text << '\n';
    }

private:
    std::ostream &out_;
    bool json_;
};

std::string text_of(const json &j) {
    std::ostringstream os;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first)
            os << '\n';
        first = false;
        os << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump());
    }
    return os.str();
}

MatLocal random_level_matrix(const RingCtx &ctx, int dim, int level, std::mt19937_64 &rng) {
    MatLocal m = MatLocal::identity(ctx, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<int> digits(static_cast<std::size_t>(ctx.precision()), 0);
            for (int p = level; p < ctx.precision(); ++p)
                digits[static_cast<std::size_t>(p)] = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.ell()));
            m.set(i, j, m(i, j) + CycloElt(ctx, std::move(digits)));
        }
    return m;
}

int cmd_eps(const Flags &f, Output &o) {
    const int e = epsilon(f.ell, f.r);
    o.emit({{"ell", f.ell}, {"r", f.r}, {"epsilon", e}}, std::to_string(e));
    return Ok;
}

int cmd_c_lr(const Flags &f, Output &o) {
    const CLr c = c_lr(f.ell, f.r);
    o.emit({{"ell", f.ell}, {"r", f.r}, {"r_ell", c.r_ell}, {"c", c.c.get_str()}}, c.c.get_str());
    return Ok;
}

int cmd_h_minus(const Flags &f, Output &o) {
    const mpz_class h = h_minus(f.ell);
    o.emit({{"ell", f.ell}, {"h_minus", h.get_str()}}, h.get_str());
    return Ok;
}

int cmd_demjanenko(const Flags &f, Output &o) {
    const DemjanenkoReport rep = demjanenko_det(f.ell, f.r);
    json j = rep;
    json summary = {{"det", to_fraction_string(rep.det)},
                    {"h_minus", rep.h_minus.get_str()},
                    {"c_lr", rep.c_lr.get_str()},
                    {"expected_magnitude", to_fraction_string(rep.expected_magnitude)},
                    {"identity_holds", rep.identity_holds},
                    {"sign", rep.sign},
                    {"kappa_bound", rep.kappa_bound},
                    {"t", rep.t}};
    o.emit(j, text_of(summary));
    return rep.identity_holds ? Ok : ComputationFailure;
}

int cmd_kappa(const Flags &f, Output &o) {
    const KappaT kt = kappa_and_t(f.ell, f.r);
    const json j = {{"ell", f.ell}, {"r", f.r}, {"kappa_bound", kt.kappa_bound}, {"t", kt.t}};
    o.emit(j, text_of(j));
    return Ok;
}

int cmd_su_order(const Flags &f, Output &o) {
    const std::int64_t e = filtration_order_exponent(f.ell, f.d, f.n, f.k);
    const std::string order = std::to_string(f.ell) + "^" + std::to_string(e);
    o.emit({{"ell", f.ell}, {"d", f.d}, {"n", f.n}, {"k", f.k}, {"exponent", e}, {"order", order}}, order);
    return Ok;
}

int cmd_verify_commutator(const Flags &f, Output &o) {
    std::vector<int> ns;
    if (f.n > 0)
        ns.push_back(f.n);
    else
        for (int n = 3; n <= 9; ++n)
            ns.push_back(n);
    bool ok = true;
    json symbolic = json::array();
    std::ostringstream text;
    for (int n : ns) {
        const IdentityReport rep = verify_commutator_identity(n);
        ok = ok && rep.holds;
        symbolic.push_back({{"n", n}, {"case", rep.case_name}, {"holds", rep.holds}, {"residual", rep.residual}});
        text << "n=" << n << " (" << rep.case_name << "): " << (rep.holds ? "holds" : "FAILS") << '\n';
    }
    json j = {{"symbolic", symbolic}};
    if (f.ell > 0 && f.trials > 0) {
        std::mt19937_64 rng(f.seed);
        const int d = f.d > 0 ? f.d : 2;
        json random = json::array();
        for (int n : ns) {
            const RingCtx ctx(f.ell, n);
            int matched = 0;
            for (int t = 0; t < f.trials; ++t) {
                const auto rep = matrix_commutator_check(random_level_matrix(ctx, d, (n - 1) / 2, rng),
                                                         random_level_matrix(ctx, d, (n - 1) / 2, rng));
                matched += rep.formula_holds && rep.inverses_agree;
            }
            ok = ok && matched == f.trials;
            random.push_back({{"ell", f.ell}, {"d", d}, {"n", n}, {"trials", f.trials}, {"matched", matched}});
            text << "random ell=" << f.ell << " d=" << d << " n=" << n << ": " << matched << "/" << f.trials << '\n';
        }
        j["random"] = random;
    }
    j["holds"] = ok;
    std::string s = text.str();
    s.pop_back();
    o.emit(j, s);
    return ok ? Ok : ComputationFailure;
}

int cmd_lift_check(const Flags &f, Output &o) {
    if (f.n < 3)
        throw ArgumentError("--n must be at least 3");
    const int d = f.d > 0 ? f.d : 3;
    const int trials = f.trials > 0 ? f.trials : 10;
    std::mt19937_64 rng(f.seed);
    int verified = 0;
    for (int t = 0; t < trials; ++t) {
        const HermitianForm form = HermitianForm::standard(RingCtx(f.ell, f.n - 1), d, t % 2 ? -1 : 1);
        const MatLocal a = random_su_member(form, rng);
        const MatLocal lifted = lift_su(a, form);
        verified += lifted.reduce(f.n - 1) == a &&
                    classify_membership(lifted, form.with_precision(f.n)).kind == Membership::SU;
    }
    const json j = {{"ell", f.ell}, {"d", d}, {"n", f.n}, {"trials", trials}, {"verified", verified}};
    o.emit(j, std::to_string(verified) + "/" + std::to_string(trials) + " lifts verified");
    return verified == trials ? Ok : ComputationFailure;
}

int cmd_lattice_index(const Flags &f, Output &o) {
    const LatticeIndex li = lattice_index_check(f.ell, f.r, f.precision);
    const DemjanenkoReport rep = demjanenko_det(f.ell, f.r);
    const int t_det = valuation(rep.det2, f.ell);
    const json j = {{"ell", f.ell}, {"r", f.r},           {"t_prime", li.t},
                    {"precision", li.precision}, {"ord_det", t_det}, {"agree", li.t == t_det}};
    o.emit(j, text_of(j));
    return li.t == t_det ? Ok : ComputationFailure;
}

CurveOptions curve_options(const Flags &f) {
    CurveOptions opts;
    opts.galois_budget = f.budget;
    opts.override_hypotheses = f.override_hypotheses;
    return opts;
}

std::string curve_text(const CurveReport &rep) {
    std::ostringstream os;
    os << "f: " << rep.poly.to_string() << "\nepsilon: " << rep.epsilon << "\ndisc: " << rep.disc.get_str()
       << "\ndisc factorization:";
    for (const auto &[p, e] : rep.simple_prime.factorization.primes)
        os << ' ' << p.get_str() << (e > 1 ? "^" + std::to_string(e) : "");
    if (!rep.simple_prime.factorization.complete())
        os << " (unfactored " << rep.simple_prime.factorization.remainder.get_str() << ")";
    os << "\nsimple prime: " << (rep.simple_prime.prime ? rep.simple_prime.prime->get_str() : "none") << " ("
       << to_string(rep.simple_prime.status) << ")\ngalois: " << to_string(rep.galois.verdict)
       << "\nhypotheses verified: " << (rep.hypotheses_verified ? "yes" : "no");
    if (rep.degree) {
        const DegreeReport &d = *rep.degree;
        os << "\n|Gal cap A_r|: " << d.alt_order.get_str() << "\nSU exponent: " << d.su_exponent
           << "\n|U_red|: " << d.u_red.order.get_str() << "\ndegree: " << d.degree.a.get_str() << " * " << rep.ell
           << "^" << d.degree.b;
        if (d.reference)
            os << "\nreference: " << d.reference->a.get_str() << " * " << rep.ell << "^" << d.reference->b;
    }
    return os.str();
}

int cmd_check_curve(const Flags &f, Output &o) {
    const CurveReport rep = check_curve(f.ell, parse_poly(f.poly), curve_options(f));
    o.emit(json(rep), curve_text(rep));
    return rep.hypotheses_verified ? Ok : HypothesisFailure;
}

int cmd_division_degree(const Flags &f, Output &o) {
    const CurveReport rep = division_degree_report(f.ell, parse_poly(f.poly), curve_options(f));
    o.emit(json(rep), curve_text(rep));
    return Ok;
}

int cmd_selftest(const Flags &f, std::ostream &out) {
    const json j = run_selftest(f.seed);
    out << j.dump(2) << '\n';
    return j["passed"].get<bool>() ? Ok : ComputationFailure;
}

void report_error(std::ostream &err, std::ostream &out, bool json_mode, const std::string &kind,
                  const std::string &message, std::optional<std::size_t> position = std::nullopt) {
    if (json_mode) {
        json j = {{"error", {{"kind", kind}, {"message", message}}}};
        if (position)
            j["error"]["position"] = *position;
        out << j.dump(2) << '\n';
    }
    err << "error (" << kind << "): " << message << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Flags f;
    const bool json_mode = std::find(args.begin(), args.end(), "--json") != args.end();

    CLI::App app{"Unitary groups over cyclotomic local rings and division-field degrees", "suptor"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::function<int(Output &)> action;
    auto sub = [&](const std::string &name, const std::string &desc, std::function<int(Output &)> fn) {
        CLI::App *s = app.add_subcommand(name, desc);
        s->add_flag("--json", f.json, "JSON output");
        s->callback([&action, fn] { action = fn; });
        return s;
    };
    auto ell = [&](CLI::App *s) { s->add_option("--ell", f.ell, "odd prime ell")->required(); };
    auto r = [&](CLI::App *s) { s->add_option("--r", f.r, "degree r")->required(); };

    auto *s = sub("eps", "sign epsilon = (r/ell)", [&](Output &o) { return cmd_eps(f, o); });
    ell(s);
    r(s);
    s = sub("c-lr", "the constant c_{ell,r}", [&](Output &o) { return cmd_c_lr(f, o); });
    ell(s);
    r(s);
    s = sub("h-minus", "relative class number of Q(zeta_ell)", [&](Output &o) { return cmd_h_minus(f, o); });
    ell(s);
    s = sub("demjanenko", "determinant of [n'(i/j)] and its class number identity",
            [&](Output &o) { return cmd_demjanenko(f, o); });
    ell(s);
    r(s);
    s = sub("kappa", "kappa bound and t", [&](Output &o) { return cmd_kappa(f, o); });
    ell(s);
    r(s);
    s = sub("su-order", "exponent of |SU(V/lambda^n)_k|", [&](Output &o) { return cmd_su_order(f, o); });
    ell(s);
    s->add_option("--d", f.d, "dimension")->required();
    s->add_option("--n", f.n, "precision")->required();
    s->add_option("--k", f.k, "filtration level")->capture_default_str();
    s = sub("verify-commutator", "commutator formula, symbolically and on random matrices",
            [&](Output &o) { return cmd_verify_commutator(f, o); });
    s->add_option("--n", f.n, "precision (default: 3..9)");
    s->add_option("--ell", f.ell, "odd prime for random instances");
    s->add_option("--d", f.d, "matrix dimension for random instances");
    s->add_option("--trials", f.trials, "random instances per precision");
    s->add_option("--seed", f.seed, "random seed")->capture_default_str();
    s = sub("lift-check", "lift random SU members one level", [&](Output &o) { return cmd_lift_check(f, o); });
    ell(s);
    s->add_option("--n", f.n, "target precision")->required();
    s->add_option("--d", f.d, "dimension (default 3)");
    s->add_option("--trials", f.trials, "number of members (default 10)");
    s->add_option("--seed", f.seed, "random seed")->capture_default_str();
    s = sub("lattice-index", "ord_ell [U' : T''(U')] against ord_ell det 2[n']",
            [&](Output &o) { return cmd_lattice_index(f, o); });
    ell(s);
    r(s);
    s->add_option("--precision", f.precision, "starting precision");
    auto curve = [&](CLI::App *c) {
        ell(c);
        c->add_option("--poly", f.poly, "monic integer polynomial in x")->required();
        c->add_option("--budget", f.budget, "primes sampled for the Galois certificate")->capture_default_str();
    };
    s = sub("check-curve", "hypotheses on f", [&](Output &o) { return cmd_check_curve(f, o); });
    curve(s);
    s = sub("division-degree", "degree of the ell-division field",
            [&](Output &o) { return cmd_division_degree(f, o); });
    curve(s);
    s->add_flag("--override-hypotheses", f.override_hypotheses, "assemble the degree without verified hypotheses");
    s = sub("selftest", "property grid (JSON)", [&](Output &) { return cmd_selftest(f, out); });
    s->add_option("--seed", f.seed, "random seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        report_error(err, out, json_mode, "argument", e.what());
        err << app.help();
        return ArgumentFailure;
    }

    Output o(out, f.json);
    try {
        return action(o);
    } catch (const ParseError &e) {
        report_error(err, out, f.json, "parse", e.what(), e.position());
        return ArgumentFailure;
    } catch (const ArgumentError &e) {
        report_error(err, out, f.json, "argument", e.what());
        return ArgumentFailure;
    } catch (const ContextError &e) {
        report_error(err, out, f.json, "argument", e.what());
        return ArgumentFailure;
    } catch (const HypothesisError &e) {
        report_error(err, out, f.json, "hypothesis", e.what());
        return HypothesisFailure;
    } catch (const Error &e) {
        report_error(err, out, f.json, "computation", e.what());
        return ComputationFailure;
    }
}

} // namespace suptor::cli
