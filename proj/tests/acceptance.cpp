// Acceptance run: one PASS/FAIL line per criterion, with runtime limits.
#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "suptor/arith.hpp"
#include "suptor/class_invariants.hpp"
#include "suptor/commutator.hpp"
#include "suptor/curve_gate.hpp"
#include "suptor/cyclo_local.hpp"
#include "suptor/errors.hpp"
#include "suptor/hermitian.hpp"
#include "suptor/unit_lattices.hpp"
#include "suptor_cli/cli.hpp"

using namespace suptor;

namespace {

struct Outcome {
    bool passed = true;
    // Set when the only failing clause is proven false for the given input.
    bool unattainable = false;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            notes.push_back("failed: " + what);
        }
    }
};

std::string cli_out(const std::vector<std::string> &args, int &code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

MatLocal random_level(const RingCtx &ctx, int dim, int level, std::mt19937_64 &rng) {
    MatLocal m = MatLocal::identity(ctx, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            std::vector<int> d(static_cast<std::size_t>(ctx.precision()), 0);
            for (int p = level; p < ctx.precision(); ++p)
                d[static_cast<std::size_t>(p)] = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.ell()));
            m.set(i, j, m(i, j) + CycloElt(ctx, d));
        }
    return m;
}

void ac1(Outcome &o) {
    int code = 0;
    o.require(cli_out({"eps", "--ell", "11", "--r", "8"}, code) == "-1\n" && code == 0, "eps --ell 11 --r 8 = -1");
    int mismatches = 0;
    for (std::int64_t ell : primes_up_to(31)) {
        if (ell == 2)
            continue;
        for (int r = 1; r <= 20; ++r)
            if (r % ell != 0 && epsilon(static_cast<int>(ell), r) != legendre(r, ell))
                ++mismatches;
    }
    o.require(mismatches == 0, "epsilon agrees with the Legendre symbol on the grid");
}

void ac2(Outcome &o) {
    o.require(filtration_order_exponent(11, 7, 10, 1) == 219, "filtration_order_exponent(11, 7, 10, 1) = 219");
    const RingCtx ctx(3, 3);
    for (int sign : {1, -1}) {
        const HermitianForm f = HermitianForm::standard(ctx, 2, sign);
        const MatLocal gamma = f.matrix();
        int count = 0;
        for (int code = 0; code < 6561; ++code) {
            MatLocal m = MatLocal::identity(ctx, 2);
            for (int e = 0, x = code; e < 4; ++e, x /= 9)
                m.set(e / 2, e % 2, m(e / 2, e % 2) + CycloElt(ctx, {0, x % 3, (x / 3) % 3}));
            count += m.dagger() * gamma * m == gamma && det_local(m) == CycloElt::one(ctx);
        }
        o.require(count == 27, "|SU(V/lambda^3)_1| = 27 by enumeration (sign " + std::to_string(sign) + ")");
    }
    o.require(filtration_order_exponent(3, 2, 3, 1) == 3, "formula gives 3^3 for ell = 3, d = 2, n = 3");
}

void ac3(Outcome &o) {
    for (int n = 3; n <= 9; ++n)
        o.require(verify_commutator_identity(n).holds, "symbolic identity at n = " + std::to_string(n));
    std::mt19937_64 rng(2024);
    int bad = 0, total = 0;
    for (int ell : {3, 5})
        for (int d : {2, 3})
            for (int n = 3; n <= 6; ++n) {
                const RingCtx ctx(ell, n);
                for (int k = 0; k < 200; ++k, ++total) {
                    const auto rep = matrix_commutator_check(random_level(ctx, d, (n - 1) / 2, rng),
                                                             random_level(ctx, d, (n - 1) / 2, rng));
                    bad += !(rep.formula_holds && rep.inverses_agree);
                }
            }
    o.require(total == 3200 && bad == 0, std::to_string(bad) + " of " + std::to_string(total) +
                                             " random instances disagree with the digit formula");
}

void ac4(Outcome &o) {
    std::mt19937_64 rng(4);
    const std::vector<std::pair<int, int>> grid{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 3}, {5, 4}, {5, 5}, {5, 6}};
    int bad = 0;
    for (int k = 0; k < 100; ++k) {
        const auto [ell, n] = grid[static_cast<std::size_t>(k) % grid.size()];
        const HermitianForm f = HermitianForm::standard(RingCtx(ell, n - 1), 3, k % 2 ? 1 : -1);
        const MatLocal a = random_su_member(f, rng);
        if (classify_membership(a, f).kind != Membership::SU) {
            ++bad;
            continue;
        }
        const MatLocal b = lift_su(a, f);
        bad += !(b.precision() == n && b.reduce(n - 1) == a &&
                 classify_membership(b, f.with_precision(n)).kind == Membership::SU);
    }
    o.require(bad == 0, std::to_string(bad) + " of 100 lifts are not verified SU members reducing to the input");
}

void ac5(Outcome &o) {
    int cases = 0, bad = 0;
    for (std::int64_t ell : primes_up_to(31)) {
        if (ell == 2)
            continue;
        const int l = static_cast<int>(ell);
        for (int r = 2; r <= 20; ++r) {
            if (r % l == 0)
                continue;
            ++cases;
            const DemjanenkoReport rep = demjanenko_det(l, r);
            const mpq_class magnitude = abs(rep.det);
            const bool ok = rep.identity_holds && magnitude == rep.expected_magnitude &&
                            valuation(rep.det2, ell) == valuation(mpz_class(rep.h_minus * rep.c_lr), ell) - 1;
            bad += !ok;
            if (!ok)
                o.notes.push_back("identity fails at ell = " + std::to_string(l) + ", r = " + std::to_string(r));
        }
    }
    o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(cases) + " grid points fail");
    o.require(valuation(mpz_class(h_minus(11) * c_lr(11, 8).c), 11) == 1, "ord_11(h^- c_{11,8}) = 1");
    const KappaT kt = kappa_and_t(11, 8);
    o.require(kt.kappa_bound == 0 && kt.t == 0, "kappa bound = 0 and t = 0 at (11, 8)");
}

void ac6(Outcome &o) {
    for (int ell : {3, 5, 7, 11, 13, 17, 19})
        o.require(h_minus(ell) == 1, "h^-(" + std::to_string(ell) + ") = 1");
    o.require(h_minus(23) == 3, "h^-(23) = 3");
    o.require(h_minus(29) == 8, "h^-(29) = 8");
}

void ac7(Outcome &o) {
    const IntPoly f = parse_poly("x^8+x+1");
    const mpz_class disc = discriminant(f);
    o.require(disc == 15953673 && disc == mpz_class(3) * 19 * 19 * 14731, "disc = 3 * 19^2 * 14731");
    const SimplePrimeResult sp = find_simple_prime(disc, 11);
    o.require(sp.status == SimplePrimeStatus::Found && sp.prime && *sp.prime == 14731, "simple prime = 14731");

    const GaloisCertificate g = galois_certificate(f);
    if (g.verdict != GaloisVerdict::SrCertified) {
        o.require(false, std::string("Galois certificate = S_8 (got ") + to_string(g.verdict) + ")");
        if (g.verdict == GaloisVerdict::Reducible && g.factor) {
            const auto [q, rem] = divmod_monic(f, *g.factor);
            if (rem.is_zero() && g.factor->degree() > 0 && g.factor->degree() < f.degree()) {
                o.unattainable = true;
                o.notes.push_back("x^8 + x + 1 = (" + g.factor->to_string() + ") * (" + q.to_string() +
                                  ") exactly, so its Galois group is not S_8 and no certificate can exist");
            }
        }
    }

    CurveOptions opts;
    opts.override_hypotheses = true;
    const CurveReport rep = division_degree_report(11, f, opts);
    o.require(rep.degree.has_value(), "degree report assembled");
    if (!rep.degree)
        return;
    const DegreeReport &d = *rep.degree;
    o.require(d.alt_order == 20160, "r!/2 = 20160");
    o.require(d.su_exponent == 219, "SU factor 11^219");
    const ReducedUnitGroup oracle_u = reduced_unit_group(11, 8);
    o.require(d.u_red.order == oracle_u.order, "|U_red| from the Smith normal form");
    const FactoredDegree u = split_ell_part(oracle_u.order, 11);
    o.require(d.degree.a == d.alt_order * u.a && d.degree.b == 219 + u.b, "degree = r!/2 * 11^219 * |U_red|");
    o.require(d.reference && d.reference->a == 40320 && d.reference->b == 260, "reference value 8! * 11^260 emitted");

    nlohmann::json j = rep;
    const auto &disc_field = j["degree"]["discrepancy"];
    o.require(disc_field.is_object() && disc_field.contains("b_difference"), "structured discrepancy field");
    if (disc_field.is_object())
        o.notes.push_back("computed " + d.degree.a.get_str() + " * 11^" + std::to_string(d.degree.b) +
                          ", reference 40320 * 11^260");
    const auto failed = std::count_if(o.notes.begin(), o.notes.end(),
                                      [](const std::string &s) { return s.rfind("failed: ", 0) == 0; });
    o.unattainable = o.unattainable && failed == 1;
}

void ac8(Outcome &o) {
    int bad = 0;
    for (int ell : {3, 5, 7, 11})
        for (int r = 2; r <= 12; ++r) {
            if (r % ell == 0)
                continue;
            const int t = lattice_index_check(ell, r).t;
            const int expected = valuation(demjanenko_det(ell, r).det2, ell);
            if (t != expected) {
                ++bad;
                o.notes.push_back("ell = " + std::to_string(ell) + ", r = " + std::to_string(r) + ": t' = " +
                                  std::to_string(t) + ", ord = " + std::to_string(expected));
            }
        }
    o.require(bad == 0, "t' = ord_ell(det 2[n']) on the grid");
    o.require(lattice_index_check(11, 8).t == 0 && valuation(demjanenko_det(11, 8).det2, 11) == 0,
              "both are 0 at (11, 8)");
}

void ac9(Outcome &o) {
    const RingCtx ctx(3, 3);
    const oracle::CyclotomicRing z(3);
    int bad = 0;
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b) {
            const CycloElt x(ctx, {a % 3, (a / 3) % 3, a / 9});
            const CycloElt y(ctx, {b % 3, (b / 3) % 3, b / 9});
            bad += !z.congruent(z.from_digits((x * y).digits()), z.mul(z.from_digits(x.digits()), z.from_digits(y.digits())), 3);
        }
    o.require(bad == 0, "27 x 27 multiplication table");
    for (int ell : {3, 5, 7, 11}) {
        const RingCtx c(ell, 4);
        const CycloElt l = CycloElt::lambda(c);
        o.require((conjugate(l) + l).valuation() >= 2, "conj(lambda) + lambda = 0 mod lambda^2 at ell = " +
                                                            std::to_string(ell));
    }
}

void ac10(Outcome &o) {
    int c1 = 0, c2 = 0;
    const std::string a = cli_out({"selftest", "--seed", "20240917"}, c1);
    const std::string b = cli_out({"selftest", "--seed", "20240917"}, c2);
    o.require(c1 == 0 && c2 == 0, "selftest exits 0");
    o.require(!a.empty() && a == b, "byte-identical JSON across runs");
    o.require(nlohmann::json::parse(a)["passed"] == true, "all property suites pass");
}

} // namespace

int main(int argc, char **argv) {
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    struct Criterion {
        const char *label;
        double limit_s;
        std::function<void(Outcome &)> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1 epsilon", 1, ac1},          {"AC2 filtration exponent", 10, ac2}, {"AC3 commutator identity", 60, ac3},
        {"AC4 lift correctness", 30, ac4}, {"AC5 Demjanenko identity", 120, ac5}, {"AC6 h^- oracle", 30, ac6},
        {"AC7 curve gate", 60, ac7},      {"AC8 lattice index", 60, ac8},       {"AC9 ring kernel", 5, ac9},
        {"AC10 selftest determinism", 60, ac10},
    };

    int failures = 0, unattainable = 0;
    for (const auto &c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception &e) {
            o.passed = false;
            o.unattainable = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) {
            o.passed = false;
            o.unattainable = false;
            o.notes.push_back("over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit");
        }
        std::cout << (o.passed ? "PASS " : "FAIL ") << c.label << " (" << secs << " s)";
        if (!o.passed && o.unattainable)
            std::cout << " [unattainable for this input]";
        std::cout << '\n';
        for (const auto &n : o.notes)
            std::cout << "    " << n << '\n';
        if (!o.passed)
            (o.unattainable ? unattainable : failures)++;
    }
    std::cout << failures << " failed, " << unattainable << " unattainable\n";
    return failures > 0 || (strict && unattainable > 0) ? 1 : 0;
}
