#include "suptor/commutator.hpp"

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

CommutatorSeries commutator_series(int n) {
    if (n < 3)
        throw ArgumentError("commutator identity needs n >= 3, got " + std::to_string(n));
    const int big_n = (n - 1) / 2;
    auto alphabet = std::make_shared<Alphabet>();
    for (int i = big_n; i < n; ++i)
        alphabet->push_back("A" + std::to_string(i));
    for (int i = big_n; i < n; ++i)
        alphabet->push_back("B" + std::to_string(i));
    const std::shared_ptr<const Alphabet> alpha = alphabet;

    const FreeSeries one = FreeSeries::constant(alpha, n, 1);
    auto t = [&](int k) { return FreeSeries::t_power(alpha, n, k); };
    auto a = [&](int i) { return FreeSeries::monomial(alpha, n, 0, "A" + std::to_string(i)); };
    auto b = [&](int i) { return FreeSeries::monomial(alpha, n, 0, "B" + std::to_string(i)); };
    auto br = [](const FreeSeries &x, const FreeSeries &y) { return x * y - y * x; };

    FreeSeries aa = one, bb = one;
    for (int i = big_n; i < n; ++i) {
        aa += t(i) * a(i);
        bb += t(i) * b(i);
    }

    CommutatorSeries cs{n, big_n, "", aa, bb, one, FreeSeries(alpha, n)};
    if (n % 2 == 1) {
        cs.case_name = "odd";
        cs.commutator = one + t(n - 1) * br(a(big_n), b(big_n));
    } else if (n >= 6) {
        cs.case_name = "even";
        cs.commutator = one + t(n - 2) * br(a(big_n), b(big_n)) +
                        t(n - 1) * (br(a(big_n), b(big_n + 1)) + br(a(big_n + 1), b(big_n)));
    } else {
        cs.case_name = "four";
        cs.commutator = one + t(2) * br(a(1), b(1)) +
                        t(3) * (br(a(1), b(2)) + br(a(2), b(1)) + br(b(1), a(1)) * (a(1) + b(1)));
    }
    cs.residual = aa * bb - cs.commutator * bb * aa;
    return cs;
}

IdentityReport verify_commutator_identity(int n) {
    const CommutatorSeries cs = commutator_series(n);
    IdentityReport r;
    r.holds = cs.residual.is_zero();
    r.case_name = cs.case_name;
    if (!r.holds)
        r.residual = cs.residual.to_string();
    return r;
}

MatLocal group_commutator(const MatLocal &a, const MatLocal &b) { return a * b * inverse(a) * inverse(b); }

namespace {

MatLocal level_term(const RingCtx &ctx, const FpMatrix &m, int k) {
    return MatLocal::from_fp(ctx, m).shift_up(k);
}

} // namespace

MatrixCommutatorReport matrix_commutator_check(const MatLocal &a, const MatLocal &b) {
    require_same_ctx(a.ctx(), b.ctx());
    if (a.dim() != b.dim())
        throw ArgumentError("matrix dimensions differ");
    const RingCtx &ctx = a.ctx();
    const int n = ctx.precision();
    if (n < 3)
        throw ArgumentError("commutator formula needs precision >= 3");
    const int big_n = (n - 1) / 2;
    if (a.level() < big_n || b.level() < big_n)
        throw MembershipError("matrices must be congruent to I mod lambda^" + std::to_string(big_n));

    const MatLocal ai = inverse(a), bi = inverse(b);
    MatrixCommutatorReport r{false, false, false, false, MatLocal(ctx, a.dim()), MatLocal(ctx, a.dim())};
    r.inverses_agree = ai == inverse_neumann(a) && bi == inverse_neumann(b);
    r.commutator = a * b * ai * bi;

    const MatLocal id = MatLocal::identity(ctx, a.dim());
    auto A = [&](int i) { return a.digit(i); };
    auto B = [&](int i) { return b.digit(i); };
    if (n % 2 == 1) {
        r.expected = id + level_term(ctx, bracket(A(big_n), B(big_n)), n - 1);
    } else if (n >= 6) {
        r.expected = id + level_term(ctx, bracket(A(big_n), B(big_n)), n - 2) +
                     level_term(ctx, bracket(A(big_n), B(big_n + 1)) + bracket(A(big_n + 1), B(big_n)), n - 1);
    } else {
        const FpMatrix c = bracket(B(1), A(1));
        r.expected = id + level_term(ctx, bracket(A(1), B(1)), 2) +
                     level_term(ctx, bracket(A(1), B(2)) + bracket(A(2), B(1)) + c * A(1) + c * B(1), 3);
    }
    r.formula_holds = r.commutator == r.expected;
    r.central_applicable = a.level() + b.level() >= n;
    if (r.central_applicable)
        r.central_holds = r.commutator == id;
    return r;
}

FpMatrix gamma_inv_e(const std::vector<std::int64_t> &gamma, int ell, int i, int j, int n) {
    const int d = static_cast<int>(gamma.size());
    FpMatrix m(ell, d, d);
    m.set(i, j, invmod(gamma[static_cast<std::size_t>(i)], ell));
    const std::int64_t s = n % 2 ? -1 : 1;
    m.set(j, i, m(j, i) + s * invmod(gamma[static_cast<std::size_t>(j)], ell));
    return m;
}

BracketEntry eij_bracket_table(const std::vector<std::int64_t> &gamma, int ell, int i, int j, int l, int m, int n) {
    require_odd_prime(ell, "ell");
    const int d = static_cast<int>(gamma.size());
    if (i < 0 || j < 0 || l < 0 || i >= d || j >= d || l >= d)
        throw ArgumentError("bracket index out of range");
    if (j == i || j == l)
        throw ArgumentError("bracket table needs j != i and j != l");
    for (auto g : gamma)
        if (mod(g, ell) == 0)
            throw ArgumentError("Gram entries must be units");
    BracketEntry e;
    e.bracket = bracket(gamma_inv_e(gamma, ell, i, j, m), gamma_inv_e(gamma, ell, j, l, n));
    const std::int64_t aj_inv = invmod(gamma[static_cast<std::size_t>(j)], ell);
    if (i != l) {
        e.formula = gamma_inv_e(gamma, ell, i, l, m + n + 1).scaled(aj_inv);
    } else {
        const std::int64_t coeff = (m + n + 1) % 2 ? 0 : 2;
        const std::int64_t ai_inv = invmod(gamma[static_cast<std::size_t>(i)], ell);
        FpMatrix diff(ell, d, d);
        diff.set(i, i, 1);
        diff.set(j, j, -1);
        e.formula = diff.scaled(mulmod(coeff, mulmod(ai_inv, aj_inv, ell), ell));
    }
    e.matches = e.bracket == e.formula;
    return e;
}

CommutatorSpan commutator_span(const HermitianForm &f, int n) {
    const int d = f.dim();
    const int ell = f.ell();
    if (n < 3 || d < 3)
        throw ArgumentError("commutator span needs n >= 3 and d >= 3");
    const int big_n = (n - 1) / 2;
    const int big_m = n - 1 - big_n;
    const FpMatrix gamma = f.residue();

    auto lifted = [&](const FpMatrix &slice, int level) {
        const RingCtx start = f.ctx().with_precision(level + 1);
        MatLocal x = MatLocal::identity(start, d) + MatLocal::from_fp(start, slice).shift_up(level);
        while (x.precision() < n)
            x = lift_su(x, f);
        return x;
    };

    CommutatorSpan span;
    span.dimension = su_dimension(d, n);
    span.all_in_su = true;
    std::vector<FpMatrix> tops;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                if (j == i || j == l)
                    continue;
                const MatLocal a = lifted(gamma_inv_e(f.gamma(), ell, i, j, big_n + 1), big_n);
                const MatLocal b = lifted(gamma_inv_e(f.gamma(), ell, j, l, big_m + 1), big_m);
                const MatLocal c = group_commutator(a, b);
                if (c.level() < n - 1)
                    span.all_in_su = false;
                const FpMatrix top = c.digit(n - 1);
                if (!in_su(gamma, top, n))
                    span.all_in_su = false;
                tops.push_back(top);
                ++span.pairs;
            }
    span.rank = fp_span_rank(tops);
    return span;
}

} // namespace suptor
