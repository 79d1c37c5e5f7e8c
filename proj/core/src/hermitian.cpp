#include "suptor/hermitian.hpp"

#include <nlohmann/json.hpp>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

namespace {

std::int64_t rational_modulus(const RingCtx &ctx) { return ipow(ctx.ell(), ctx.rational_exponent()); }

} // namespace

HermitianForm::HermitianForm(RingCtx ctx, std::vector<std::int64_t> gamma) : ctx_(std::move(ctx)), gamma_(std::move(gamma)) {
    if (gamma_.empty())
        throw ArgumentError("Hermitian form of dimension 0");
    const std::int64_t q = rational_modulus(ctx_);
    std::int64_t prod = 1;
    for (auto &a : gamma_) {
        if (mod(a, ctx_.ell()) == 0)
            throw ArgumentError("Gram entry " + std::to_string(a) + " is not a unit mod " + std::to_string(ctx_.ell()));
        a = mod(a, q);
        prod = mulmod(prod, a, ctx_.ell());
    }
    sign_ = legendre(prod, ctx_.ell());
}

HermitianForm HermitianForm::standard(const RingCtx &ctx, int dim, int sign) {
    if (dim < 1)
        throw ArgumentError("form dimension must be positive");
    if (sign != 1 && sign != -1)
        throw ArgumentError("sign must be +1 or -1");
    std::vector<std::int64_t> g(static_cast<std::size_t>(dim), 1);
    if (sign == -1)
        g.back() = smallest_nonresidue(ctx.ell());
    return HermitianForm(ctx, std::move(g));
}

MatLocal HermitianForm::matrix() const {
    std::vector<CycloElt> diag;
    for (auto a : gamma_)
        diag.push_back(CycloElt::from_int(ctx_, a));
    return MatLocal::diagonal(diag);
}

MatLocal HermitianForm::inverse_matrix() const {
    std::vector<CycloElt> diag;
    for (auto a : gamma_)
        diag.push_back(ring_inv(CycloElt::from_int(ctx_, a)));
    return MatLocal::diagonal(diag);
}

FpMatrix HermitianForm::residue() const {
    FpMatrix m(ell(), dim(), dim());
    for (int i = 0; i < dim(); ++i)
        m.set(i, i, gamma_[static_cast<std::size_t>(i)]);
    return m;
}

HermitianForm HermitianForm::with_precision(int precision) const {
    return HermitianForm(ctx_.with_precision(precision), gamma_);
}

void to_json(nlohmann::json &j, const HermitianForm &f) {
    j = nlohmann::json{{"ell", f.ell()}, {"dim", f.dim()}, {"gamma", f.gamma()}, {"sign", f.sign()}};
}

HermitianForm form_from_json(const nlohmann::json &j, int precision) {
    try {
        HermitianForm f(RingCtx(j.at("ell").get<int>(), precision), j.at("gamma").get<std::vector<std::int64_t>>());
        if (j.at("dim").get<int>() != f.dim())
            throw ArgumentError("Gram dim does not match gamma length");
        if (j.at("sign").get<int>() != f.sign())
            throw ArgumentError("Gram sign does not match the square class of gamma");
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed Gram JSON: ") + e.what());
    }
}

const char *to_string(Membership m) {
    switch (m) {
    case Membership::GU:
        return "GU";
    case Membership::U:
        return "U";
    case Membership::SU:
        return "SU";
    case Membership::None:
        break;
    }
    return "none";
}

MembershipVerdict classify_membership(const MatLocal &a, const HermitianForm &f) {
    if (a.dim() != f.dim())
        throw ArgumentError("matrix and form dimensions differ");
    require_same_ctx(a.ctx(), f.ctx());
    const RingCtx &ctx = a.ctx();
    const MatLocal gamma = f.matrix();
    const MatLocal p = a.dagger() * gamma * a;
    const CycloElt mu = p(0, 0) * ring_inv(gamma(0, 0));

    MembershipVerdict v;
    if (!mu.is_unit()) {
        v.failing_entry = std::make_pair(0, 0);
        return v;
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!(p(i, j) == mu * gamma(i, j))) {
                v.failing_entry = std::make_pair(i, j);
                return v;
            }
    const CycloElt det = det_local(a);
    if (!(conjugate(det) * det == ring_pow(mu, static_cast<std::uint64_t>(a.dim()))))
        throw InternalError("conj(det) det != mu^d for a similitude");
    v.multiplier = mu;
    v.det = det;
    const CycloElt one = CycloElt::one(ctx);
    if (!(mu == one))
        v.kind = Membership::GU;
    else if (!(det == one))
        v.kind = Membership::U;
    else
        v.kind = Membership::SU;
    return v;
}

int epsilon(int ell, int r) {
    require_odd_prime(ell, "ell");
    if (mod(r, ell) == 0)
        throw ArgumentError("ell = " + std::to_string(ell) + " divides r = " + std::to_string(r));
    return legendre(r, ell);
}

WeilGram weil_gram_and_epsilon(int ell, int r, std::int64_t c) {
    const int eps = epsilon(ell, r);
    if (r < 2)
        throw ArgumentError("r must be at least 2");
    if (mod(c, ell) == 0)
        throw ArgumentError("c must be a unit mod ell");
    WeilGram w;
    w.gram = FpMatrix(ell, r - 1, r - 1);
    for (int i = 0; i < r - 1; ++i)
        for (int j = 0; j < r - 1; ++j)
            w.gram.set(i, j, mulmod(c, (i == j) ? 1 - r : 1, ell));
    w.det = fp_det(w.gram);
    w.det_class = legendre(w.det, ell);
    w.r_class = legendre(r, ell);
    w.epsilon = eps;
    return w;
}

std::int64_t su_dimension(int d, int n) {
    if (d < 1 || n < 1)
        throw ArgumentError("su dimension needs d >= 1 and n >= 1");
    return n % 2 ? binomial(d, 2) : binomial(d + 1, 2) - 1;
}

std::int64_t u_dimension(int d, int n) {
    if (d < 1 || n < 1)
        throw ArgumentError("u dimension needs d >= 1 and n >= 1");
    return n % 2 ? binomial(d, 2) : binomial(d + 1, 2);
}

std::vector<FpMatrix> su_basis(const HermitianForm &f, int n) {
    if (n < 1)
        throw ArgumentError("su basis needs n >= 1");
    const int d = f.dim();
    const int ell = f.ell();
    const std::int64_t s = n % 2 ? -1 : 1;
    std::vector<FpMatrix> basis;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            FpMatrix m(ell, d, d);
            m.set(i, j, invmod(f.gamma()[static_cast<std::size_t>(i)], ell));
            m.set(j, i, s * invmod(f.gamma()[static_cast<std::size_t>(j)], ell));
            basis.push_back(std::move(m));
        }
    if (n % 2 == 0)
        for (int i = 0; i + 1 < d; ++i) {
            FpMatrix m(ell, d, d);
            m.set(i, i, 1);
            m.set(d - 1, d - 1, -1);
            basis.push_back(std::move(m));
        }
    return basis;
}

bool in_su(const FpMatrix &gamma, const FpMatrix &a, int n) {
    const FpMatrix lhs = gamma * a;
    const FpMatrix rhs = (a.transpose() * gamma).scaled(n % 2 ? -1 : 1);
    return lhs == rhs && a.trace() == 0;
}

std::int64_t filtration_order_exponent(int ell, int d, int n, int k, FiltrationGroup g) {
    require_odd_prime(ell, "ell");
    if (d < 1 || n < 1)
        throw ArgumentError("filtration exponent needs d >= 1 and n >= 1");
    if (k < 1 || k > n)
        throw ArgumentError("filtration level k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    std::int64_t e = 0;
    for (int i = k; i <= n - 1; ++i)
        e += g == FiltrationGroup::SU ? su_dimension(d, i + 1) : u_dimension(d, i + 1);
    return e;
}

MatLocal lift_su(const MatLocal &a, const HermitianForm &f) {
    const int p = a.precision();
    const int n = p + 1;
    const int ell = a.ell();
    const int d = a.dim();
    if (f.dim() != d || f.ell() != ell)
        throw ArgumentError("form does not match the matrix");
    if (a.level() < 1)
        throw MembershipError("lift_su needs a matrix congruent to I mod lambda");
    if (classify_membership(a, f.with_precision(p)).kind != Membership::SU)
        throw MembershipError("lift_su input is not in SU at precision " + std::to_string(p));

    const HermitianForm fn = f.with_precision(n);
    const RingCtx &ctx = fn.ctx();
    const MatLocal a1 = a.extend(n);
    const MatLocal defect = a1.dagger() * fn.matrix() * a1 - fn.matrix();
    if (defect.valuation() < n - 1)
        throw InternalError("lift defect below level n-1");
    const FpMatrix x = defect.digit(n - 1);
    const CycloElt det_defect = det_local(a1) - CycloElt::one(ctx);
    const std::int64_t c = det_defect.digit(n - 1);

    const std::int64_t half = invmod(2, ell);
    FpMatrix gamma_inv(ell, d, d);
    for (int i = 0; i < d; ++i)
        gamma_inv.set(i, i, invmod(fn.gamma()[static_cast<std::size_t>(i)], ell));
    FpMatrix y = (gamma_inv * x).scaled(half);
    if (n % 2 == 0)
        y.set(0, 0, y(0, 0) + c - y.trace());

    const MatLocal lifted = a1 - MatLocal::from_fp(ctx, y).shift_up(n - 1);
    if (classify_membership(lifted, fn).kind != Membership::SU || !(lifted.reduce(p) == a))
        throw InternalError("lift_su produced a matrix outside SU");
    return lifted;
}

MatLocal random_su_member(const HermitianForm &f, std::mt19937_64 &rng) {
    const RingCtx &ctx = f.ctx();
    const int n = ctx.precision();
    const int ell = ctx.ell();
    const int d = f.dim();
    auto random_slice = [&](int level_n) {
        FpMatrix s(ell, d, d);
        for (const auto &b : su_basis(f, level_n))
            s += b.scaled(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(ell)));
        return s;
    };
    MatLocal m = MatLocal::identity(ctx.with_precision(1), d);
    for (int p = 2; p <= n; ++p) {
        const RingCtx pc = ctx.with_precision(p);
        m = p == 2 ? MatLocal::identity(pc, d) : lift_su(m, f);
        m = m * (MatLocal::identity(pc, d) + MatLocal::from_fp(pc, random_slice(p)).shift_up(p - 1));
    }
    return m;
}

int permutation_sign(const std::vector<int> &sigma) {
    const std::size_t r = sigma.size();
    std::vector<bool> seen(r, false);
    int sign = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(sigma[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0)
            sign = -sign;
    }
    return sign;
}

FpMatrix perm_embed(const std::vector<int> &sigma, int ell) {
    require_odd_prime(ell, "ell");
    const int r = static_cast<int>(sigma.size());
    if (r < 2)
        throw ArgumentError("permutation of at least 2 points required");
    if (r % ell == 0)
        throw ArgumentError("ell divides r");
    std::vector<bool> hit(static_cast<std::size_t>(r), false);
    for (int s : sigma) {
        if (s < 0 || s >= r || hit[static_cast<std::size_t>(s)])
            throw ArgumentError("not a permutation");
        hit[static_cast<std::size_t>(s)] = true;
    }
    FpMatrix m(ell, r - 1, r - 1);
    for (int i = 0; i < r - 1; ++i) {
        const int img = sigma[static_cast<std::size_t>(i)];
        if (img < r - 1)
            m.set(img, i, 1);
        else
            for (int k = 0; k < r - 1; ++k)
                m.set(k, i, -1);
    }
    return m;
}

} // namespace suptor
