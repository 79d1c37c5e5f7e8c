#include "suptor/cyclo_local.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

namespace detail {

struct RingTables {
    int ell = 0;
    int precision = 0;
    std::int64_t modulus = 0;
    // lambda_pow[i] = zeta-coordinates of lambda^i mod modulus, i < precision.
    std::vector<ZetaPoly> lambda_pow;
    // ell / (1 - zeta) = sum_{j} (ell - 1 - j) zeta^j.
    ZetaPoly ell_over_lambda;
};

} // namespace detail

namespace {

using detail::RingTables;

// Fold a polynomial of any length into the basis 1..zeta^{ell-2}, modulo M.
ZetaPoly fold_reduce(int ell, std::int64_t M, std::span<const std::int64_t> poly) {
    std::vector<std::int64_t> acc(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        auto &slot = acc[i % static_cast<std::size_t>(ell)];
        slot = mod(slot + mod(poly[i], M), M);
    }
    ZetaPoly out(static_cast<std::size_t>(ell - 1));
    std::int64_t top = acc[static_cast<std::size_t>(ell - 1)];
    for (int i = 0; i < ell - 1; ++i)
        out[static_cast<std::size_t>(i)] = mod(acc[static_cast<std::size_t>(i)] - top, M);
    return out;
}

ZetaPoly poly_mul(int ell, std::int64_t M, const ZetaPoly &a, const ZetaPoly &b) {
    std::vector<__int128> acc(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto &slot = acc[(i + j) % static_cast<std::size_t>(ell)];
            slot = (slot + static_cast<__int128>(a[i]) * b[j]) % M;
        }
    }
    std::vector<std::int64_t> folded(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        folded[i] = static_cast<std::int64_t>(acc[i]);
    return fold_reduce(ell, M, folded);
}

// Peel off lambda-adic digits from a reduced zeta-polynomial.
std::vector<int> extract_digits(const RingTables &t, ZetaPoly p) {
    const int ell = t.ell;
    const std::int64_t M = t.modulus;
    std::vector<int> digits(static_cast<std::size_t>(t.precision));
    std::vector<std::int64_t> h(static_cast<std::size_t>(ell - 1));
    for (int i = 0; i < t.precision; ++i) {
        std::int64_t s = 0;
        for (auto c : p)
            s += c;
        const std::int64_t d = mod(s, ell);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(d);
        if (i + 1 == t.precision)
            break;
        p[0] -= d;
        s -= d;
        const std::int64_t k = s / ell;
        p[0] -= k * ell;
        std::int64_t run = 0;
        for (int j = 0; j < ell - 1; ++j) {
            run += p[static_cast<std::size_t>(j)];
            h[static_cast<std::size_t>(j)] = run;
        }
        for (int j = 0; j < ell - 1; ++j) {
            __int128 v = static_cast<__int128>(h[static_cast<std::size_t>(j)]) +
                         static_cast<__int128>(k) * t.ell_over_lambda[static_cast<std::size_t>(j)];
            p[static_cast<std::size_t>(j)] = mod(static_cast<std::int64_t>(v % M), M);
        }
    }
    return digits;
}

std::shared_ptr<const RingTables> build_tables(int ell, int precision) {
    auto t = std::make_shared<RingTables>();
    t->ell = ell;
    t->precision = precision;
    const int m = (precision + ell - 2) / (ell - 1) + 1;
    const long double limit = static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4) /
                              (static_cast<long double>(ell) * ell);
    long double M = 1;
    for (int i = 0; i < m; ++i) {
        M *= ell;
        if (M > limit)
            throw ArgumentError("precision " + std::to_string(precision) + " too large for ell = " +
                                std::to_string(ell));
    }
    t->modulus = ipow(ell, m);

    ZetaPoly lam(static_cast<std::size_t>(ell - 1), 0);
    lam[0] = 1;
    t->lambda_pow.push_back(fold_reduce(ell, t->modulus, lam));
    ZetaPoly one_minus_zeta(static_cast<std::size_t>(ell - 1), 0);
    one_minus_zeta[0] = 1;
    one_minus_zeta[1] = t->modulus - 1;
    for (int i = 1; i < precision; ++i)
        t->lambda_pow.push_back(poly_mul(ell, t->modulus, t->lambda_pow.back(), one_minus_zeta));

    t->ell_over_lambda.resize(static_cast<std::size_t>(ell - 1));
    for (int j = 0; j < ell - 1; ++j)
        t->ell_over_lambda[static_cast<std::size_t>(j)] = ell - 1 - j;
    return t;
}

CycloElt from_poly(const RingCtx &ctx, const ZetaPoly &reduced) {
    return CycloElt(ctx, extract_digits(ctx.tables(), reduced));
}

} // namespace

RingCtx::RingCtx(int ell, int precision) : ell_(ell), precision_(precision) {
    require_odd_prime(ell, "ell");
    if (precision < 1)
        throw ArgumentError("precision must be at least 1, got " + std::to_string(precision));
    tables_ = build_tables(ell, precision);
}

std::int64_t RingCtx::modulus() const noexcept { return tables_->modulus; }

void require_same_ctx(const RingCtx &a, const RingCtx &b) {
    if (!(a == b))
        throw ContextError("ring contexts differ: (ell " + std::to_string(a.ell()) + ", precision " +
                           std::to_string(a.precision()) + ") vs (ell " + std::to_string(b.ell()) +
                           ", precision " + std::to_string(b.precision()) + ")");
}

CycloElt::CycloElt(RingCtx ctx) : ctx_(std::move(ctx)), digits_(static_cast<std::size_t>(ctx_.precision()), 0) {}

CycloElt::CycloElt(RingCtx ctx, std::vector<int> digits) : ctx_(std::move(ctx)), digits_(std::move(digits)) {
    if (digits_.size() != static_cast<std::size_t>(ctx_.precision()))
        throw ArgumentError("expected " + std::to_string(ctx_.precision()) + " digits, got " +
                            std::to_string(digits_.size()));
    for (int d : digits_)
        if (d < 0 || d >= ctx_.ell())
            throw ArgumentError("digit " + std::to_string(d) + " outside [0, " + std::to_string(ctx_.ell()) + ")");
}

CycloElt CycloElt::from_int(const RingCtx &ctx, std::int64_t value) {
    const std::int64_t v = value;
    return canonicalize(ctx, std::span<const std::int64_t>(&v, 1));
}

CycloElt CycloElt::from_int(const RingCtx &ctx, const mpz_class &value) {
    mpz_class r;
    mpz_class M = static_cast<long>(ctx.modulus());
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), M.get_mpz_t());
    return from_int(ctx, static_cast<std::int64_t>(r.get_si()));
}

CycloElt CycloElt::zeta(const RingCtx &ctx, std::int64_t power) {
    std::vector<std::int64_t> poly(static_cast<std::size_t>(ctx.ell()), 0);
    poly[static_cast<std::size_t>(mod(power, ctx.ell()))] = 1;
    return canonicalize(ctx, poly);
}

CycloElt CycloElt::lambda(const RingCtx &ctx, int power) {
    if (power < 0)
        throw ArgumentError("negative power of lambda");
    CycloElt r(ctx);
    if (power < ctx.precision())
        r.digits_[static_cast<std::size_t>(power)] = 1;
    return r;
}

int CycloElt::valuation() const noexcept {
    for (std::size_t i = 0; i < digits_.size(); ++i)
        if (digits_[i] != 0)
            return static_cast<int>(i);
    return precision();
}

ZetaPoly CycloElt::lift() const {
    const auto &t = ctx_.tables();
    ZetaPoly out(static_cast<std::size_t>(ell() - 1), 0);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] == 0)
            continue;
        const auto &lp = t.lambda_pow[i];
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = static_cast<std::int64_t>((out[j] + static_cast<__int128>(digits_[i]) * lp[j]) % t.modulus);
    }
    return out;
}

ZetaInt CycloElt::lift_exact() const {
    const int l = ell();
    ZetaInt out(static_cast<std::size_t>(l - 1), 0);
    ZetaInt power = zeta::lambda_power(l, 0);
    const ZetaInt lam = zeta::lambda_power(l, 1);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i > 0)
            power = zeta::mul(l, power, lam);
        if (digits_[i] != 0)
            out = zeta::add(out, zeta::scale(power, digits_[i]));
    }
    return out;
}

CycloElt CycloElt::reduce(int p) const {
    if (p < 1 || p > precision())
        throw ArgumentError("cannot reduce precision " + std::to_string(precision()) + " to " + std::to_string(p));
    return CycloElt(ctx_.with_precision(p), std::vector<int>(digits_.begin(), digits_.begin() + p));
}

CycloElt CycloElt::extend(int p) const {
    if (p < precision())
        throw ArgumentError("cannot extend precision " + std::to_string(precision()) + " to " + std::to_string(p));
    std::vector<int> d = digits_;
    d.resize(static_cast<std::size_t>(p), 0);
    return CycloElt(ctx_.with_precision(p), std::move(d));
}

CycloElt CycloElt::shift_up(int s) const {
    if (s < 0)
        throw ArgumentError("negative shift");
    CycloElt r(ctx_);
    for (int i = 0; i + s < precision(); ++i)
        r.digits_[static_cast<std::size_t>(i + s)] = digits_[static_cast<std::size_t>(i)];
    return r;
}

CycloElt CycloElt::shift_down(int s) const {
    if (s < 0 || s >= precision())
        throw ArgumentError("shift by " + std::to_string(s) + " out of range for precision " +
                            std::to_string(precision()));
    if (valuation() < s)
        throw DomainError("element of valuation " + std::to_string(valuation()) + " is not divisible by lambda^" +
                          std::to_string(s));
    return CycloElt(ctx_.with_precision(precision() - s), std::vector<int>(digits_.begin() + s, digits_.end()));
}

CycloElt CycloElt::operator-() const {
    ZetaPoly p = lift();
    for (auto &c : p)
        c = -c;
    return canonicalize(ctx_, p);
}

CycloElt &CycloElt::operator+=(const CycloElt &o) {
    require_same_ctx(ctx_, o.ctx_);
    ZetaPoly p = lift();
    const ZetaPoly q = o.lift();
    const std::int64_t M = ctx_.modulus();
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = (p[i] + q[i]) % M;
    digits_ = extract_digits(ctx_.tables(), std::move(p));
    return *this;
}

CycloElt &CycloElt::operator-=(const CycloElt &o) {
    require_same_ctx(ctx_, o.ctx_);
    ZetaPoly p = lift();
    const ZetaPoly q = o.lift();
    const std::int64_t M = ctx_.modulus();
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = mod(p[i] - q[i], M);
    digits_ = extract_digits(ctx_.tables(), std::move(p));
    return *this;
}

CycloElt &CycloElt::operator*=(const CycloElt &o) {
    require_same_ctx(ctx_, o.ctx_);
    digits_ = extract_digits(ctx_.tables(), poly_mul(ell(), ctx_.modulus(), lift(), o.lift()));
    return *this;
}

bool operator==(const CycloElt &a, const CycloElt &b) {
    require_same_ctx(a.ctx_, b.ctx_);
    return a.digits_ == b.digits_;
}

CycloElt canonicalize(const RingCtx &ctx, std::span<const std::int64_t> poly) {
    return from_poly(ctx, fold_reduce(ctx.ell(), ctx.modulus(), poly));
}

CycloElt canonicalize(const RingCtx &ctx, std::span<const mpz_class> poly) {
    std::vector<std::int64_t> reduced(poly.size());
    mpz_class M = static_cast<long>(ctx.modulus());
    mpz_class r;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        mpz_fdiv_r(r.get_mpz_t(), poly[i].get_mpz_t(), M.get_mpz_t());
        reduced[i] = r.get_si();
    }
    return canonicalize(ctx, reduced);
}

CycloElt ring_add(const CycloElt &a, const CycloElt &b) { return a + b; }
CycloElt ring_sub(const CycloElt &a, const CycloElt &b) { return a - b; }
CycloElt ring_neg(const CycloElt &a) { return -a; }
CycloElt ring_mul(const CycloElt &a, const CycloElt &b) { return a * b; }

CycloElt ring_pow(const CycloElt &a, std::uint64_t k) {
    CycloElt result = CycloElt::one(a.ctx());
    CycloElt base = a;
    while (k) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

CycloElt ring_inv(const CycloElt &a) {
    if (!a.is_unit())
        throw NotAUnit(a.valuation());
    const RingCtx &ctx = a.ctx();
    CycloElt x = CycloElt::from_int(ctx, invmod(a.digit(0), ctx.ell()));
    const CycloElt two = CycloElt::from_int(ctx, 2);
    for (int reached = 1; reached < ctx.precision(); reached *= 2)
        x = x * (two - a * x);
    if (!(a * x == CycloElt::one(ctx)))
        throw InternalError("Newton iteration failed to invert a unit");
    return x;
}

CycloElt galois_apply(std::int64_t j, const CycloElt &a) {
    const int ell = a.ell();
    if (mod(j, ell) == 0)
        throw ArgumentError("galois_apply: j = " + std::to_string(j) + " is divisible by ell");
    const ZetaPoly p = a.lift();
    std::vector<std::int64_t> image(static_cast<std::size_t>(ell), 0);
    for (int i = 0; i < ell - 1; ++i)
        image[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * j, ell))] += p[static_cast<std::size_t>(i)];
    return canonicalize(a.ctx(), image);
}

CycloElt conjugate(const CycloElt &a) { return galois_apply(a.ell() - 1, a); }

CycloElt norm(const CycloElt &a) {
    CycloElt r = a;
    for (int j = 2; j < a.ell(); ++j)
        r *= galois_apply(j, a);
    return r;
}

std::optional<mpz_class> rational_residue(const CycloElt &a) {
    const RingCtx &ctx = a.ctx();
    const int ell = ctx.ell();
    mpz_class c = 0;
    mpz_class ell_power = 1;
    CycloElt rest = a;
    for (int j = 0; j * (ell - 1) < ctx.precision(); ++j) {
        const int pos = j * (ell - 1);
        if (rest.valuation() < pos)
            return std::nullopt;
        const int lead = CycloElt::from_int(ctx, ell_power).digit(pos);
        const std::int64_t t = mulmod(rest.digit(pos), invmod(lead, ell), ell);
        c += ell_power * static_cast<long>(t);
        rest = a - CycloElt::from_int(ctx, c);
        ell_power *= ell;
    }
    if (!rest.is_zero())
        return std::nullopt;
    return c;
}

CycloElt ell_unit_part(const RingCtx &ctx) {
    const int ell = ctx.ell();
    return CycloElt::from_int(ctx.with_precision(ctx.precision() + ell - 1), ell).shift_down(ell - 1);
}

namespace {

// x / (ell^v * unit) where the integer is ell^v * unit; x must be divisible by lambda^{(ell-1)v}.
CycloElt divide_by_integer(const CycloElt &x, const mpz_class &k, int v, const std::vector<CycloElt> &unit_inv_pows) {
    const int ell = x.ell();
    CycloElt q = v > 0 ? x.shift_down((ell - 1) * v) : x;
    if (v > 0)
        q *= unit_inv_pows[static_cast<std::size_t>(v)].reduce(q.precision());
    mpz_class u = k;
    for (int i = 0; i < v; ++i)
        u /= ell;
    const RingCtx &qc = q.ctx();
    mpz_class r;
    mpz_class M = static_cast<long>(qc.modulus());
    mpz_fdiv_r(r.get_mpz_t(), u.get_mpz_t(), M.get_mpz_t());
    const std::int64_t u_inv = invmod(r.get_si(), qc.modulus());
    return q * CycloElt::from_int(qc, u_inv);
}

std::vector<CycloElt> unit_inverse_powers(const RingCtx &ctx, int max_power) {
    const CycloElt inv = ring_inv(ell_unit_part(ctx));
    std::vector<CycloElt> pows{CycloElt::one(ctx)};
    for (int i = 1; i <= max_power; ++i)
        pows.push_back(pows.back() * inv);
    return pows;
}

int floor_log(std::int64_t k, std::int64_t base) {
    int e = 0;
    for (std::int64_t p = base; p <= k; p *= base)
        ++e;
    return e;
}

} // namespace

CycloElt log_unit(const CycloElt &y) {
    const RingCtx &ctx = y.ctx();
    const int n = ctx.precision();
    const int ell = ctx.ell();
    const CycloElt x = y - CycloElt::one(ctx);
    if (x.valuation() < std::min(2, n))
        throw DomainError("log_unit requires y = 1 mod lambda^2; got valuation " + std::to_string(x.valuation()) +
                          " for y - 1");
    if (x.is_zero())
        return CycloElt::zero(ctx);

    // Terms with 2k - (ell-1) v_ell(k) >= n vanish; every k >= n qualifies.
    const int kmax = n;
    const int vmax = floor_log(kmax, ell);
    const int work = n + (ell - 1) * vmax;
    const RingCtx wctx = ctx.with_precision(work);
    const auto inv_pows = unit_inverse_powers(wctx, vmax);
    const CycloElt xw = x.extend(work);

    CycloElt sum = CycloElt::zero(ctx);
    CycloElt power = xw;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1)
            power *= xw;
        const int v = valuation(static_cast<std::int64_t>(k), ell);
        if (2 * k - (ell - 1) * v >= n)
            continue;
        CycloElt term = divide_by_integer(power, k, v, inv_pows).reduce(n);
        if (k % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

CycloElt exp(const CycloElt &x) {
    const RingCtx &ctx = x.ctx();
    const int n = ctx.precision();
    const int ell = ctx.ell();
    if (x.valuation() < std::min(2, n))
        throw DomainError("exp requires valuation at least 2; got " + std::to_string(x.valuation()));
    if (x.is_zero())
        return CycloElt::one(ctx);

    // ord(x^k / k!) >= k + 1, so k <= n - 1 suffices.
    const int kmax = n - 1;
    const int vmax = valuation(factorial(std::max(kmax, 1)), ell);
    const int work = n + (ell - 1) * vmax;
    const RingCtx wctx = ctx.with_precision(work);
    const auto inv_pows = unit_inverse_powers(wctx, vmax);
    const CycloElt xw = x.extend(work);

    CycloElt sum = CycloElt::one(ctx);
    CycloElt power = CycloElt::one(wctx);
    for (int k = 1; k <= kmax; ++k) {
        power *= xw;
        const mpz_class kf = factorial(k);
        const int v = valuation(kf, ell);
        if (2 * k - (ell - 1) * v >= n)
            continue;
        sum += divide_by_integer(power, kf, v, inv_pows).reduce(n);
    }
    return sum;
}

void to_json(nlohmann::json &j, const CycloElt &a) {
    j = nlohmann::json{{"ell", a.ell()},
                       {"precision", a.precision()},
                       {"digits", std::vector<int>(a.digits().begin(), a.digits().end())}};
}

CycloElt cyclo_from_json(const nlohmann::json &j) {
    try {
        if (!j.is_object())
            throw ArgumentError("expected a JSON object for a ring element");
        const int ell = j.at("ell").get<int>();
        const int precision = j.at("precision").get<int>();
        const auto &digits = j.at("digits");
        if (!digits.is_array())
            throw ArgumentError("digits must be an array");
        return CycloElt(RingCtx(ell, precision), digits.get<std::vector<int>>());
    } catch (const nlohmann::json::exception &e) {
        throw ArgumentError(std::string("malformed ring element JSON: ") + e.what());
    }
}

namespace zeta {

ZetaInt reduce(int ell, std::span<const mpz_class> poly) {
    ZetaInt acc(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
        acc[i % static_cast<std::size_t>(ell)] += poly[i];
    ZetaInt out(static_cast<std::size_t>(ell - 1));
    for (int i = 0; i < ell - 1; ++i)
        out[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)] - acc[static_cast<std::size_t>(ell - 1)];
    return out;
}

ZetaInt add(const ZetaInt &a, const ZetaInt &b) {
    ZetaInt r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

ZetaInt sub(const ZetaInt &a, const ZetaInt &b) {
    ZetaInt r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

ZetaInt scale(const ZetaInt &a, const mpz_class &c) {
    ZetaInt r = a;
    for (auto &x : r)
        x *= c;
    return r;
}

ZetaInt mul(int ell, const ZetaInt &a, const ZetaInt &b) {
    ZetaInt acc(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[(i + j) % static_cast<std::size_t>(ell)] += a[i] * b[j];
    }
    return reduce(ell, acc);
}

ZetaInt galois(int ell, std::int64_t j, const ZetaInt &a) {
    if (mod(j, ell) == 0)
        throw ArgumentError("galois: j divisible by ell");
    ZetaInt image(static_cast<std::size_t>(ell), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        image[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * j, ell))] += a[i];
    return reduce(ell, image);
}

ZetaInt power_of_zeta(int ell, std::int64_t k) {
    ZetaInt image(static_cast<std::size_t>(ell), 0);
    image[static_cast<std::size_t>(mod(k, ell))] = 1;
    return reduce(ell, image);
}

ZetaInt lambda_power(int ell, int k) {
    ZetaInt r(static_cast<std::size_t>(ell - 1), 0);
    r[0] = 1;
    ZetaInt lam(static_cast<std::size_t>(ell - 1), 0);
    lam[0] = 1;
    lam[1] = -1;
    for (int i = 0; i < k; ++i)
        r = mul(ell, r, lam);
    return r;
}

ZetaInt divide_by_lambda(int ell, ZetaInt a, int s) {
    for (int step = 0; step < s; ++step) {
        mpz_class total = 0;
        for (const auto &c : a)
            total += c;
        if (total % ell != 0)
            throw DomainError("element is not divisible by lambda");
        const mpz_class k = total / ell;
        a[0] -= k * ell;
        mpz_class run = 0;
        for (int j = 0; j < ell - 1; ++j) {
            run += a[static_cast<std::size_t>(j)];
            a[static_cast<std::size_t>(j)] = run + k * (ell - 1 - j);
        }
    }
    return a;
}

} // namespace zeta

} // namespace suptor
