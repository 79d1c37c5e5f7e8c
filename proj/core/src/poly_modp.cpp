#include "suptor/poly_modp.hpp"

#include <algorithm>
#include <tuple>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor::fp {

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const Poly &a) { return static_cast<int>(a.size()) - 1; }

Poly reduce(const IntPoly &f, std::int64_t p) {
    Poly out;
    const mpz_class pp = static_cast<long>(p);
    for (const auto &c : f.coeffs()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
        out.push_back(r.get_si());
    }
    trim(out);
    return out;
}

Poly add(const Poly &a, const Poly &b, std::int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
    trim(c);
    return c;
}

Poly sub(const Poly &a, const Poly &b, std::int64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
    trim(c);
    return c;
}

Poly mul(const Poly &a, const Poly &b, std::int64_t p) {
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

Poly scale(const Poly &a, std::int64_t c, std::int64_t p) {
    Poly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mulmod(a[i], c, p);
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b, std::int64_t p) {
    if (b.empty())
        throw ArgumentError("polynomial division by zero");
    Poly r = a;
    trim(r);
    const int db = deg(b);
    if (deg(r) < db)
        return {{}, r};
    const std::int64_t inv = invmod(b.back(), p);
    Poly q(static_cast<std::size_t>(deg(r) - db + 1), 0);
    for (int i = deg(r); i >= db; --i) {
        const std::int64_t c = mulmod(r[static_cast<std::size_t>(i)], inv, p);
        if (c == 0)
            continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto &t = r[static_cast<std::size_t>(i - db + j)];
            t = mod(t - c * b[static_cast<std::size_t>(j)], p);
        }
    }
    trim(q);
    trim(r);
    return {q, r};
}

Poly rem(const Poly &a, const Poly &b, std::int64_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly &a, std::int64_t p) {
    if (a.empty())
        return a;
    return scale(a, invmod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly &a, const Poly &b, std::int64_t p) {
    Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty())
        return {r0, s0, t0};
    const std::int64_t inv = invmod(r0.back(), p);
    return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Poly derivative(const Poly &a, std::int64_t p) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(mulmod(a[i], static_cast<std::int64_t>(i), p));
    trim(d);
    return d;
}

Poly powmod(Poly base, const mpz_class &e, const Poly &f, std::int64_t p) {
    Poly result{1};
    base = rem(base, f, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, base, p), f, p);
    }
    return rem(result, f, p);
}

std::vector<std::pair<int, Poly>> ddf(const Poly &f_in, std::int64_t p) {
    std::vector<std::pair<int, Poly>> out;
    Poly f = monic(f_in, p);
    const Poly x{0, 1};
    Poly h = rem(x, f, p);
    const mpz_class pp = static_cast<long>(p);
    for (int d = 1; 2 * d <= deg(f); ++d) {
        h = powmod(h, pp, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(d, g);
            f = divmod(f, g, p).first;
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0)
        out.emplace_back(deg(f), f);
    return out;
}

std::vector<Poly> edf(const Poly &f, int d, std::int64_t p, std::mt19937_64 &rng) {
    if (deg(f) == d)
        return {monic(f, p)};
    if (p == 2)
        throw ArgumentError("equal-degree splitting needs an odd prime");
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    for (;;) {
        Poly a(static_cast<std::size_t>(deg(f)));
        for (auto &c : a)
            c = coef(rng);
        trim(a);
        if (deg(a) < 1)
            continue;
        Poly b = sub(powmod(a, e, f, p), Poly{1}, p);
        Poly g = gcd(b, f, p);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            auto left = edf(g, d, p, rng);
            auto right = edf(divmod(f, g, p).first, d, p, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Poly> factor_squarefree(const Poly &f, std::int64_t p, std::mt19937_64 &rng) {
    std::vector<Poly> out;
    for (const auto &[d, g] : ddf(f, p)) {
        auto parts = edf(g, d, p, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), [](const Poly &a, const Poly &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

std::vector<int> cycle_type(const Poly &f, std::int64_t p) {
    std::vector<int> out;
    for (const auto &[d, g] : ddf(f, p))
        for (int i = 0; i < deg(g) / d; ++i)
            out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace suptor::fp
