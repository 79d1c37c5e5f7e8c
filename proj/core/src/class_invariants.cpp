#include "suptor/class_invariants.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"
#include "suptor/int_linalg.hpp"

namespace suptor {

namespace {

void check_pair(int ell, int r) {
    require_odd_prime(ell, "ell");
    if (r < 1)
        throw ArgumentError("r must be positive");
    if (r % ell == 0)
        throw ArgumentError("ell = " + std::to_string(ell) + " divides r = " + std::to_string(r));
}

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ZPoly poly_mul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

// Remainder modulo a monic polynomial.
ZPoly poly_rem(ZPoly a, const ZPoly &m) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const mpz_class lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] -= lead * m[i];
        trim(a);
    }
    return a;
}

// Exact quotient by a monic polynomial.
ZPoly poly_div_exact(ZPoly a, const ZPoly &m) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    ZPoly q(a.size() > dm ? a.size() - dm : 0, 0);
    while (a.size() > dm) {
        const mpz_class lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        q[shift] = lead;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] -= lead * m[i];
        trim(a);
    }
    if (!a.empty())
        throw InternalError("inexact polynomial division");
    return q;
}

ZPoly cyclotomic(int m) {
    ZPoly p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0)
            p = poly_div_exact(p, cyclotomic(d));
    return p;
}

} // namespace

std::int64_t n_of_j(int ell, int r, int j) {
    check_pair(ell, r);
    if (j < 1 || j > ell - 1)
        throw ArgumentError("j must lie in [1, ell - 1]");
    return static_cast<std::int64_t>(r) * (ell - j) / ell;
}

mpq_class n_prime(int ell, int r, int j) {
    mpq_class v(static_cast<long>(n_of_j(ell, r, j)));
    v -= mpq_class(r - 1, 2);
    v.canonicalize();
    return v;
}

CLr c_lr(int ell, int r) {
    check_pair(ell, r);
    if (r < 2)
        throw ArgumentError("c_lr needs r >= 2");
    CLr out;
    out.r_ell = multiplicative_order(r, ell);
    const auto R = static_cast<unsigned long>(out.r_ell);
    mpz_class base;
    unsigned long exponent;
    if (R % 2 == 1) {
        mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(r), R);
        base -= 1;
        exponent = static_cast<unsigned long>(ell - 1) / (2 * R);
    } else {
        mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(r), R / 2);
        base += 1;
        exponent = static_cast<unsigned long>(ell - 1) / R;
    }
    mpz_pow_ui(out.c.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

mpz_class h_minus(int ell, int bound) {
    require_odd_prime(ell, "ell");
    if (ell > bound)
        throw ArgumentError("h_minus is limited to ell <= " + std::to_string(bound));
    const int m = ell - 1;
    const std::int64_t g = primitive_root(ell);
    const ZPoly phi = cyclotomic(m);

    // For the odd character chi_a(g^i) = w^{a i}: ell * B_{1,chi_a} = sum_i (g^i mod ell) w^{a i}.
    ZPoly product{1};
    for (int a = 1; a < m; a += 2) {
        ZPoly s(static_cast<std::size_t>(m), 0);
        std::int64_t gi = 1;
        for (int i = 0; i < m; ++i) {
            s[static_cast<std::size_t>((static_cast<std::int64_t>(a) * i) % m)] += static_cast<long>(gi);
            gi = gi * g % ell;
        }
        product = poly_rem(poly_mul(product, poly_rem(s, phi)), phi);
    }
    trim(product);
    if (product.size() > 1)
        throw InternalError("Bernoulli product is not rational");
    const mpz_class p = product.empty() ? mpz_class(0) : product[0];

    // h^- = 2 ell prod(-B/2) = (-1)^{(ell-1)/2} P / (2 ell)^{(ell-3)/2}.
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(2 * ell), static_cast<unsigned long>((ell - 3) / 2));
    if (p % denom != 0)
        throw InternalError("Bernoulli product is not integral");
    mpz_class h = p / denom;
    if (((ell - 1) / 2) % 2 == 1)
        h = -h;
    if (h <= 0)
        throw InternalError("relative class number is not positive");
    return h;
}

DemjanenkoReport demjanenko_det(int ell, int r, std::optional<std::vector<int>> reps) {
    check_pair(ell, r);
    if (r < 2)
        throw ArgumentError("Demjanenko matrix needs r >= 2");
    const int half = (ell - 1) / 2;
    std::vector<int> c;
    if (reps) {
        c = *reps;
        if (static_cast<int>(c.size()) != half)
            throw ArgumentError("need exactly (ell - 1)/2 representatives");
        std::vector<bool> seen(static_cast<std::size_t>(ell), false);
        for (int &x : c) {
            x = static_cast<int>(mod(x, ell));
            if (x == 0 || seen[static_cast<std::size_t>(x)] || seen[static_cast<std::size_t>(ell - x)])
                throw ArgumentError("representatives must cover (Z/ell)^x / {+-1} exactly once");
            seen[static_cast<std::size_t>(x)] = true;
        }
    } else {
        for (int i = 1; i <= half; ++i)
            c.push_back(i);
    }

    DemjanenkoReport rep;
    rep.ell = ell;
    rep.r = r;
    rep.reps = c;
    IntMatrix twice(static_cast<std::size_t>(half), std::vector<mpz_class>(static_cast<std::size_t>(half)));
    rep.matrix.assign(static_cast<std::size_t>(half), std::vector<mpq_class>(static_cast<std::size_t>(half)));
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
            const std::int64_t arg = mulmod(c[static_cast<std::size_t>(i)], invmod(c[static_cast<std::size_t>(j)], ell), ell);
            const mpq_class v = n_prime(ell, r, static_cast<int>(arg));
            rep.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            const mpq_class v2 = 2 * v;
            twice[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v2.get_num();
        }
    rep.det2 = bareiss_det(twice);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(half));
    rep.det = mpq_class(rep.det2, pow2);
    rep.det.canonicalize();

    const CLr cl = c_lr(ell, r);
    rep.r_ell = cl.r_ell;
    rep.c_lr = cl.c;
    rep.h_minus = h_minus(ell);
    rep.expected_magnitude = mpq_class(rep.h_minus * rep.c_lr, 2 * ell);
    rep.expected_magnitude.canonicalize();
    rep.identity_holds = abs(rep.det) == rep.expected_magnitude;
    rep.sign = sgn(rep.det);
    rep.kappa_bound = valuation(rep.h_minus * rep.c_lr, ell) - 1;
    rep.t = rep.det2 == 0 ? -1 : valuation(rep.det2, ell);
    return rep;
}

KappaT kappa_and_t(int ell, int r) {
    const DemjanenkoReport rep = demjanenko_det(ell, r);
    return {rep.kappa_bound, rep.t};
}

void to_json(nlohmann::json &j, const DemjanenkoReport &rep) {
    nlohmann::json matrix = nlohmann::json::array();
    for (const auto &row : rep.matrix) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto &v : row)
            jr.push_back(to_fraction_string(v));
        matrix.push_back(jr);
    }
    j = nlohmann::json{{"ell", rep.ell},
                       {"r", rep.r},
                       {"reps", rep.reps},
                       {"matrix", matrix},
                       {"det", to_fraction_string(rep.det)},
                       {"det_twice_matrix", rep.det2.get_str()},
                       {"sign", rep.sign},
                       {"r_ell", rep.r_ell},
                       {"c_lr", rep.c_lr.get_str()},
                       {"h_minus", rep.h_minus.get_str()},
                       {"expected_magnitude", to_fraction_string(rep.expected_magnitude)},
                       {"identity_holds", rep.identity_holds},
                       {"kappa_bound", rep.kappa_bound},
                       {"t", rep.t}};
}

} // namespace suptor
