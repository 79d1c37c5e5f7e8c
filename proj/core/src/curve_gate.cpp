#include "suptor/curve_gate.hpp"

#include <algorithm>
#include <random>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"
#include "suptor/hermitian.hpp"
#include "suptor/poly_modp.hpp"

namespace suptor {

namespace {

using ZPoly = std::vector<mpz_class>;

ZPoly to_z(const fp::Poly &a) {
    ZPoly out;
    for (auto c : a)
        out.emplace_back(static_cast<long>(c));
    return out;
}

fp::Poly to_fp(const ZPoly &a, std::int64_t p) { return fp::reduce(IntPoly(a), p); }

ZPoly zmul(const ZPoly &a, const ZPoly &b, const mpz_class &m) {
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    for (auto &x : c)
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return c;
}

// Lifts f = g h (mod p) to f = g h (mod p^a); g monic, gcd(g, h) = 1 mod p.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly &f, const fp::Poly &g0, const fp::Poly &h0, std::int64_t p, int a) {
    auto [gg, s, t] = fp::ext_gcd(g0, h0, p);
    if (gg != fp::Poly{1})
        throw InternalError("Hensel lifting needs coprime factors");
    ZPoly g = to_z(g0), h = to_z(h0);
    mpz_class pk = static_cast<long>(p);
    for (int k = 1; k < a; ++k) {
        const mpz_class next = pk * p;
        ZPoly e(std::max(f.size(), g.size() + h.size() - 1), 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            e[i] = f[i];
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < h.size(); ++j)
                e[i + j] -= g[i] * h[j];
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] % pk != 0)
                throw InternalError("Hensel invariant violated");
            e[i] /= pk;
        }
        const fp::Poly ep = to_fp(e, p);
        auto [q, r] = fp::divmod(fp::mul(t, ep, p), g0, p);
        const fp::Poly dh = fp::add(fp::mul(s, ep, p), fp::mul(q, h0, p), p);
        const ZPoly dg = to_z(r), dhz = to_z(dh);
        for (std::size_t i = 0; i < dg.size(); ++i)
            g[i] += pk * dg[i];
        if (h.size() < dhz.size())
            h.resize(dhz.size(), 0);
        for (std::size_t i = 0; i < dhz.size(); ++i)
            h[i] += pk * dhz[i];
        for (auto &x : g)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), next.get_mpz_t());
        for (auto &x : h)
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), next.get_mpz_t());
        pk = next;
    }
    return {g, h};
}

IntPoly symmetric(const ZPoly &a, const mpz_class &m) {
    ZPoly out = a;
    const mpz_class half = m / 2;
    for (auto &x : out) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half)
            x -= m;
    }
    return IntPoly(std::move(out));
}

bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool has_odd_prime_good_reduction(const mpz_class &disc, std::int64_t p) {
    return p != 2 && !mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p));
}

} // namespace

std::optional<IntPoly> find_factor(const IntPoly &f) {
    if (!f.is_monic())
        throw ArgumentError("factorization needs a monic polynomial");
    const int r = f.degree();
    if (r <= 1)
        return std::nullopt;
    const mpz_class disc = discriminant(f);
    if (disc == 0)
        throw InseparableError("polynomial is not squarefree");

    // Pick the good prime with the fewest modular factors among the first few.
    std::int64_t best = 0;
    std::size_t best_count = 0;
    int tried = 0;
    for (std::int64_t p : primes_up_to(100000)) {
        if (!has_odd_prime_good_reduction(disc, p))
            continue;
        const std::size_t count = fp::cycle_type(fp::reduce(f, p), p).size();
        if (best == 0 || count < best_count) {
            best = p;
            best_count = count;
        }
        if (count == 1 || ++tried >= 8)
            break;
    }
    if (best == 0)
        throw InternalError("no good prime for factorization");
    if (best_count == 1)
        return std::nullopt;

    const std::int64_t p = best;
    std::mt19937_64 rng(0x5eed);
    const auto modular = fp::factor_squarefree(fp::reduce(f, p), p, rng);

    const mpz_class bound = mpz_class(2) * (mpz_class(1) << r) * f.norm2_ceil() + 1;
    int a = 1;
    mpz_class pa = static_cast<long>(p);
    while (pa <= bound) {
        pa *= p;
        ++a;
    }

    std::vector<ZPoly> lifted;
    ZPoly cur = f.coeffs();
    fp::Poly rest_mod = fp::reduce(f, p);
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        rest_mod = fp::divmod(rest_mod, modular[i], p).first;
        auto [g, h] = hensel_lift(cur, modular[i], rest_mod, p, a);
        lifted.push_back(std::move(g));
        cur = std::move(h);
    }
    for (auto &x : cur)
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pa.get_mpz_t());
    lifted.push_back(std::move(cur));

    const std::size_t k = lifted.size();
    for (std::size_t s = 1; 2 * s <= k; ++s) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i)
            idx[i] = i;
        do {
            ZPoly prod{1};
            for (std::size_t i : idx)
                prod = zmul(prod, lifted[i], pa);
            const IntPoly cand = symmetric(prod, pa);
            if (cand.is_monic() && cand.degree() >= 1) {
                auto [q, rem] = divmod_monic(f, cand);
                if (rem.is_zero())
                    return cand;
            }
        } while (next_combination(idx, k));
    }
    return std::nullopt;
}

const char *to_string(GaloisVerdict v) {
    switch (v) {
    case GaloisVerdict::SrCertified:
        return "S_r certified";
    case GaloisVerdict::Inconclusive:
        return "inconclusive";
    case GaloisVerdict::Reducible:
        return "reducible";
    }
    return "unknown";
}

GaloisCertificate galois_certificate(const IntPoly &f, int sample_budget) {
    if (!f.is_monic() || f.degree() < 2)
        throw ArgumentError("Galois certificate needs a monic polynomial of degree >= 2");
    const int r = f.degree();
    const mpz_class disc = discriminant(f);
    if (disc == 0)
        throw InseparableError("polynomial is not squarefree");

    GaloisCertificate cert;
    if (auto g = find_factor(f)) {
        cert.verdict = GaloisVerdict::Reducible;
        cert.factor = std::move(*g);
        return cert;
    }

    for (std::int64_t p : primes_up_to(1'000'000)) {
        if (cert.primes_sampled >= sample_budget)
            break;
        if (!has_odd_prime_good_reduction(disc, p))
            continue;
        ++cert.primes_sampled;
        const auto type = fp::cycle_type(fp::reduce(f, p), p);
        if (!cert.irreducible && type.size() == 1)
            cert.irreducible = CycleWitness{p, type};
        if (!cert.transposition && std::count(type.begin(), type.end(), 2) == 1 &&
            std::all_of(type.begin(), type.end(), [](int c) { return c == 2 || c % 2 == 1; }))
            cert.transposition = CycleWitness{p, type};
        if (!cert.prime_cycle && std::any_of(type.begin(), type.end(), [r](int c) { return 2 * c > r && is_prime(c); }))
            cert.prime_cycle = CycleWitness{p, type};
        if (cert.transposition && cert.prime_cycle && cert.irreducible)
            break;
    }
    cert.verdict = cert.transposition && cert.prime_cycle ? GaloisVerdict::SrCertified : GaloisVerdict::Inconclusive;
    return cert;
}

FactoredDegree split_ell_part(const mpz_class &n, int ell) {
    if (n == 0)
        throw ArgumentError("cannot split the ell-part of zero");
    FactoredDegree out{n, 0};
    const unsigned long ul = static_cast<unsigned long>(ell);
    while (mpz_divisible_ui_p(out.a.get_mpz_t(), ul)) {
        out.a /= ul;
        ++out.b;
    }
    return out;
}

CurveReport check_curve(int ell, const IntPoly &f, const CurveOptions &opts) {
    require_odd_prime(ell, "ell");
    if (!f.is_monic())
        throw ArgumentError("f must be monic");
    const int r = f.degree();
    if (r < 4)
        throw ArgumentError("f must have degree >= 4");
    if (r % ell == 0)
        throw ArgumentError("ell must not divide deg f");

    CurveReport rep;
    rep.ell = ell;
    rep.poly = f;
    rep.epsilon = epsilon(ell, r);
    rep.disc = discriminant(f);
    rep.simple_prime = find_simple_prime(rep.disc, ell, opts.factor_budget);
    rep.galois = galois_certificate(f, opts.galois_budget);
    rep.hypotheses_verified =
        rep.simple_prime.status == SimplePrimeStatus::Found && rep.galois.verdict == GaloisVerdict::SrCertified;
    rep.overridden = opts.override_hypotheses && !rep.hypotheses_verified;
    return rep;
}

CurveReport division_degree_report(int ell, const IntPoly &f, const CurveOptions &opts) {
    CurveReport rep = check_curve(ell, f, opts);
    if (!rep.hypotheses_verified && !opts.override_hypotheses) {
        std::string why;
        if (rep.simple_prime.status != SimplePrimeStatus::Found)
            why += std::string("no simple prime in disc(f) (") + to_string(rep.simple_prime.status) + ")";
        if (rep.galois.verdict != GaloisVerdict::SrCertified) {
            if (!why.empty())
                why += "; ";
            why += std::string("Galois group not certified (") + to_string(rep.galois.verdict) + ")";
        }
        throw HypothesisError(why);
    }
    const int r = f.degree();
    DegreeReport d;
    d.alt_order = factorial(r) / 2;
    d.su_exponent = filtration_order_exponent(ell, r - 1, ell - 1, 1);
    d.u_red = reduced_unit_group(ell, r);
    d.kappa = kappa_and_t(ell, r);
    d.assume_d_equals_u = d.kappa.kappa_bound <= 0;

    const FactoredDegree alt = split_ell_part(d.alt_order, ell);
    const FactoredDegree u = split_ell_part(d.u_red.order, ell);
    d.degree = FactoredDegree{alt.a * u.a, alt.b + d.su_exponent + u.b};

    if (ell == 11 && f == parse_poly("x^8 + x + 1")) {
        d.reference = FactoredDegree{factorial(8), 260};
        d.reference_u = "22*11^40";
    }
    rep.degree = std::move(d);
    return rep;
}

namespace {

nlohmann::json factored_json(const FactoredDegree &f, int ell) {
    return {{"a", f.a.get_str()}, {"ell", ell}, {"b", f.b}};
}

nlohmann::json witness_json(const std::optional<CycleWitness> &w) {
    if (!w)
        return nullptr;
    return {{"prime", w->prime}, {"cycle_type", w->cycle_type}};
}

} // namespace

void to_json(nlohmann::json &j, const GaloisCertificate &g) {
    j = {{"verdict", to_string(g.verdict)},
         {"primes_sampled", g.primes_sampled},
         {"factor", g.factor ? nlohmann::json(g.factor->to_string()) : nlohmann::json(nullptr)},
         {"irreducible_witness", witness_json(g.irreducible)},
         {"transposition_witness", witness_json(g.transposition)},
         {"prime_cycle_witness", witness_json(g.prime_cycle)}};
}

void to_json(nlohmann::json &j, const CurveReport &rep) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : rep.poly.coeffs())
        coeffs.push_back(c.get_str());
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &[p, e] : rep.simple_prime.factorization.primes)
        factors.push_back({p.get_str(), e});
    const auto &fz = rep.simple_prime.factorization;

    j = {{"ell", rep.ell},
         {"poly", {{"text", rep.poly.to_string()}, {"coefficients", coeffs}, {"degree", rep.poly.degree()}}},
         {"epsilon", rep.epsilon},
         {"disc", rep.disc.get_str()},
         {"disc_factorization", factors},
         {"composite_remainder", fz.complete() ? nlohmann::json(nullptr) : nlohmann::json(fz.remainder.get_str())},
         {"simple_prime", rep.simple_prime.prime ? nlohmann::json(rep.simple_prime.prime->get_str())
                                                 : nlohmann::json(nullptr)},
         {"simple_prime_status", to_string(rep.simple_prime.status)},
         {"galois", rep.galois},
         {"hypotheses_verified", rep.hypotheses_verified},
         {"hypotheses_overridden", rep.overridden}};
    if (!rep.degree) {
        j["degree"] = nullptr;
        return;
    }
    const DegreeReport &d = *rep.degree;
    nlohmann::json deg = {
        {"alt_group_order", d.alt_order.get_str()},
        {"alt_group_order_certified", rep.galois.verdict == GaloisVerdict::SrCertified},
        {"su_exponent", d.su_exponent},
        {"u_red_order", d.u_red.order.get_str()},
        {"u_red_factored", factored_json(split_ell_part(d.u_red.order, rep.ell), rep.ell)},
        {"kappa_bound", d.kappa.kappa_bound},
        {"t", d.kappa.t},
        {"assume_D_equals_U", d.assume_d_equals_u},
        {"degree", factored_json(d.degree, rep.ell)},
        {"reference", d.reference ? factored_json(*d.reference, rep.ell) : nlohmann::json(nullptr)},
    };
    if (d.reference) {
        const FactoredDegree u = split_ell_part(d.u_red.order, rep.ell);
        deg["discrepancy"] = {
            {"matches", d.reference->a == d.degree.a && d.reference->b == d.degree.b},
            {"a_matches", d.reference->a == d.degree.a},
            {"computed_b", d.degree.b},
            {"reference_b", d.reference->b},
            {"b_difference", d.reference->b - d.degree.b},
            {"reference_u_red", *d.reference_u},
            {"computed_u_red", u.a.get_str() + "*" + std::to_string(rep.ell) + "^" + std::to_string(u.b)},
            {"note", "reference u_red is not realisable inside (O/lambda^(ell-1))^x; computed value is the "
                     "Smith normal form order of the reduction"}};
    } else {
        deg["discrepancy"] = nullptr;
    }
    j["degree"] = deg;
}

} // namespace suptor
