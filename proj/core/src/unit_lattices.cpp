#include "suptor/unit_lattices.hpp"

#include <algorithm>

#include "suptor/arith.hpp"
#include "suptor/class_invariants.hpp"
#include "suptor/errors.hpp"

namespace suptor {

namespace {

void check_pair(int ell, int r) {
    require_odd_prime(ell, "ell");
    if (r < 2)
        throw ArgumentError("r must be at least 2");
    if (r % ell == 0)
        throw ArgumentError("ell divides r");
}

bool galois_stable(const CycloElt &a) {
    for (int j = 2; j < a.ell(); ++j)
        if (!(galois_apply(j, a) == a))
            return false;
    return true;
}

} // namespace

bool u_lr_member(const CycloElt &d, int ell, int r) {
    check_pair(ell, r);
    if (d.ell() != ell)
        throw ContextError("element lives over a different ell");
    if (!d.is_unit())
        throw NotAUnit(d.valuation());
    const CycloElt nrm = d * conjugate(d);
    if (!galois_stable(nrm))
        return false;
    const int need = std::min(d.precision(), (ell - 1) * (1 + valuation(static_cast<std::int64_t>(r - 1), ell)));
    return (nrm - CycloElt::one(d.ctx())).valuation() >= need;
}

UnitLattice u_prime_basis(int ell, int precision) {
    require_odd_prime(ell, "ell");
    if (precision < 4)
        throw ArgumentError("U' basis needs precision >= 4");
    RingCtx ctx(ell, precision);
    UnitLattice u{ctx, {}, 2 * ell};
    const CycloElt lam = CycloElt::lambda(ctx);
    const CycloElt lam_bar = conjugate(lam);
    for (int i = 2; i <= (ell + 1) / 2; ++i) {
        CycloElt x = ring_pow(lam, static_cast<std::uint64_t>(i)) - ring_pow(lam_bar, static_cast<std::uint64_t>(i));
        if (!(x + conjugate(x)).is_zero())
            throw InternalError("U' generator is not anti-fixed");
        u.log_generators.push_back(std::move(x));
    }
    return u;
}

CycloElt infinity_type_apply(int ell, int r, const CycloElt &x, InfinityType variant) {
    check_pair(ell, r);
    if (x.ell() != ell)
        throw ContextError("element lives over a different ell");
    if (x.valuation() < std::min(2, x.precision()))
        throw DomainError("infinity type acts on lambda^2 O; got valuation " + std::to_string(x.valuation()));
    const RingCtx &ctx = x.ctx();
    CycloElt out(ctx);
    switch (variant) {
    case InfinityType::T:
        for (int j = 1; j < ell; ++j)
            out += CycloElt::from_int(ctx, n_of_j(ell, r, j)) * galois_apply(j, x);
        break;
    case InfinityType::TPrime: {
        const CycloElt half = ring_inv(CycloElt::from_int(ctx, 2));
        for (int j = 1; j < ell; ++j) {
            const mpq_class c = 2 * n_prime(ell, r, j);
            out += CycloElt::from_int(ctx, c.get_num()) * half * galois_apply(j, x);
        }
        break;
    }
    case InfinityType::TDoublePrime:
        if (!(x + conjugate(x)).is_zero())
            throw DomainError("T'' acts on anti-fixed elements only");
        for (int j = 1; j <= (ell - 1) / 2; ++j) {
            const mpq_class c = 2 * n_prime(ell, r, j);
            out += CycloElt::from_int(ctx, c.get_num()) * galois_apply(j, x);
        }
        break;
    }
    return out;
}

AbelianPresentation additive_presentation(int ell, int k) {
    require_odd_prime(ell, "ell");
    const int g = ell - 1;
    AbelianPresentation p{g, IntMatrix(static_cast<std::size_t>(g))};
    const ZetaInt lk = zeta::lambda_power(ell, k);
    for (int i = 0; i < g; ++i) {
        const ZetaInt col = zeta::mul(ell, lk, zeta::power_of_zeta(ell, i));
        for (int row = 0; row < g; ++row)
            p.relations[static_cast<std::size_t>(row)].push_back(col[static_cast<std::size_t>(row)]);
    }
    return p;
}

AbelianPresentation unit_group_presentation(int ell, int n) {
    require_odd_prime(ell, "ell");
    if (n < 1)
        throw ArgumentError("precision must be positive");
    if (n == 1)
        return AbelianPresentation{1, IntMatrix{{mpz_class(ell - 1)}}};
    const int g = 2 + (n > 2 ? ell - 1 : 0);
    AbelianPresentation p{g, IntMatrix(static_cast<std::size_t>(g))};
    auto push_col = [&](const std::vector<mpz_class> &col) {
        for (int row = 0; row < g; ++row)
            p.relations[static_cast<std::size_t>(row)].push_back(col[static_cast<std::size_t>(row)]);
    };
    std::vector<mpz_class> col(static_cast<std::size_t>(g), 0);
    col[0] = ell - 1;
    push_col(col);
    col[0] = 0;
    col[1] = ell;
    push_col(col);
    if (n > 2) {
        const AbelianPresentation add = additive_presentation(ell, n - 2);
        for (int c = 0; c < ell - 1; ++c) {
            std::vector<mpz_class> rel(static_cast<std::size_t>(g), 0);
            for (int row = 0; row < ell - 1; ++row)
                rel[static_cast<std::size_t>(row + 2)] = add.relations[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)];
            push_col(rel);
        }
    }
    return p;
}

std::vector<mpz_class> zeta_coordinates(const CycloElt &a) {
    const ZetaPoly lift = a.lift();
    std::vector<mpz_class> out;
    out.reserve(lift.size());
    for (auto c : lift)
        out.emplace_back(static_cast<long>(c));
    return out;
}

UnitDecomposition decompose_unit(const CycloElt &d, int ell, int r) {
    if (!u_lr_member(d, ell, r))
        throw DomainError("element is not in U_{ell,r}");
    const RingCtx &ctx = d.ctx();
    UnitDecomposition dec{1, 0, CycloElt::one(ctx), CycloElt::one(ctx)};
    dec.sign = d.digit(0) == 1 ? 1 : -1;
    CycloElt rest = dec.sign == 1 ? d : -d;
    if (ctx.precision() >= 2) {
        // zeta^a = 1 - a lambda mod lambda^2.
        dec.zeta_power = static_cast<int>(mod(-rest.digit(1), ell));
        rest *= CycloElt::zeta(ctx, -dec.zeta_power);
    }
    if (ctx.precision() > 2) {
        const CycloElt q = rest * conjugate(rest);
        const CycloElt half = ring_inv(CycloElt::from_int(ctx, 2));
        dec.rational_part = exp(half * log_unit(q));
        dec.anti_part = rest * ring_inv(dec.rational_part);
    }
    return dec;
}

CycloElt recombine(const UnitDecomposition &dec) {
    const RingCtx &ctx = dec.rational_part.ctx();
    CycloElt out = CycloElt::zeta(ctx, dec.zeta_power) * dec.rational_part * dec.anti_part;
    return dec.sign == 1 ? out : -out;
}

namespace {

IntMatrix columns_of(const std::vector<CycloElt> &elts) {
    const std::size_t g = static_cast<std::size_t>(elts.at(0).ell() - 1);
    IntMatrix m(g);
    for (const auto &e : elts) {
        const auto col = zeta_coordinates(e);
        for (std::size_t row = 0; row < g; ++row)
            m[row].push_back(col[row]);
    }
    return m;
}

int index_exponent_at(int ell, int r, int m) {
    const UnitLattice u = u_prime_basis(ell, m);
    std::vector<CycloElt> images;
    for (const auto &b : u.log_generators)
        images.push_back(infinity_type_apply(ell, r, b, InfinityType::TDoublePrime));
    const AbelianPresentation pres = additive_presentation(ell, m);
    const mpz_class whole = abelian_order(pres, columns_of(u.log_generators));
    const mpz_class image = abelian_order(pres, columns_of(images));
    if (whole % image != 0)
        throw InternalError("image of T'' is not a subgroup of U'");
    return valuation(mpz_class(whole / image), ell);
}

} // namespace

LatticeIndex lattice_index_check(int ell, int r, int start_precision, int max_steps) {
    check_pair(ell, r);
    int m = std::max(start_precision, 2 * (ell - 1) + 2);
    int previous = index_exponent_at(ell, r, m);
    for (int step = 0; step < max_steps; ++step) {
        const int next_m = m + ell - 1;
        int current;
        try {
            current = index_exponent_at(ell, r, next_m);
        } catch (const ArgumentError &) {
            break;
        }
        if (current == previous)
            return {current, m};
        previous = current;
        m = next_m;
    }
    throw DomainError("lattice index did not stabilize before the precision limit");
}

ReducedUnitGroup reduced_unit_group(int ell, int r) {
    check_pair(ell, r);
    const int k = ell - 1;
    const UnitLattice u = u_prime_basis(ell, std::max(k, 4));
    std::vector<CycloElt> gens;
    for (const auto &b : u.log_generators)
        gens.push_back(b.reduce(k));
    // The factor 1 + ell (r-1) Z_ell reduces to 1 modulo lambda^{ell-1}.
    gens.push_back(CycloElt::from_int(RingCtx(ell, k), static_cast<std::int64_t>(ell) * (r - 1)));
    const AbelianPresentation pres = additive_presentation(ell, k);
    ReducedUnitGroup out;
    out.anti_part_order = abelian_order(pres, columns_of(gens));
    out.order = out.anti_part_order * (2 * ell);
    return out;
}

} // namespace suptor
