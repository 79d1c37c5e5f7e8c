#include <doctest.h>

#include <random>

#include "suptor/arith.hpp"
#include "suptor/class_invariants.hpp"
#include "suptor/errors.hpp"
#include "suptor/int_linalg.hpp"
#include "suptor/unit_lattices.hpp"

using namespace suptor;

TEST_CASE("Smith invariants against determinants") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix m(n, std::vector<mpz_class>(n));
        for (auto &row : m)
            for (auto &x : row)
                x = static_cast<long>(rng() % 21) - 10;
        const mpz_class det = bareiss_det(m);
        const auto inv = smith_invariants(m);
        if (det == 0) {
            CHECK(inv.size() < n);
            continue;
        }
        REQUIRE(inv.size() == n);
        mpz_class prod = 1;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            prod *= inv[i];
            if (i > 0)
                CHECK(inv[i] % inv[i - 1] == 0);
        }
        CHECK(prod == abs(det));
    }
}

TEST_CASE("presented abelian groups") {
    const AbelianPresentation z6{1, {{6}}};
    CHECK(abelian_order(z6, {{1}}) == 6);
    const AbelianPresentation z8{1, {{8}}};
    CHECK(abelian_order(z8, {{2}}) == 4);
    CHECK(group_order(AbelianPresentation{2, {{2, 0}, {0, 3}}}) == 6);
    CHECK_THROWS_AS(group_order(AbelianPresentation{2, {{2}, {0}}}), DomainError);
    for (int ell : {3, 5, 7})
        for (int k = 1; k <= 6; ++k) {
            mpz_class expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(k));
            CHECK(group_order(additive_presentation(ell, k)) == expected);
            if (k >= 2)
                CHECK(group_order(unit_group_presentation(ell, k)) == (ell - 1) * expected / ell);
        }
}

TEST_CASE("units of O/lambda^3 at ell = 3 by enumeration") {
    const RingCtx ctx(3, 3);
    int units = 0;
    for (int a = 0; a < 27; ++a) {
        const CycloElt x(ctx, {a % 3, (a / 3) % 3, a / 9});
        if (!x.is_unit())
            continue;
        ++units;
        CHECK(x * ring_inv(x) == CycloElt::one(ctx));
    }
    CHECK(units == 18);
    CHECK(group_order(unit_group_presentation(3, 3)) == 18);
}

TEST_CASE("membership in U_{ell,r}") {
    const RingCtx ctx(3, 6);
    CHECK(u_lr_member(CycloElt::one(ctx), 3, 4));
    CHECK(u_lr_member(-CycloElt::zeta(ctx), 3, 4));
    CHECK_FALSE(u_lr_member(CycloElt::one(ctx) + CycloElt::lambda(ctx), 3, 4));
    CHECK_THROWS_AS(u_lr_member(CycloElt::lambda(ctx), 3, 4), NotAUnit);
}

TEST_CASE("U' generators") {
    for (int ell : {3, 5, 7, 11, 13}) {
        const UnitLattice u = u_prime_basis(ell, 3 * ell);
        CHECK(static_cast<int>(u.log_generators.size()) == (ell - 1) / 2);
        CHECK(u.torsion_order == 2 * ell);
        for (const auto &x : u.log_generators)
            CHECK((x + conjugate(x)).is_zero());
        for (const auto &x : u.log_generators) {
            // exp of a log generator lies in U_{ell,r} for every admissible r.
            for (int r = 2; r <= 6; ++r)
                if (r % ell != 0)
                    CHECK(u_lr_member(exp(x), ell, r));
        }
    }
    const UnitLattice u3 = u_prime_basis(3, 6);
    const CycloElt l = CycloElt::lambda(u3.ctx);
    CHECK(u3.log_generators.front() == l * l - conjugate(l) * conjugate(l));
}

TEST_CASE("infinity type") {
    CHECK(n_of_j(11, 8, 1) == 7);
    for (int ell : {3, 5, 7, 11})
        for (int r : {2, 4, 5}) {
            if (r % ell == 0)
                continue;
            const RingCtx ctx(ell, 4 * ell);
            const CycloElt L = CycloElt::from_int(ctx, ell);
            std::vector<CycloElt> basis;
            for (int i = 1; 2 * i < ell; ++i)
                basis.push_back(L * (CycloElt::zeta(ctx, i) - CycloElt::zeta(ctx, -i)));
            for (int k = 1; 2 * k < ell; ++k) {
                const CycloElt &x = basis[static_cast<std::size_t>(k - 1)];
                const CycloElt image = infinity_type_apply(ell, r, x, InfinityType::TDoublePrime);
                CHECK((image + conjugate(image)).is_zero());
                CycloElt expected = CycloElt::zero(ctx);
                const std::int64_t kinv = invmod(k, ell);
                for (int i = 1; 2 * i < ell; ++i) {
                    const mpq_class coeff = 2 * n_prime(ell, r, static_cast<int>(mod(i * kinv, ell)));
                    REQUIRE(coeff.get_den() == 1);
                    expected += CycloElt::from_int(ctx, coeff.get_num()) * basis[static_cast<std::size_t>(i - 1)];
                }
                CHECK(image == expected);
                CHECK(infinity_type_apply(ell, r, x, InfinityType::TPrime) == image);
            }
        }
}

TEST_CASE("unit decomposition round trip") {
    std::mt19937_64 rng(12);
    for (int ell : {3, 5, 7}) {
        const int n = 3 * ell;
        const RingCtx ctx(ell, n);
        const UnitLattice u = u_prime_basis(ell, n);
        for (int k = 0; k < 10; ++k) {
            CycloElt log = CycloElt::zero(ctx);
            for (const auto &g : u.log_generators)
                log += CycloElt::from_int(ctx, static_cast<std::int64_t>(rng() % 7)) * g;
            const std::int64_t q = 1 + static_cast<std::int64_t>(ell * ell) * static_cast<std::int64_t>(rng() % 50);
            const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(ell));
            const CycloElt d = CycloElt::from_int(ctx, rng() % 2 ? q : -q) * CycloElt::zeta(ctx, a) * exp(log);
            const UnitDecomposition dec = decompose_unit(d, ell, 4);
            CHECK(recombine(dec) == d);
            CHECK(dec.zeta_power == a);
            CHECK(dec.anti_part * conjugate(dec.anti_part) == CycloElt::one(ctx));
            CHECK(rational_residue(dec.rational_part).has_value());
        }
    }
}

TEST_CASE("lattice index against the Demjanenko determinant") {
    CHECK(lattice_index_check(11, 8).t == 0);
    CHECK(lattice_index_check(3, 2).t == 0);
    for (int ell : {3, 5, 7})
        for (int r = 2; r <= 12; ++r) {
            if (r % ell == 0)
                continue;
            CHECK(lattice_index_check(ell, r).t == valuation(demjanenko_det(ell, r).det2, ell));
        }
}

TEST_CASE("reduced unit group") {
    for (int ell : {3, 5, 7, 11})
        for (int r : {2, 4, 8}) {
            if (r % ell == 0)
                continue;
            const ReducedUnitGroup g = reduced_unit_group(ell, r);
            mpz_class full;
            mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(ell), static_cast<unsigned long>(ell - 2));
            full *= ell - 1;
            CHECK(full % g.order == 0);
            CHECK(g.order % (2 * ell) == 0);
        }
    CHECK(reduced_unit_group(11, 8).order == 2 * 161051);
}
