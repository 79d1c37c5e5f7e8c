#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"
#include "suptor/hermitian.hpp"
#include "suptor/mat_local.hpp"

using namespace suptor;

namespace {

bool euler_square(std::int64_t a, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x)
        if ((x * x - a) % p == 0)
            return true;
    return false;
}

} // namespace

TEST_CASE("epsilon is the Legendre symbol of r") {
    CHECK(epsilon(11, 8) == -1);
    CHECK(epsilon(3, 4) == 1);
    CHECK_THROWS_AS(epsilon(11, 22), ArgumentError);
    CHECK_THROWS_AS(epsilon(9, 2), ArgumentError);
    for (int ell : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        for (int r = 2; r <= 20; ++r)
            if (r % ell != 0)
                CHECK(epsilon(ell, r) == (euler_square(r, ell) ? 1 : -1));
}

TEST_CASE("Weil Gram determinant") {
    const WeilGram w = weil_gram_and_epsilon(5, 4, 1);
    CHECK(w.det == mod(-16, 5));
    CHECK(w.det_class == 1);
    CHECK(w.r_class == 1);
    // det c(E - rI) = (-1)^{r-1} c^{r-1} r^{r-2}: its class is that of r only for odd r.
    for (int ell : {3, 5, 7, 11, 13})
        for (int r = 2; r <= 12; ++r) {
            if (r % ell == 0)
                continue;
            for (std::int64_t c = 1; c < ell; ++c) {
                const WeilGram g = weil_gram_and_epsilon(ell, r, c);
                const std::int64_t expected = mod((r % 2 ? 1 : -1) * mulmod(powmod(c, static_cast<std::uint64_t>(r - 1), ell),
                                                                               powmod(r, static_cast<std::uint64_t>(r - 2), ell), ell),
                                                  ell);
                CHECK(g.det == expected);
                if (r % 2 == 1)
                    CHECK(g.det_class == g.r_class);
                else
                    CHECK(g.det_class == legendre(mod(-c, ell), ell));
            }
        }
}

TEST_CASE("determinants") {
    std::mt19937_64 rng(2);
    const RingCtx ctx(5, 6);
    CHECK(det_local(MatLocal::identity(ctx, 4)) == CycloElt::one(ctx));
    const CycloElt u = CycloElt::zeta(ctx, 2) + CycloElt::from_int(ctx, 3);
    const CycloElt v = CycloElt::from_int(ctx, 2) - CycloElt::lambda(ctx, 3);
    CHECK(det_local(MatLocal::diagonal({u, v})) == u * v);

    // det(I + lambda^2 A) = 1 + lambda^2 tr A at ell = 3, n = 3.
    const RingCtx c3(3, 3);
    for (int code = 0; code < 81; ++code) {
        FpMatrix a(3, 2, 2);
        for (int e = 0, x = code; e < 4; ++e, x /= 3)
            a.set(e / 2, e % 2, x % 3);
        const MatLocal m = MatLocal::identity(c3, 2) + MatLocal::from_fp(c3, a).shift_up(2);
        CHECK(det_local(m) == CycloElt::one(c3) + CycloElt::lambda(c3, 2) * CycloElt::from_int(c3, a.trace()));
    }

    // Multiplicativity on random matrices.
    for (int k = 0; k < 20; ++k) {
        MatLocal a(ctx, 3), b(ctx, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::vector<int> da(6), db(6);
                for (int t = 0; t < 6; ++t) {
                    da[static_cast<std::size_t>(t)] = static_cast<int>(rng() % 5);
                    db[static_cast<std::size_t>(t)] = static_cast<int>(rng() % 5);
                }
                a.set(i, j, CycloElt(ctx, da));
                b.set(i, j, CycloElt(ctx, db));
            }
        CHECK(det_local(a * b) == det_local(a) * det_local(b));
        if (det_local(a).is_unit()) {
            CHECK(a * inverse(a) == MatLocal::identity(ctx, 3));
        } else {
            CHECK_THROWS_AS(inverse(a), NotAUnit);
        }
    }
}

TEST_CASE("membership classification") {
    const RingCtx ctx(5, 6);
    const HermitianForm id2(ctx, {1, 1});
    CHECK(classify_membership(MatLocal::identity(ctx, 2), id2).kind == Membership::SU);
    const CycloElt z = CycloElt::zeta(ctx);
    CHECK(classify_membership(MatLocal::diagonal({z, conjugate(z)}), id2).kind == Membership::SU);
    CHECK(classify_membership(MatLocal::diagonal({z, z}), id2).kind == Membership::U);
    const CycloElt three = CycloElt::from_int(ctx, 3);
    const auto gu = classify_membership(MatLocal::diagonal({three, three}), id2);
    CHECK(gu.kind == Membership::GU);
    REQUIRE(gu.multiplier.has_value());
    CHECK(*gu.multiplier == CycloElt::from_int(ctx, 9));
    MatLocal bad = MatLocal::identity(ctx, 2);
    bad.set(0, 1, CycloElt::one(ctx));
    const auto none = classify_membership(bad, id2);
    CHECK(none.kind == Membership::None);
    CHECK(none.failing_entry.has_value());
}

TEST_CASE("su basis") {
    CHECK(su_dimension(7, 1) == 21);
    CHECK(su_dimension(7, 2) == 27);
    CHECK(su_dimension(2, 3) == 1);
    for (int ell : {3, 5, 7})
        for (int d = 2; d <= 5; ++d)
            for (int n = 1; n <= 4; ++n) {
                for (int sign : {1, -1}) {
                    const HermitianForm f = HermitianForm::standard(RingCtx(ell, 3), d, sign);
                    CHECK(f.sign() == sign);
                    const auto basis = su_basis(f, n);
                    CHECK(static_cast<std::int64_t>(basis.size()) == su_dimension(d, n));
                    CHECK(fp_span_rank(basis) == static_cast<int>(basis.size()));
                    for (const auto &b : basis) {
                        CHECK(b.trace() == 0);
                        CHECK(in_su(f.residue(), b, n));
                    }
                }
            }
}

TEST_CASE("filtration order exponents") {
    CHECK(filtration_order_exponent(11, 7, 10, 1) == 219);
    CHECK(filtration_order_exponent(3, 2, 3, 1) == 3);
    CHECK(filtration_order_exponent(5, 3, 4, 4) == 0);
    CHECK_THROWS_AS(filtration_order_exponent(5, 3, 4, 5), ArgumentError);
    CHECK(filtration_order_exponent(3, 2, 3, 1, FiltrationGroup::U) >= filtration_order_exponent(3, 2, 3, 1));

    // Exhaustive count of SU(V/lambda^3)_1 for ell = 3, d = 2, checked by the defining equations.
    const RingCtx ctx(3, 3);
    for (int sign : {1, -1}) {
        const HermitianForm f = HermitianForm::standard(ctx, 2, sign);
        const MatLocal gamma = f.matrix();
        int count = 0, classified = 0;
        for (int code = 0; code < 6561; ++code) {
            MatLocal m = MatLocal::identity(ctx, 2);
            for (int e = 0, x = code; e < 4; ++e, x /= 9)
                m.set(e / 2, e % 2, m(e / 2, e % 2) + CycloElt(ctx, {0, x % 3, (x / 3) % 3}));
            const bool member = m.dagger() * gamma * m == gamma && det_local(m) == CycloElt::one(ctx);
            count += member;
            classified += classify_membership(m, f).kind == Membership::SU;
        }
        CHECK(count == 27);
        CHECK(classified == 27);
    }
}

TEST_CASE("lifting SU members") {
    std::mt19937_64 rng(17);
    for (int ell : {3, 5})
        for (int n = 3; n <= 6; ++n) {
            const HermitianForm f = HermitianForm::standard(RingCtx(ell, n - 1), 3, n % 2 ? 1 : -1);
            CHECK(lift_su(MatLocal::identity(f.ctx(), 3), f) == MatLocal::identity(RingCtx(ell, n), 3));
            for (int k = 0; k < 5; ++k) {
                const MatLocal a = random_su_member(f, rng);
                REQUIRE(classify_membership(a, f).kind == Membership::SU);
                const MatLocal b = lift_su(a, f);
                CHECK(b.precision() == n);
                CHECK(b.reduce(n - 1) == a);
                CHECK(classify_membership(b, f.with_precision(n)).kind == Membership::SU);
            }
        }
    const HermitianForm f = HermitianForm::standard(RingCtx(5, 3), 2, 1);
    const CycloElt three = CycloElt::from_int(f.ctx(), 3);
    CHECK_THROWS_AS(lift_su(MatLocal::diagonal({three, three}), f), MembershipError);
}

TEST_CASE("permutation embedding") {
    CHECK(perm_embed({0, 1, 2, 3}, 5) == FpMatrix::identity(5, 3));
    std::vector<int> sigma(5);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 30; ++k) {
        std::vector<int> s = sigma, t = sigma;
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(t.begin(), t.end(), rng);
        std::vector<int> st(5);
        for (int i = 0; i < 5; ++i)
            st[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
        CHECK(perm_embed(st, 7) == perm_embed(s, 7) * perm_embed(t, 7));
        CHECK(mod(fp_det(perm_embed(s, 7)), 7) == mod(permutation_sign(s), 7));
    }
    CHECK(mod(fp_det(perm_embed({1, 0, 2, 3, 4}, 7)), 7) == 6);
    CHECK(mod(fp_det(perm_embed({0, 4, 2, 3, 1}, 7)), 7) == 6);
    CHECK(fp_det(perm_embed({1, 2, 0, 3, 4}, 7)) == 1);
}

TEST_CASE("form json") {
    const HermitianForm f = HermitianForm::standard(RingCtx(7, 4), 3, -1);
    nlohmann::json j = f;
    const HermitianForm g = form_from_json(j, 4);
    CHECK(g.gamma() == f.gamma());
    CHECK(g.sign() == -1);
}
