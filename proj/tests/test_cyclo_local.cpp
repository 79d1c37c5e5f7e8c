#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "suptor/cyclo_local.hpp"
#include "suptor/errors.hpp"

using namespace suptor;

namespace {

CycloElt random_elt(const RingCtx &ctx, std::mt19937_64 &rng) {
    std::vector<int> d(static_cast<std::size_t>(ctx.precision()));
    for (auto &x : d)
        x = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.ell()));
    return CycloElt(ctx, d);
}

std::vector<int> digits_of(const CycloElt &a) { return {a.digits().begin(), a.digits().end()}; }

} // namespace

TEST_CASE("canonical digits of small elements") {
    CHECK(digits_of(CycloElt::from_int(RingCtx(3, 3), 3)) == std::vector<int>{0, 0, 2});
    CHECK(digits_of(CycloElt::zeta(RingCtx(5, 2))) == std::vector<int>{1, 4});
    const RingCtx ctx(3, 3);
    const CycloElt l = CycloElt::lambda(ctx);
    CHECK(digits_of(l * conjugate(l)) == std::vector<int>{0, 0, 2});
    CHECK(digits_of(CycloElt::lambda(RingCtx(7, 5), 2)) == std::vector<int>{0, 0, 1, 0, 0});
}

TEST_CASE("multiplication table of O/lambda^3 at ell = 3 agrees with polynomial arithmetic") {
    const RingCtx ctx(3, 3);
    const oracle::CyclotomicRing z(3);
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b) {
            const CycloElt x(ctx, {a % 3, (a / 3) % 3, a / 9});
            const CycloElt y(ctx, {b % 3, (b / 3) % 3, b / 9});
            const auto px = z.from_digits(x.digits()), py = z.from_digits(y.digits());
            REQUIRE(z.congruent(z.from_digits((x * y).digits()), z.mul(px, py), 3));
            REQUIRE(z.congruent(z.from_digits((x + y).digits()), z.add(px, py), 3));
        }
}

TEST_CASE("ring operations agree with polynomial arithmetic") {
    std::mt19937_64 rng(11);
    for (int ell : {5, 7, 11})
        for (int n : {1, 4, 10, 17}) {
            const RingCtx ctx(ell, n);
            const oracle::CyclotomicRing z(ell);
            for (int k = 0; k < 15; ++k) {
                const CycloElt a = random_elt(ctx, rng), b = random_elt(ctx, rng);
                const auto pa = z.from_digits(a.digits()), pb = z.from_digits(b.digits());
                CHECK(z.congruent(z.from_digits((a * b).digits()), z.mul(pa, pb), n));
                CHECK(z.congruent(z.from_digits((a - b).digits()), z.sub(pa, pb), n));
                CHECK(z.congruent(z.from_digits(conjugate(a).digits()), z.galois(pa, -1), n));
                CHECK(z.congruent(z.from_digits(galois_apply(2, a).digits()), z.galois(pa, 2), n));
                CHECK(z.congruent(z.from_digits(canonicalize(ctx, a.lift()).digits()), pa, n));
            }
        }
}

TEST_CASE("zeta and lambda satisfy their defining relations") {
    for (int ell : {3, 5, 7, 11, 13}) {
        const RingCtx ctx(ell, 3 * ell);
        const CycloElt one = CycloElt::one(ctx), zeta = CycloElt::zeta(ctx);
        CHECK(ring_pow(zeta, static_cast<std::uint64_t>(ell)) == one);
        CHECK(one - zeta == CycloElt::lambda(ctx));
        CHECK(CycloElt::lambda(ctx, ell - 1) * ell_unit_part(ctx) == CycloElt::from_int(ctx, ell));
        CHECK((conjugate(CycloElt::lambda(ctx)) + CycloElt::lambda(ctx)).valuation() >= 2);
    }
}

TEST_CASE("inverses and the non-unit error") {
    std::mt19937_64 rng(5);
    const RingCtx ctx(5, 9);
    for (int k = 0; k < 50; ++k) {
        const CycloElt a = random_elt(ctx, rng);
        if (!a.is_unit()) {
            CHECK_THROWS_AS(ring_inv(a), NotAUnit);
            continue;
        }
        CHECK(a * ring_inv(a) == CycloElt::one(ctx));
    }
    try {
        ring_inv(CycloElt::lambda(ctx, 3));
        FAIL("expected NotAUnit");
    } catch (const NotAUnit &e) {
        CHECK(e.valuation() == 3);
    }
}

TEST_CASE("norms are rational and rational residues are recovered") {
    std::mt19937_64 rng(9);
    const RingCtx ctx(5, 12);
    CHECK(rational_residue(CycloElt::from_int(ctx, -7)) == mpz_class(118));
    CHECK_FALSE(rational_residue(CycloElt::zeta(ctx)).has_value());
    for (int k = 0; k < 20; ++k)
        CHECK(rational_residue(norm(random_elt(ctx, rng))).has_value());
}

TEST_CASE("log and exp are inverse and log is a homomorphism") {
    std::mt19937_64 rng(3);
    for (int ell : {3, 5, 7, 11})
        for (int n : {3, 8, 15}) {
            const RingCtx ctx(ell, n);
            const CycloElt one = CycloElt::one(ctx);
            for (int k = 0; k < 10; ++k) {
                const CycloElt x = random_elt(ctx, rng).shift_up(2).reduce(n).extend(n);
                const CycloElt y = random_elt(ctx, rng).shift_up(2).reduce(n).extend(n);
                CHECK(exp(log_unit(one + x)) == one + x);
                CHECK(log_unit(exp(x)) == x);
                CHECK(log_unit((one + x) * (one + y)) == log_unit(one + x) + log_unit(one + y));
                CHECK(exp(x + y) == exp(x) * exp(y));
            }
            CHECK_THROWS_AS(log_unit(one + CycloElt::lambda(ctx)), DomainError);
            CHECK_THROWS_AS(exp(CycloElt::lambda(ctx)), DomainError);
        }
}

TEST_CASE("precision changes and shifts") {
    const RingCtx ctx(7, 6);
    const CycloElt a(ctx, {0, 0, 3, 1, 4, 6});
    CHECK(a.valuation() == 2);
    CHECK(a.shift_down(2).precision() == 4);
    CHECK(a.shift_down(2).extend(6).shift_up(2) == a);
    CHECK_THROWS_AS(a.shift_down(3), DomainError);
    CHECK(a.reduce(3).extend(6).digit(3) == 0);
    CHECK_THROWS_AS(a + CycloElt::one(RingCtx(7, 5)), ContextError);
    CHECK_THROWS_AS(a + CycloElt::one(RingCtx(5, 6)), ContextError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(RingCtx(4, 3), ArgumentError);
    CHECK_THROWS_AS(RingCtx(2, 3), ArgumentError);
    CHECK_THROWS_AS(CycloElt(RingCtx(3, 2), {0, 3}), ArgumentError);
    CHECK_THROWS_AS(galois_apply(5, CycloElt::one(RingCtx(5, 3))), ArgumentError);
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(1);
    const CycloElt a = random_elt(RingCtx(11, 9), rng);
    nlohmann::json j = a;
    CHECK(j["ell"] == 11);
    CHECK(cyclo_from_json(j) == a);
}
