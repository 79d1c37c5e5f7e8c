#pragma once

// Dense polynomials over F_p (p < 2^31), constant term first, and their factorization.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "suptor/int_poly.hpp"

namespace suptor::fp {

using Poly = std::vector<std::int64_t>;

void trim(Poly &a);
int deg(const Poly &a);
Poly reduce(const IntPoly &f, std::int64_t p);
Poly add(const Poly &a, const Poly &b, std::int64_t p);
Poly sub(const Poly &a, const Poly &b, std::int64_t p);
Poly mul(const Poly &a, const Poly &b, std::int64_t p);
Poly scale(const Poly &a, std::int64_t c, std::int64_t p);
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b, std::int64_t p);
Poly rem(const Poly &a, const Poly &b, std::int64_t p);
Poly monic(const Poly &a, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
/// Returns (g, s, t) with s a + t b = g, g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly &a, const Poly &b, std::int64_t p);
Poly derivative(const Poly &a, std::int64_t p);
Poly powmod(Poly base, const mpz_class &e, const Poly &f, std::int64_t p);

/// Distinct-degree factorization of a monic squarefree f: pairs (d, product of the degree-d factors).
std::vector<std::pair<int, Poly>> ddf(const Poly &f, std::int64_t p);
/// Equal-degree splitting (p odd) of a product of degree-d irreducibles.
std::vector<Poly> edf(const Poly &f, int d, std::int64_t p, std::mt19937_64 &rng);
/// Monic irreducible factors of a monic squarefree f.
std::vector<Poly> factor_squarefree(const Poly &f, std::int64_t p, std::mt19937_64 &rng);
/// Sorted factor degrees of a monic squarefree f.
std::vector<int> cycle_type(const Poly &f, std::int64_t p);

} // namespace suptor::fp
