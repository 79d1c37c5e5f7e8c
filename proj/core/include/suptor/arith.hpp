#pragma once

// Elementary integer arithmetic shared by the modules: modular powers,
// Legendre symbols, multiplicative orders and valuations.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace suptor {

bool is_prime(std::int64_t n);

/// Throws ArgumentError unless ell is an odd prime.
void require_odd_prime(std::int64_t ell, const char *what = "ell");

std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m);
/// Inverse of a modulo m; throws ArgumentError if gcd(a, m) != 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// Legendre symbol (a | p) in {-1, 0, 1} for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

/// Multiplicative order of a modulo the prime p (a must be coprime to p).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t p);

/// Smallest positive primitive root modulo the prime p.
std::int64_t primitive_root(std::int64_t p);

/// Smallest positive quadratic non-residue modulo the odd prime p.
std::int64_t smallest_nonresidue(std::int64_t p);

/// p-adic valuation; the valuation of zero is reported as -1.
int valuation(const mpz_class &n, std::int64_t p);
int valuation(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);
std::int64_t binomial(int n, int k);
mpz_class factorial(int n);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Exact rational rendered as "p/q" (or "p" when integral).
std::string to_fraction_string(const mpq_class &q);

} // namespace suptor
