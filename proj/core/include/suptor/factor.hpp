#pragma once

// Integer factorization by trial division and Pollard-Brent.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace suptor {

struct Factorization {
    /// Prime factors with exponents, sorted by prime.
    std::vector<std::pair<mpz_class, int>> primes;
    /// Unfactored composite part (1 when the factorization is complete).
    mpz_class remainder = 1;
    bool complete() const { return remainder == 1; }
};

inline constexpr std::uint64_t kDefaultFactorBudget = 2'000'000;

/// Factors |n|; `budget` bounds the total number of Pollard-Brent iterations.
Factorization factor_integer(const mpz_class &n, std::uint64_t budget = kDefaultFactorBudget);

enum class SimplePrimeStatus { Found, ProvenAbsent, BudgetExhausted };

const char *to_string(SimplePrimeStatus s);

struct SimplePrimeResult {
    SimplePrimeStatus status;
    std::optional<mpz_class> prime;
    Factorization factorization;
};

/// Largest prime p with ord_p(disc) = 1, excluding p = 2 and p = ell.
/// Throws InseparableError for disc = 0.
SimplePrimeResult find_simple_prime(const mpz_class &disc, std::int64_t ell,
                                    std::uint64_t budget = kDefaultFactorBudget);

} // namespace suptor
