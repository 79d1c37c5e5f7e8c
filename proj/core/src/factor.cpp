#include "suptor/factor.hpp"

#include <algorithm>
#include <map>

#include "suptor/arith.hpp"
#include "suptor/errors.hpp"

namespace suptor {

namespace {

constexpr std::int64_t kTrialBound = 100000;

const std::vector<std::int64_t> &small_primes() {
    static const std::vector<std::int64_t> primes = primes_up_to(kTrialBound);
    return primes;
}

bool probable_prime(const mpz_class &n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// One Pollard-Brent run with constant c; returns a nontrivial factor or nullopt.
std::optional<mpz_class> brent(const mpz_class &n, unsigned long c, std::uint64_t &budget) {
    auto f = [&](const mpz_class &x) {
        mpz_class y = x * x + c;
        mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
        return y;
    };
    mpz_class y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i)
            y = f(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t steps = std::min(m, r - k);
            for (std::uint64_t i = 0; i < steps; ++i) {
                y = f(y);
                mpz_class diff = abs(x - y);
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += steps;
            if (budget <= steps)
                return std::nullopt;
            budget -= steps;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            mpz_class diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n)
        return std::nullopt;
    return g;
}

void split(const mpz_class &n, std::map<mpz_class, int> &out, std::vector<mpz_class> &stuck, std::uint64_t &budget) {
    if (n == 1)
        return;
    if (probable_prime(n)) {
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        split(s, out, stuck, budget);
        split(s, out, stuck, budget);
        return;
    }
    for (unsigned long c = 1; c < 64 && budget > 0; ++c) {
        if (auto d = brent(n, c, budget)) {
            split(*d, out, stuck, budget);
            split(n / *d, out, stuck, budget);
            return;
        }
    }
    stuck.push_back(n);
}

} // namespace

Factorization factor_integer(const mpz_class &n, std::uint64_t budget) {
    if (n == 0)
        throw ArgumentError("cannot factor zero");
    mpz_class m = abs(n);
    std::map<mpz_class, int> found;
    for (std::int64_t p : small_primes()) {
        if (mpz_class(static_cast<long>(p)) * p > m)
            break;
        const unsigned long up = static_cast<unsigned long>(p);
        while (mpz_divisible_ui_p(m.get_mpz_t(), up)) {
            m /= up;
            ++found[mpz_class(up)];
        }
    }
    std::vector<mpz_class> stuck;
    split(m, found, stuck, budget);

    Factorization f;
    for (auto &[p, e] : found)
        f.primes.emplace_back(p, e);
    for (const auto &s : stuck)
        f.remainder *= s;
    return f;
}

const char *to_string(SimplePrimeStatus s) {
    switch (s) {
    case SimplePrimeStatus::Found:
        return "found";
    case SimplePrimeStatus::ProvenAbsent:
        return "proven-absent";
    case SimplePrimeStatus::BudgetExhausted:
        return "budget-exhausted";
    }
    return "unknown";
}

SimplePrimeResult find_simple_prime(const mpz_class &disc, std::int64_t ell, std::uint64_t budget) {
    if (disc == 0)
        throw InseparableError("discriminant is zero: polynomial is not squarefree");
    SimplePrimeResult res{SimplePrimeStatus::ProvenAbsent, std::nullopt, factor_integer(disc, budget)};
    for (auto it = res.factorization.primes.rbegin(); it != res.factorization.primes.rend(); ++it) {
        const auto &[p, e] = *it;
        if (e != 1 || p == 2 || p == ell)
            continue;
        if ((disc % (p * p)) == 0 || disc % p != 0)
            throw InternalError("simple prime failed re-verification");
        res.status = SimplePrimeStatus::Found;
        res.prime = p;
        return res;
    }
    if (!res.factorization.complete())
        res.status = SimplePrimeStatus::BudgetExhausted;
    return res;
}

} // namespace suptor
