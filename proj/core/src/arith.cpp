#include "suptor/arith.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "suptor/errors.hpp"

namespace suptor {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

void require_odd_prime(std::int64_t ell, const char *what) {
    if (ell < 3 || !is_prime(ell))
        throw ArgumentError(std::string(what) + " must be an odd prime, got " + std::to_string(ell));
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t powmod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1)
        throw ArgumentError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    return mod(s0, m);
}

int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = powmod(a, static_cast<std::uint64_t>((p - 1) / 2), p);
    if (r == 0)
        return 0;
    return r == 1 ? 1 : -1;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t p) {
    a = mod(a, p);
    if (a == 0)
        throw ArgumentError("multiplicative order of a non-unit");
    std::vector<std::int64_t> prime_factors;
    std::int64_t m = p - 1;
    for (std::int64_t q = 2; q * q <= m; ++q) {
        if (m % q != 0)
            continue;
        prime_factors.push_back(q);
        while (m % q == 0)
            m /= q;
    }
    if (m > 1)
        prime_factors.push_back(m);

    std::int64_t order = p - 1;
    for (std::int64_t q : prime_factors)
        while (order % q == 0 && powmod(a, static_cast<std::uint64_t>(order / q), p) == 1)
            order /= q;
    return order;
}

std::int64_t primitive_root(std::int64_t p) {
    for (std::int64_t g = 1; g < p; ++g)
        if (multiplicative_order(g, p) == p - 1)
            return g;
    throw ArgumentError("no primitive root modulo " + std::to_string(p));
}

std::int64_t smallest_nonresidue(std::int64_t p) {
    for (std::int64_t a = 2; a < p; ++a)
        if (legendre(a, p) == -1)
            return a;
    throw ArgumentError("no quadratic non-residue modulo " + std::to_string(p));
}

int valuation(const mpz_class &n, std::int64_t p) {
    if (n == 0)
        return -1;
    mpz_class m = abs(n);
    int v = 0;
    mpz_class q, r;
    mpz_class pp = static_cast<long>(p);
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
        if (r != 0)
            return v;
        m = q;
        ++v;
    }
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0)
        return -1;
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<bool> composite(static_cast<std::size_t>(std::max<std::int64_t>(bound + 1, 2)), false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::string to_fraction_string(const mpq_class &q) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace suptor
