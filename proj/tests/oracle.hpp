#pragma once

// Independent arithmetic in Z[x]/(Phi_ell): elements are integer coordinates in
// the basis 1, x, ..., x^{ell-2}. Used to cross-check the digit-based ring.

#include <span>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Elt = std::vector<mpz_class>;

class CyclotomicRing {
public:
    explicit CyclotomicRing(int ell) : ell_(ell) {
        mu_ = one();
        for (int j = 2; j < ell; ++j)
            mu_ = mul(mu_, sub(one(), x_pow(j)));
    }

    int ell() const { return ell_; }
    Elt zero() const { return Elt(static_cast<std::size_t>(ell_ - 1), 0); }
    Elt one() const {
        Elt e = zero();
        e[0] = 1;
        return e;
    }
    Elt constant(long c) const {
        Elt e = zero();
        e[0] = c;
        return e;
    }

    Elt x_pow(long k) const {
        k %= ell_;
        if (k < 0)
            k += ell_;
        Elt raw(static_cast<std::size_t>(ell_), 0);
        raw[static_cast<std::size_t>(k)] = 1;
        return fold(raw);
    }

    Elt lambda() const { return sub(one(), x_pow(1)); }

    Elt add(const Elt &a, const Elt &b) const {
        Elt c = a;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += b[i];
        return c;
    }
    Elt sub(const Elt &a, const Elt &b) const {
        Elt c = a;
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= b[i];
        return c;
    }
    Elt mul(const Elt &a, const Elt &b) const {
        Elt raw(static_cast<std::size_t>(2 * ell_), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                raw[(i + j) % static_cast<std::size_t>(ell_)] += a[i] * b[j];
        raw.resize(static_cast<std::size_t>(ell_));
        return fold(raw);
    }
    Elt pow(Elt a, int k) const {
        Elt r = one();
        for (int i = 0; i < k; ++i)
            r = mul(r, a);
        return r;
    }

    /// sigma_j: x -> x^j.
    Elt galois(const Elt &a, long j) const {
        Elt raw(static_cast<std::size_t>(ell_), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            long e = (static_cast<long>(i) * j) % ell_;
            if (e < 0)
                e += ell_;
            raw[static_cast<std::size_t>(e)] += a[i];
        }
        return fold(raw);
    }

    /// sum d_i lambda^i.
    Elt from_digits(std::span<const int> digits) const {
        Elt acc = zero(), lp = one();
        const Elt l = lambda();
        for (int d : digits) {
            acc = add(acc, mul(lp, constant(d)));
            lp = mul(lp, l);
        }
        return acc;
    }

    /// a in lambda^n O, using lambda * mu = ell with mu = prod_{j >= 2} (1 - x^j).
    bool divisible(const Elt &a, int n) const {
        const Elt t = mul(a, pow(mu_, n));
        mpz_class m;
        mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(ell_), static_cast<unsigned long>(n));
        for (const auto &c : t)
            if (c % m != 0)
                return false;
        return true;
    }

    bool congruent(const Elt &a, const Elt &b, int n) const { return divisible(sub(a, b), n); }

private:
    // Reduce a length-ell vector modulo 1 + x + ... + x^{ell-1}.
    Elt fold(Elt raw) const {
        const mpz_class top = raw[static_cast<std::size_t>(ell_ - 1)];
        Elt out(static_cast<std::size_t>(ell_ - 1));
        for (int i = 0; i < ell_ - 1; ++i)
            out[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] - top;
        return out;
    }

    int ell_;
    Elt mu_;
};

} // namespace oracle
