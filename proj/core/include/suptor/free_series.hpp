#pragma once

// Truncated power series in a central variable t whose coefficients are
// rational combinations of words in a finite noncommuting alphabet.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "suptor/mat_local.hpp"

namespace suptor {

using Alphabet = std::vector<std::string>;

class FreeSeries {
public:
    using Word = std::vector<std::uint8_t>;
    /// (t-degree, word); ordered by degree, then lexicographically.
    using Key = std::pair<int, Word>;

    FreeSeries(std::shared_ptr<const Alphabet> alphabet, int truncation);

    static FreeSeries constant(std::shared_ptr<const Alphabet> alphabet, int truncation, const mpq_class &c);
    /// coefficient * t^degree.
    static FreeSeries t_power(std::shared_ptr<const Alphabet> alphabet, int truncation, int degree,
                              const mpq_class &coefficient = 1);
    /// coefficient * t^degree * symbol.
    static FreeSeries monomial(std::shared_ptr<const Alphabet> alphabet, int truncation, int degree,
                               const std::string &symbol, const mpq_class &coefficient = 1);

    int truncation() const noexcept { return truncation_; }
    const Alphabet &alphabet() const noexcept { return *alphabet_; }
    const std::shared_ptr<const Alphabet> &alphabet_ptr() const noexcept { return alphabet_; }
    const std::map<Key, mpq_class> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpq_class coefficient(int degree, const Word &word) const;
    std::size_t symbol_index(const std::string &name) const;

    FreeSeries &operator+=(const FreeSeries &o);
    FreeSeries &operator-=(const FreeSeries &o);
    FreeSeries &operator*=(const mpq_class &c);
    friend FreeSeries operator+(FreeSeries a, const FreeSeries &b) { return a += b; }
    friend FreeSeries operator-(FreeSeries a, const FreeSeries &b) { return a -= b; }
    friend FreeSeries operator*(const FreeSeries &a, const FreeSeries &b);
    friend bool operator==(const FreeSeries &a, const FreeSeries &b);

    /// Terms like "3/2*t^2*A1*B1", sorted by the canonical key order.
    std::string to_string() const;

private:
    void check_compatible(const FreeSeries &o) const;
    void add_term(const Key &key, const mpq_class &c);

    std::shared_ptr<const Alphabet> alphabet_;
    int truncation_;
    std::map<Key, mpq_class> terms_;
};

/// Throws ArgumentError on alphabet or truncation mismatch.
FreeSeries series_mul(const FreeSeries &p, const FreeSeries &q);

/// Substitute an F_ell matrix for each symbol and lambda for t.
/// Denominators must be prime to ell.
MatLocal evaluate(const FreeSeries &s, const std::vector<FpMatrix> &values, const RingCtx &ctx);

} // namespace suptor
