#pragma once

// Monic integer polynomials, the text grammar and discriminants.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace suptor {

class IntPoly {
public:
    IntPoly() = default;
    /// Constant term first; trailing zeros are dropped.
    explicit IntPoly(std::vector<mpz_class> coeffs);

    const std::vector<mpz_class> &coeffs() const noexcept { return coeffs_; }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const mpz_class &lead() const { return coeffs_.back(); }
    mpz_class coeff(int i) const;

    IntPoly derivative() const;
    mpz_class eval(const mpz_class &x) const;
    /// Euclidean 2-norm, rounded up.
    mpz_class norm2_ceil() const;

    std::string to_string() const;

    friend IntPoly operator+(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator-(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
    friend bool operator==(const IntPoly &a, const IntPoly &b) = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly &a, const IntPoly &b);

/// Grammar: sum of terms in x; term ::= integer | integer ['*'] 'x' ['^' exponent] | 'x' ['^' exponent],
/// exponent a positive integer, terms joined by '+' or '-', whitespace ignored.
/// Throws ParseError (with a 0-based position) on syntax errors, non-integer
/// coefficients and non-monic results.
IntPoly parse_poly(std::string_view text);

mpz_class resultant(const IntPoly &f, const IntPoly &g);
/// (-1)^{r(r-1)/2} Res(f, f') / lead(f); throws ArgumentError for degree < 2.
mpz_class discriminant(const IntPoly &f);

} // namespace suptor
