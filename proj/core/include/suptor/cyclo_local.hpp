#pragma once

// Exact arithmetic in O/lambda^n, O = Z[zeta_ell], lambda = 1 - zeta_ell.
//
// Elements are stored as canonical lambda-adic digits d_0..d_{n-1} in
// {0, ..., ell-1}, so that a = sum d_i lambda^i. Arithmetic goes through a
// lift to the zeta-power basis 1, zeta, ..., zeta^{ell-2} with integer
// coordinates reduced modulo ell^m, where ell^m O is contained in lambda^n O.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace suptor {

/// Coordinates in the basis 1, zeta, ..., zeta^{ell-2}.
using ZetaPoly = std::vector<std::int64_t>;
/// Exact element of Z[zeta] in the basis 1, zeta, ..., zeta^{ell-2}.
using ZetaInt = std::vector<mpz_class>;

namespace detail {
struct RingTables;
}

class RingCtx {
public:
    /// Throws ArgumentError unless ell is an odd prime and precision >= 1.
    RingCtx(int ell, int precision);

    int ell() const noexcept { return ell_; }
    int precision() const noexcept { return precision_; }
    /// Rank of O over Z.
    int rank() const noexcept { return ell_ - 1; }
    /// ell^m used to reduce zeta-coordinates.
    std::int64_t modulus() const noexcept;
    /// Z meets lambda^n O in ell^k Z with k = ceil(n / (ell - 1)).
    int rational_exponent() const noexcept { return (precision_ + ell_ - 2) / (ell_ - 1); }

    RingCtx with_precision(int precision) const { return RingCtx(ell_, precision); }

    const detail::RingTables &tables() const noexcept { return *tables_; }

    friend bool operator==(const RingCtx &a, const RingCtx &b) noexcept {
        return a.ell_ == b.ell_ && a.precision_ == b.precision_;
    }

private:
    int ell_;
    int precision_;
    std::shared_ptr<const detail::RingTables> tables_;
};

/// Throws ContextError if the two contexts differ.
void require_same_ctx(const RingCtx &a, const RingCtx &b);

class CycloElt {
public:
    /// The zero element.
    explicit CycloElt(RingCtx ctx);
    /// Throws ArgumentError on wrong length or digits outside {0, ..., ell-1}.
    CycloElt(RingCtx ctx, std::vector<int> digits);

    static CycloElt zero(const RingCtx &ctx) { return CycloElt(ctx); }
    static CycloElt one(const RingCtx &ctx) { return from_int(ctx, 1); }
    static CycloElt from_int(const RingCtx &ctx, std::int64_t value);
    static CycloElt from_int(const RingCtx &ctx, const mpz_class &value);
    /// zeta^power, any integer power.
    static CycloElt zeta(const RingCtx &ctx, std::int64_t power = 1);
    /// lambda^power for power >= 0.
    static CycloElt lambda(const RingCtx &ctx, int power = 1);

    const RingCtx &ctx() const noexcept { return ctx_; }
    int ell() const noexcept { return ctx_.ell(); }
    int precision() const noexcept { return ctx_.precision(); }
    std::span<const int> digits() const noexcept { return digits_; }
    int digit(int i) const { return digits_.at(static_cast<std::size_t>(i)); }

    /// Index of the first nonzero digit; precision() for zero.
    int valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() == precision(); }
    bool is_unit() const noexcept { return digits_[0] != 0; }

    /// Zeta-coordinates reduced modulo ctx().modulus().
    ZetaPoly lift() const;
    /// The integral element sum d_i lambda^i of Z[zeta], unreduced.
    ZetaInt lift_exact() const;

    /// Image in O/lambda^p for p <= precision().
    CycloElt reduce(int precision) const;
    /// Zero-padded lift to O/lambda^p for p >= precision().
    CycloElt extend(int precision) const;
    /// Multiplication by lambda^s (same precision).
    CycloElt shift_up(int s) const;
    /// Exact division by lambda^s; the result lives at precision() - s.
    /// Throws DomainError if valuation() < s.
    CycloElt shift_down(int s) const;

    CycloElt operator-() const;
    CycloElt &operator+=(const CycloElt &o);
    CycloElt &operator-=(const CycloElt &o);
    CycloElt &operator*=(const CycloElt &o);
    friend CycloElt operator+(CycloElt a, const CycloElt &b) { return a += b; }
    friend CycloElt operator-(CycloElt a, const CycloElt &b) { return a -= b; }
    friend CycloElt operator*(CycloElt a, const CycloElt &b) { return a *= b; }

    /// Throws ContextError if the contexts differ.
    friend bool operator==(const CycloElt &a, const CycloElt &b);

private:
    RingCtx ctx_;
    std::vector<int> digits_;
};

/// Reduce an integer polynomial in zeta (any degree, any sign) to canonical digits.
CycloElt canonicalize(const RingCtx &ctx, std::span<const std::int64_t> poly);
CycloElt canonicalize(const RingCtx &ctx, std::span<const mpz_class> poly);

CycloElt ring_add(const CycloElt &a, const CycloElt &b);
CycloElt ring_sub(const CycloElt &a, const CycloElt &b);
CycloElt ring_neg(const CycloElt &a);
CycloElt ring_mul(const CycloElt &a, const CycloElt &b);
CycloElt ring_pow(const CycloElt &a, std::uint64_t k);
/// Throws NotAUnit carrying the valuation of a.
CycloElt ring_inv(const CycloElt &a);

/// Image under zeta -> zeta^{-1}.
CycloElt conjugate(const CycloElt &a);
/// Image under sigma_j : zeta -> zeta^j. Throws ArgumentError if ell | j.
CycloElt galois_apply(std::int64_t j, const CycloElt &a);
/// Product of all Galois conjugates.
CycloElt norm(const CycloElt &a);

/// If a lies in the image of Z, its residue modulo ell^k with
/// k = ctx.rational_exponent(); otherwise nullopt.
std::optional<mpz_class> rational_residue(const CycloElt &a);

/// ell / lambda^{ell-1}, a unit, at the given context.
CycloElt ell_unit_part(const RingCtx &ctx);

/// log(y) for y in 1 + lambda^2 O. Throws DomainError otherwise.
CycloElt log_unit(const CycloElt &y);
/// exp(x) for x in lambda^2 O. Throws DomainError otherwise.
CycloElt exp(const CycloElt &x);

void to_json(nlohmann::json &j, const CycloElt &a);
/// Throws ArgumentError on schema violations.
CycloElt cyclo_from_json(const nlohmann::json &j);

namespace zeta {

/// Exact arithmetic in Z[zeta_ell] on the basis 1, ..., zeta^{ell-2}.
ZetaInt reduce(int ell, std::span<const mpz_class> poly);
ZetaInt add(const ZetaInt &a, const ZetaInt &b);
ZetaInt sub(const ZetaInt &a, const ZetaInt &b);
ZetaInt scale(const ZetaInt &a, const mpz_class &c);
ZetaInt mul(int ell, const ZetaInt &a, const ZetaInt &b);
ZetaInt galois(int ell, std::int64_t j, const ZetaInt &a);
ZetaInt lambda_power(int ell, int k);
ZetaInt power_of_zeta(int ell, std::int64_t k);
/// Exact quotient by lambda^s; throws DomainError if not divisible.
ZetaInt divide_by_lambda(int ell, ZetaInt a, int s);

} // namespace zeta

} // namespace suptor
