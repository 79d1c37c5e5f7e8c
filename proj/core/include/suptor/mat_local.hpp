#pragma once

// Square matrices over O/lambda^n.

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "suptor/cyclo_local.hpp"
#include "suptor/fp_matrix.hpp"

namespace suptor {

class MatLocal {
public:
    /// Zero matrix.
    MatLocal(RingCtx ctx, int dim);
    /// Row-major entries; throws ArgumentError on wrong count, ContextError on mixed contexts.
    MatLocal(RingCtx ctx, int dim, std::vector<CycloElt> entries);

    static MatLocal identity(const RingCtx &ctx, int dim);
    static MatLocal diagonal(const std::vector<CycloElt> &diag);
    /// Lift of an F_ell matrix (entries in {0, ..., ell-1}).
    static MatLocal from_fp(const RingCtx &ctx, const FpMatrix &m);
    /// sum_i lambda^i * levels[i]; at most precision levels.
    static MatLocal from_digits(const RingCtx &ctx, const std::vector<FpMatrix> &levels);

    const RingCtx &ctx() const noexcept { return ctx_; }
    int dim() const noexcept { return dim_; }
    int ell() const noexcept { return ctx_.ell(); }
    int precision() const noexcept { return ctx_.precision(); }

    const CycloElt &operator()(int i, int j) const;
    void set(int i, int j, CycloElt value);
    const std::vector<CycloElt> &entries() const noexcept { return entries_; }

    /// The F_ell matrix of lambda^k digits.
    FpMatrix digit(int k) const;
    std::vector<FpMatrix> digit_expansion() const;
    /// Largest k <= precision with the matrix congruent to I mod lambda^k.
    int level() const;
    /// Minimal valuation over all entries.
    int valuation() const;

    MatLocal transpose() const;
    /// Conjugate transpose.
    MatLocal dagger() const;
    MatLocal scaled(const CycloElt &c) const;
    MatLocal shift_up(int s) const;
    MatLocal reduce(int precision) const;
    MatLocal extend(int precision) const;
    CycloElt trace() const;

    MatLocal operator-() const;
    MatLocal &operator+=(const MatLocal &o);
    MatLocal &operator-=(const MatLocal &o);
    friend MatLocal operator+(MatLocal a, const MatLocal &b) { return a += b; }
    friend MatLocal operator-(MatLocal a, const MatLocal &b) { return a -= b; }
    friend MatLocal operator*(const MatLocal &a, const MatLocal &b);
    friend bool operator==(const MatLocal &a, const MatLocal &b);

private:
    void check_compatible(const MatLocal &o) const;

    RingCtx ctx_;
    int dim_;
    std::vector<CycloElt> entries_;
};

/// Determinant over O/lambda^n, by elimination pivoting on minimal valuation.
CycloElt det_local(const MatLocal &a);
/// Determinant of the underlying Z_ell-linear map: the norm of det_local.
CycloElt det_base(const MatLocal &a);

/// Inverse by Gauss-Jordan; throws NotAUnit if the determinant is not a unit.
MatLocal inverse(const MatLocal &a);
/// Inverse of a matrix congruent to I mod lambda via the truncated Neumann series.
MatLocal inverse_neumann(const MatLocal &a);

void to_json(nlohmann::json &j, const MatLocal &m);
MatLocal mat_from_json(const nlohmann::json &j);

} // namespace suptor
