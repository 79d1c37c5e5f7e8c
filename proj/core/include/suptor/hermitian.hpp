#pragma once

// Diagonal Hermitian forms over O/lambda^n, unitary membership, the su^(n)
// slices of the congruence filtration and the constructive lift.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "suptor/mat_local.hpp"

namespace suptor {

class HermitianForm {
public:
    /// gamma holds the rational units alpha_i; each must be prime to ell.
    HermitianForm(RingCtx ctx, std::vector<std::int64_t> gamma);

    /// I_d for sign +1, diag(1, ..., 1, smallest non-residue) for sign -1.
    static HermitianForm standard(const RingCtx &ctx, int dim, int sign);

    const RingCtx &ctx() const noexcept { return ctx_; }
    int dim() const noexcept { return static_cast<int>(gamma_.size()); }
    int ell() const noexcept { return ctx_.ell(); }
    /// Residues of alpha_i modulo ell^k, k = ctx.rational_exponent().
    const std::vector<std::int64_t> &gamma() const noexcept { return gamma_; }
    /// Legendre class of the product of the alpha_i.
    int sign() const noexcept { return sign_; }

    MatLocal matrix() const;
    MatLocal inverse_matrix() const;
    /// Gamma mod lambda, as an F_ell matrix.
    FpMatrix residue() const;
    HermitianForm with_precision(int precision) const;

private:
    RingCtx ctx_;
    std::vector<std::int64_t> gamma_;
    int sign_;
};

void to_json(nlohmann::json &j, const HermitianForm &f);
/// The precision of the returned form is rational_exponent-compatible: ctx.precision().
HermitianForm form_from_json(const nlohmann::json &j, int precision);

enum class Membership { GU, U, SU, None };

struct MembershipVerdict {
    Membership kind = Membership::None;
    std::optional<CycloElt> multiplier;
    std::optional<CycloElt> det;
    /// First (row, col) where A^dagger Gamma A differs from mu Gamma.
    std::optional<std::pair<int, int>> failing_entry;
};

const char *to_string(Membership m);

MembershipVerdict classify_membership(const MatLocal &a, const HermitianForm &f);

struct WeilGram {
    FpMatrix gram;
    std::int64_t det = 0;
    /// Legendre class of det.
    int det_class = 0;
    /// Legendre class of r.
    int r_class = 0;
    /// (r | ell).
    int epsilon = 0;
};

/// c (E - r I_{r-1}) over F_ell, E the all-ones matrix.
WeilGram weil_gram_and_epsilon(int ell, int r, std::int64_t c);

/// (r | ell); throws ArgumentError if ell | r or ell is not an odd prime.
int epsilon(int ell, int r);

std::int64_t su_dimension(int d, int n);
std::int64_t u_dimension(int d, int n);
/// Basis of su^(n)(F_ell) for the reduction of the form.
std::vector<FpMatrix> su_basis(const HermitianForm &f, int n);
/// Gamma A == (-1)^n A^T Gamma and tr A == 0 over F_ell.
bool in_su(const FpMatrix &gamma, const FpMatrix &a, int n);

enum class FiltrationGroup { SU, U };

/// e with |G(V/lambda^n)_k| = ell^e.
std::int64_t filtration_order_exponent(int ell, int d, int n, int k, FiltrationGroup g = FiltrationGroup::SU);

/// Lift a member of SU(V/lambda^{n-1})_1 to SU(V/lambda^n); the precision of the form is ignored.
MatLocal lift_su(const MatLocal &a, const HermitianForm &f);

/// A pseudo-random element of SU(V/lambda^n)_1 built level by level.
MatLocal random_su_member(const HermitianForm &f, std::mt19937_64 &rng);

/// Matrix of a permutation of {0, ..., r-1} on F_ell^r / diag in the basis e_0, ..., e_{r-2}.
FpMatrix perm_embed(const std::vector<int> &sigma, int ell);
int permutation_sign(const std::vector<int> &sigma);

} // namespace suptor
