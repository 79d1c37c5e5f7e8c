#pragma once

// The unit groups U_{l,r} and U'_l, the infinity-type maps on logarithmic
// coordinates, and finite-precision index computations.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "suptor/cyclo_local.hpp"
#include "suptor/int_linalg.hpp"

namespace suptor {

/// d in U_{ell,r} at the precision of d: d conj(d) is Galois-stable and
/// congruent to 1 modulo ell (r - 1). Throws NotAUnit for non-units.
bool u_lr_member(const CycloElt &d, int ell, int r);

struct UnitLattice {
    RingCtx ctx;
    /// Logarithmic coordinates of the generators.
    std::vector<CycloElt> log_generators;
    /// Order of the torsion subgroup mu_{2 ell}.
    int torsion_order = 0;
};

/// lambda^i - conj(lambda)^i for i = 2, ..., (ell+1)/2; precision >= 4.
UnitLattice u_prime_basis(int ell, int precision);

enum class InfinityType {
    /// sum n(j) sigma_j
    T,
    /// sum n'(j) sigma_j, with the half-integers of even r taken literally
    TPrime,
    /// T' restricted to anti-fixed inputs: sum_{j in C} 2 n'(j) sigma_j
    TDoublePrime,
};

/// Needs valuation(x) >= 2; TDoublePrime also needs x + conj(x) = 0.
CycloElt infinity_type_apply(int ell, int r, const CycloElt &x, InfinityType variant);

/// The additive group O/lambda^k on the zeta basis.
AbelianPresentation additive_presentation(int ell, int k);
/// (O/lambda^n)^x = Z/(ell-1) x Z/ell x O/lambda^{n-2}.
AbelianPresentation unit_group_presentation(int ell, int n);
/// Exact zeta coordinates of an element of O/lambda^n (a column for the presentations above).
std::vector<mpz_class> zeta_coordinates(const CycloElt &a);

struct UnitDecomposition {
    int sign = 1;
    int zeta_power = 0;
    CycloElt rational_part;
    CycloElt anti_part;
};

/// d = sign * zeta^a * rho * u' with rho rational and u' conj(u') = 1.
UnitDecomposition decompose_unit(const CycloElt &d, int ell, int r);
CycloElt recombine(const UnitDecomposition &dec);

struct LatticeIndex {
    int t = 0;
    /// Precision at which the exponent stabilized.
    int precision = 0;
};

/// ord_ell of [U' : T''(U')] at the smallest stable precision >= start.
LatticeIndex lattice_index_check(int ell, int r, int start_precision = 0, int max_steps = 12);

struct ReducedUnitGroup {
    mpz_class order;
    /// Order of the image of (1 + ell (r-1) Z_ell) x U'; the torsion mu_{2 ell} contributes 2 ell.
    mpz_class anti_part_order;
};

/// Order of the image of U_{ell,r} in (O/lambda^{ell-1})^x.
ReducedUnitGroup reduced_unit_group(int ell, int r);

} // namespace suptor
