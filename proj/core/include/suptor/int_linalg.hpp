#pragma once

// Exact integer linear algebra: fraction-free determinants, Smith normal
// form and orders of finitely presented abelian groups.

#include <vector>

#include <gmpxx.h>

namespace suptor {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Determinant by Bareiss elimination.
mpz_class bareiss_det(IntMatrix m);

/// Nonzero invariant factors d_1 | d_2 | ... (positive), one per unit of rank.
std::vector<mpz_class> smith_invariants(IntMatrix m);

/// Z^g modulo the column span of the relation matrix (g rows).
struct AbelianPresentation {
    int generators = 0;
    IntMatrix relations;
};

/// Invariant factors > 1 of a finite presented group; throws DomainError if infinite.
std::vector<mpz_class> group_structure(const AbelianPresentation &p);
mpz_class group_order(const AbelianPresentation &p);

/// Order of the subgroup generated by the given coordinate columns (g rows).
/// Throws DomainError if the presented group is infinite.
mpz_class abelian_order(const AbelianPresentation &p, const IntMatrix &columns);

/// Horizontal concatenation of two matrices with the same row count.
IntMatrix hconcat(const IntMatrix &a, const IntMatrix &b);

} // namespace suptor
