#pragma once

// Group commutators in the congruence filtration of Gl_d(O/lambda^n):
// the symbolic identity over a free algebra and its numeric counterparts.

#include <string>
#include <vector>

#include "suptor/free_series.hpp"
#include "suptor/hermitian.hpp"

namespace suptor {

/// The series A = 1 + sum t^i A_i, B likewise (i = N..n-1, N = floor((n-1)/2)),
/// the case formula for the commutator, and the residual AB - comm * BA.
struct CommutatorSeries {
    int n = 0;
    int level = 0;
    std::string case_name;
    FreeSeries a;
    FreeSeries b;
    FreeSeries commutator;
    FreeSeries residual;
};

/// Throws ArgumentError for n < 3.
CommutatorSeries commutator_series(int n);

struct IdentityReport {
    bool holds = false;
    std::string case_name;
    /// Nonzero residual terms, empty when the identity holds.
    std::string residual;
};

IdentityReport verify_commutator_identity(int n);

/// A B A^{-1} B^{-1}.
MatLocal group_commutator(const MatLocal &a, const MatLocal &b);

struct MatrixCommutatorReport {
    /// The commutator equals the case formula built from the digits of A and B.
    bool formula_holds = false;
    /// Gauss-Jordan and Neumann inverses of A and B agree.
    bool inverses_agree = false;
    /// Only meaningful when central_applicable: the commutator is I.
    bool central_holds = false;
    bool central_applicable = false;
    MatLocal commutator;
    MatLocal expected;
};

/// Both matrices must lie in Gl_d(O/lambda^n)_N, N = floor((n-1)/2); throws MembershipError otherwise.
MatrixCommutatorReport matrix_commutator_check(const MatLocal &a, const MatLocal &b);

/// Gamma^{-1} E_ij^{(n)} over F_ell (0-based indices).
FpMatrix gamma_inv_e(const std::vector<std::int64_t> &gamma, int ell, int i, int j, int n);

struct BracketEntry {
    FpMatrix bracket;
    FpMatrix formula;
    bool matches = false;
};

/// [Gamma^{-1} E_ij^{(m)}, Gamma^{-1} E_jl^{(n)}] against its closed form; needs j != i and j != l.
BracketEntry eij_bracket_table(const std::vector<std::int64_t> &gamma, int ell, int i, int j, int l, int m, int n);

struct CommutatorSpan {
    int rank = 0;
    std::int64_t dimension = 0;
    bool all_in_su = false;
    int pairs = 0;
};

/// Rank of the top digits of commutators of lifted basis elements of SU_N and SU_M.
CommutatorSpan commutator_span(const HermitianForm &f, int n);

} // namespace suptor
