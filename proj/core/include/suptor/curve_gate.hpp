#pragma once

// Hypothesis checks for y^ell = f(x) and the ell-division field degree report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "suptor/class_invariants.hpp"
#include "suptor/factor.hpp"
#include "suptor/int_poly.hpp"
#include "suptor/unit_lattices.hpp"

namespace suptor {

/// A proper monic factor of f over Z, or nullopt when f is irreducible.
/// f must be monic and squarefree.
std::optional<IntPoly> find_factor(const IntPoly &f);

enum class GaloisVerdict { SrCertified, Inconclusive, Reducible };

const char *to_string(GaloisVerdict v);

struct CycleWitness {
    std::int64_t prime = 0;
    std::vector<int> cycle_type;
};

struct GaloisCertificate {
    GaloisVerdict verdict = GaloisVerdict::Inconclusive;
    std::optional<IntPoly> factor;
    int primes_sampled = 0;
    std::optional<CycleWitness> irreducible;
    std::optional<CycleWitness> transposition;
    std::optional<CycleWitness> prime_cycle;
};

inline constexpr int kDefaultGaloisBudget = 500;

/// Throws InseparableError when f is not squarefree.
GaloisCertificate galois_certificate(const IntPoly &f, int sample_budget = kDefaultGaloisBudget);

struct CurveOptions {
    bool override_hypotheses = false;
    std::uint64_t factor_budget = kDefaultFactorBudget;
    int galois_budget = kDefaultGaloisBudget;
};

/// a * ell^b with ell not dividing a.
struct FactoredDegree {
    mpz_class a;
    std::int64_t b = 0;
};

FactoredDegree split_ell_part(const mpz_class &n, int ell);

struct DegreeReport {
    /// |Gal(f) cap A_r| = r!/2.
    mpz_class alt_order;
    std::int64_t su_exponent = 0;
    ReducedUnitGroup u_red;
    KappaT kappa;
    bool assume_d_equals_u = false;
    FactoredDegree degree;
    std::optional<FactoredDegree> reference;
    std::optional<std::string> reference_u;
};

struct CurveReport {
    int ell = 0;
    IntPoly poly;
    int epsilon = 0;
    mpz_class disc;
    SimplePrimeResult simple_prime;
    GaloisCertificate galois;
    bool hypotheses_verified = false;
    bool overridden = false;
    std::optional<DegreeReport> degree;
};

/// Hypothesis checks only. Throws ArgumentError unless ell is an odd prime, r >= 4 and ell does not divide r.
CurveReport check_curve(int ell, const IntPoly &f, const CurveOptions &opts = {});

/// check_curve plus the degree assembly; throws HypothesisError when the
/// hypotheses are not verified and not overridden.
CurveReport division_degree_report(int ell, const IntPoly &f, const CurveOptions &opts = {});

void to_json(nlohmann::json &j, const GaloisCertificate &g);
void to_json(nlohmann::json &j, const CurveReport &rep);

} // namespace suptor
