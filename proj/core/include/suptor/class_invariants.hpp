#pragma once

// n'(j), c_{l,r}, the relative class number h^- of Q(zeta_l), and the
// Demjanenko matrix with its determinant.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace suptor {

/// floor(r (ell - j) / ell).
std::int64_t n_of_j(int ell, int r, int j);
/// floor((ell - j) r / ell) - (r - 1) / 2, half-integral for even r.
mpq_class n_prime(int ell, int r, int j);

struct CLr {
    /// Multiplicative order of r mod ell.
    std::int64_t r_ell = 0;
    mpz_class c;
};

CLr c_lr(int ell, int r);

constexpr int kHMinusBound = 67;

/// Relative class number via the generalized Bernoulli product; ell <= bound.
mpz_class h_minus(int ell, int bound = kHMinusBound);

struct DemjanenkoReport {
    int ell = 0;
    int r = 0;
    std::vector<int> reps;
    std::vector<std::vector<mpq_class>> matrix;
    mpq_class det;
    /// det of the integral matrix 2 [n'].
    mpz_class det2;
    std::int64_t r_ell = 0;
    mpz_class c_lr;
    mpz_class h_minus;
    /// h^- c / (2 ell).
    mpq_class expected_magnitude;
    bool identity_holds = false;
    int sign = 0;
    int kappa_bound = 0;
    int t = 0;
};

/// reps defaults to {1, ..., (ell-1)/2}; throws ArgumentError on a bad set of representatives.
DemjanenkoReport demjanenko_det(int ell, int r, std::optional<std::vector<int>> reps = std::nullopt);

struct KappaT {
    int kappa_bound = 0;
    int t = 0;
};

KappaT kappa_and_t(int ell, int r);

void to_json(nlohmann::json &j, const DemjanenkoReport &rep);

} // namespace suptor
