#ifndef FALSETHETA_RADEMACHER_HPP
#define FALSETHETA_RADEMACHER_HPP

#include <vector>

#include "falsetheta/common.hpp"
#include "falsetheta/series_oracle.hpp"

namespace falsetheta::rademacher {

struct QuadConfig {
    int order = 32;  // Gauss-Legendre order per panel
    int panels = 8;  // panels per smooth segment
};

struct ConvergenceRow {
    long long truncation;  // J
    double value_real;
    double value_imag;
    BigInt oracle;
    double abs_error;  // |value_real - oracle|
};

// Inner integral of the exact formula for one (k, kappa, r):
//   PV int_{-A}^{A} sqrt(1/24 - N x^2)
//        cot(pi(-x/k + kappa/k + r/2Nk)) I_1(4 pi sqrt(g)/k sqrt(1/24 - N x^2)) dx,
// A = sqrt(1/24N).  The cotangent has a simple pole at x = r/2N inside the
// range exactly when kappa = 0 and 6 r^2 < N; those cases go through the
// principal-value integrator, all others through plain smooth quadrature.
// Requires n >= 1 and N not of the form 6 m^2 (pole on the boundary).
double term_integral(long long k, long long kappa, long long r,
                     const oracle::CoefficientParams& params, const QuadConfig& quad);

// Contribution of a single modulus k to the truncated sum, already divided
// by k^2:  sum_{r=1}^{N-1} sum_{kappa=0}^{k-1} K_{k,j,N}(n,r,kappa)/k^2 * I(...).
Complex modulus_term(long long k, const oracle::CoefficientParams& params,
                     const QuadConfig& quad);

// Per-k contributions for k = 1..J, evaluated in parallel and returned in
// index order so every reduction over them is deterministic.
std::vector<Complex> modulus_terms(const oracle::CoefficientParams& params, long long J,
                                   const QuadConfig& quad, int threads = 1);

// Truncated exact formula
//   S_J = -(2 pi i / sqrt(g)) sum_{k=1}^{J} modulus_term(k).
// The real part approximates a_{j,N}(n); the imaginary part is a numerical
// residue and is reported, not discarded.
Complex partial_sum(const oracle::CoefficientParams& params, long long J,
                    const QuadConfig& quad, int threads = 1);

// One row per requested truncation depth (ascending), sharing the per-k
// terms across rows; oracle values come from the exact q-series expansion.
std::vector<ConvergenceRow> convergence_table(const oracle::CoefficientParams& params,
                                              const std::vector<long long>& J_list,
                                              const QuadConfig& quad, int threads = 1);

}  // namespace falsetheta::rademacher

#endif
