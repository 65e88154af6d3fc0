#ifndef FALSETHETA_SERIES_ORACLE_HPP
#define FALSETHETA_SERIES_ORACLE_HPP

#include <utility>
#include <vector>

#include "falsetheta/common.hpp"

namespace falsetheta::oracle {

// Parameters (j, N, n) of a single Fourier coefficient, with the derived
// index g = n + j^2/4N - 1/24.  Construction checks 1 <= j <= N-1, N >= 2,
// n >= 0.  The evaluator additionally rejects N of the form 6 m^2.
struct CoefficientParams {
    long long j;
    long long N;
    long long n;
    Rational g;

    CoefficientParams(long long j_, long long N_, long long n_);
};

// true when sqrt(N/6) is an integer, i.e. N = 6 m^2
bool excluded_modulus(long long N);

// Exact coefficient a_{j,N}(n) of the q-series expansion
//   F_{j,N}/eta = q^{j^2/4N - 1/24} sum_{n>=0} a_{j,N}(n) q^n.
// Expanding the theta series (m = j + 2Nt) against 1/eta's partition
// generating series gives the finite convolution
//   a_{j,N}(n) = sum_{t : jt + Nt^2 <= n} sgn(j + 2Nt) p(n - jt - Nt^2),
// which this routine evaluates in exact integer arithmetic.
BigInt coefficient_exact(const CoefficientParams& params);

// table[n] = a_{j,N}(n) for n in [0, n_max], one pass over the shared
// partition memo.
std::vector<BigInt> coefficient_table(long long j, long long N, long long n_max);

// All terms sgn(m) q^{m^2/4N} of the theta series with m == j (mod 2N) and
// exponent m^2/4N <= cap, as (exponent, coefficient) sorted by exponent.
// Terms that cancel (classes j == 0 or N mod 2N) are dropped.
std::vector<std::pair<Rational, int>> false_theta_truncation(long long j, long long N,
                                                             const Rational& cap);

}  // namespace falsetheta::oracle

#endif
