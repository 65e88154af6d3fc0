#ifndef FALSETHETA_MULTIPLIERS_HPP
#define FALSETHETA_MULTIPLIERS_HPP

#include "falsetheta/common.hpp"

namespace falsetheta::multipliers {

// Integer matrix (a b; c d) with determinant 1, acting by Moebius maps.
struct SL2Matrix {
    long long a, b, c, d;

    SL2Matrix(long long a_, long long b_, long long c_, long long d_);
};

// M_{h,k} = (h', -(h h'+1)/k; k, -h) with h h' == -1 (mod k).
// Requires 0 <= h < k and gcd(h, k) = 1.
SL2Matrix matrix_hk(long long h, long long k);

SL2Matrix matrix_inverse(const SL2Matrix& m);

// Eta multiplier through the Dedekind-sum formula
//   exp(pi i ((a+d)/12c - 1/4 + s(-d, c))), valid for c > 0.
// The exponent is assembled in exact rational arithmetic.
Complex eta_multiplier_dedekind(const SL2Matrix& m);

// Eta multiplier through the Kronecker-symbol formula, odd-c and even-c
// branches.  Covers every determinant-1 matrix (c = 0 forces d = +-1).
Complex eta_multiplier_closed(const SL2Matrix& m);

// False theta multiplier psi_{j,r}(N, M):
//   c = 0: e^{2 pi i a b j^2/4N} e^{-pi i (1 - sgn d)/4} delta_{j,r}
//   c != 0: e^{-3 pi i sgn(c)/4} sqrt(2/(N|c|))
//           * sum_{l=0}^{|c|-1} e^{(pi i/2Nc)(a(2Nl+j)^2 + d r^2)}
//                              sin(pi r (2Nl+j)/(N|c|))
// Requires 1 <= j, r <= N-1.
Complex psi_multiplier(long long j, long long r, long long N, const SL2Matrix& m);

// Combined multiplier chi_{j,r}(N, M) = nu_eta(M) * psi_{j,r}(N, M^{-1}).
Complex chi_multiplier(long long j, long long r, long long N, const SL2Matrix& m);

// chi_{j,r}(N, M_{h,k}) for odd k, rewritten through the two Gauss sums
// G(hN, hj +- r, k) with a Kronecker prefactor and 24k-th root phases.
// Agrees with chi_multiplier; exercised as an identity check.
Complex chi_via_gauss_odd(long long h, long long k, long long j, long long r,
                          long long N);

}  // namespace falsetheta::multipliers

#endif
