#ifndef FALSETHETA_GAUSS_HPP
#define FALSETHETA_GAUSS_HPP

#include "falsetheta/common.hpp"

namespace falsetheta::gauss {

// G(a, b, c) = sum_{s=0}^{c-1} e^{2 pi i (a s^2 + b s)/c} by direct summation.
// c >= 1; a >= 0 and b may be negative.
Complex gauss_sum_direct(long long a, long long b, long long c);

// G(h*N, h*j + sign*r, k) for odd k through the closed form: the gcd(N, k)
// factor is pulled out (the sum vanishes unless it divides the linear
// coefficient) and the coprime remainder is evaluated with the
// epsilon/Kronecker/quarter-inverse formula.  Throws on even k or
// gcd(h, k) != 1.
Complex gauss_sum_odd_closed(long long h, long long N, long long j, long long r,
                             long long k, int sign);

// G(h*N, b, k) for even k = 2^nu * mu, h odd: split multiplicatively into
// G(h*N*2^nu, b, mu) * G(h*N*mu, b, 2^nu) and evaluate each factor in closed
// form.  Throws on odd k, even h, or gcd(h, k) != 1.
Complex gauss_sum_even_closed(long long h, long long N, long long b, long long k);

// Residual |LHS - RHS| of the rewriting of the twisted sine sum
//   sum_{s=0}^{k-1} e^{-(pi i/2Nk)(-h(2Ns+j)^2 + h' r^2)} sin(pi r(2Ns+j)/Nk)
// as a (1/2i) combination of two generalized quadratic Gauss sums.
double sin_sum_identity_check(long long h, long long k, long long j, long long r,
                              long long N);

namespace detail {
// closed form for odd modulus c (any a >= 0); used by both public closed forms
Complex odd_modulus_closed(long long a, long long b, long long c);
// closed form for modulus 2^nu (a >= 1)
Complex pow2_closed(long long a, long long b, int nu);
// positive solution of 4 psi a == 1 (mod m), m odd, built from two negative
// modular inverses
long long quarter_inverse(long long a, long long m);
}  // namespace detail

}  // namespace falsetheta::gauss

#endif
