#ifndef FALSETHETA_COMMON_HPP
#define FALSETHETA_COMMON_HPP

#include <complex>
#include <cstdint>
#include <gmpxx.h>

namespace falsetheta {

using Complex = std::complex<double>;
using BigInt = mpz_class;

// Exact rational; gmp keeps it canonical (positive denominator, reduced).
using Rational = mpq_class;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// num/den as an exact rational, no overflow in the reduction.
Rational make_rational(long long num, long long den);

// e^{2 pi i num/den}. The fraction is reduced mod 1 exactly before any
// floating-point operation; phases stay accurate for large denominators.
Complex unit_phase(long long num, long long den);
Complex unit_phase(__int128 num, __int128 den);
Complex unit_phase(const Rational& x);

// sin(pi * num/den), num reduced mod 2*den exactly first.
double sin_pi_frac(long long num, long long den);

}  // namespace falsetheta

#endif
