#ifndef FALSETHETA_ARITH_HPP
#define FALSETHETA_ARITH_HPP

#include "falsetheta/common.hpp"

namespace falsetheta::arith {

// gcd(|a|, |b|); gcd(0, 0) = 0.
long long gcd(long long a, long long b);

// h' in [0, k) with h*h' == -1 (mod k).  Throws std::domain_error unless
// gcd(h, k) = 1.  k = 1 returns 0.
long long neg_mod_inverse(long long h, long long k);

// Same congruence lifted to modulus x*k; the result reduces to
// neg_mod_inverse(h, k) mod k.
long long neg_mod_inverse_lifted(long long h, long long k, long long x);

// Full Kronecker symbol (a|n), defined for all integers n including 0,
// negative and even values.
int kronecker(long long a, long long n);

// Dedekind sum s(h, k) = sum_{r=1}^{k-1} (r/k)((hr/k) - floor(hr/k) - 1/2),
// exact.  Evaluated through the reciprocity law, so cost is O(log k) rational
// operations rather than O(k).  Requires gcd(h, k) = 1; h may be any integer
// (the sum is k-periodic in h).
Rational dedekind_sum(long long h, long long k);

// 1 for m == 1 (mod 4), i for m == 3 (mod 4).  Throws on even m.
Complex epsilon_m(long long m);

// Partition number p(n) by the pentagonal recurrence.  The memo table is
// thread_local, so concurrent callers never share mutable state.
BigInt partition(long long n);

}  // namespace falsetheta::arith

#endif
