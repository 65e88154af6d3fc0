// Generalized quadratic Gauss sums.
//
// Two evaluation routes are kept deliberately independent:
//   * gauss_sum_direct sums the defining exponential term by term;
//   * the closed forms reduce G(a,b,c) by pulling gcd factors and then
//     applying the classical one-line evaluations for odd and 2-power
//     moduli.
// The closed forms are cross-checked against the direct sums on dense
// grids in the test suite, which pins down the branch conditions at the
// parity boundaries (in particular the 2-power factor for moduli whose
// quadratic coefficient is even).

#include "falsetheta/gauss.hpp"

#include <cmath>
#include <stdexcept>

#include "falsetheta/arith.hpp"

namespace falsetheta::gauss {

using arith::epsilon_m;
using arith::kronecker;
using arith::neg_mod_inverse;

Complex gauss_sum_direct(long long a, long long b, long long c) {
    if (c < 1) throw std::domain_error("gauss_sum_direct: modulus must be positive");
    if (a < 0) throw std::domain_error("gauss_sum_direct: quadratic coefficient must be >= 0");
    Complex total(0.0, 0.0);
    for (long long s = 0; s < c; ++s) {
        __int128 num = static_cast<__int128>(a) * s * s + static_cast<__int128>(b) * s;
        total += unit_phase(num, static_cast<__int128>(c));
    }
    return total;
}

namespace detail {

// positive solution of 4*psi*a == 1 (mod m), m odd; composed from two
// negative inverses so that psi = [4]'[a]' mod m
long long quarter_inverse(long long a, long long m) {
    if (m == 1) return 0;
    long long n4 = neg_mod_inverse(4, m);
    long long na = neg_mod_inverse(a % m, m);
    return static_cast<long long>((static_cast<__int128>(n4) * na) % m);
}

Complex odd_modulus_closed(long long a, long long b, long long c) {
    if (c == 1) return {1.0, 0.0};
    long long g = (a == 0) ? c : arith::gcd(a, c);
    if (b % g != 0) return {0.0, 0.0};
    long long a1 = a / g, b1 = b / g, c1 = c / g;
    if (c1 == 1) return {static_cast<double>(g), 0.0};
    long long psi = quarter_inverse(a1, c1);
    __int128 expo = -static_cast<__int128>(psi) * b1 % c1 * b1;
    Complex coprime = epsilon_m(c1) * std::sqrt(static_cast<double>(c1)) *
                      static_cast<double>(kronecker(a1, c1)) *
                      unit_phase(expo, static_cast<__int128>(c1));
    return static_cast<double>(g) * coprime;
}

Complex pow2_closed(long long a, long long b, int nu) {
    if (a < 1 || nu < 1) throw std::domain_error("pow2_closed: bad arguments");
    long long c = 1LL << nu;
    int alpha = 0;
    long long a_odd = a;
    while (a_odd % 2 == 0 && alpha < nu) {
        a_odd /= 2;
        ++alpha;
    }
    if (alpha >= nu) {
        // 2^nu divides a; plain geometric sum
        return (b % c == 0) ? Complex(static_cast<double>(c), 0.0) : Complex(0.0, 0.0);
    }
    long long g = 1LL << alpha;
    if (b % g != 0) return {0.0, 0.0};
    long long b1 = b / g;
    int m = nu - alpha;
    long long M = 1LL << m;
    if (m == 1) {
        // 1 + (-1)^{a_odd + b1}
        double v = ((a_odd + b1) % 2 == 0) ? 2.0 : 0.0;
        return {static_cast<double>(g) * v, 0.0};
    }
    if (b1 % 2 != 0) return {0.0, 0.0};
    long long half = b1 / 2;
    long long inv = (M - neg_mod_inverse(a_odd % M, M)) % M;  // a_odd^{-1} mod M
    __int128 expo = -static_cast<__int128>(inv) * (half % M) % M * (half % M);
    Complex val = std::sqrt(static_cast<double>(M)) * Complex(1.0, 1.0) *
                  std::conj(epsilon_m(a_odd)) * static_cast<double>(kronecker(M, a_odd)) *
                  unit_phase(expo, static_cast<__int128>(M));
    return static_cast<double>(g) * val;
}

}  // namespace detail

Complex gauss_sum_odd_closed(long long h, long long N, long long j, long long r,
                             long long k, int sign) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("gauss_sum_odd_closed: modulus must be odd");
    if (arith::gcd(h, k) != 1) throw std::domain_error("gauss_sum_odd_closed: gcd(h, k) != 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("gauss_sum_odd_closed: sign must be +-1");
    return detail::odd_modulus_closed(h * N, h * j + sign * r, k);
}

Complex gauss_sum_even_closed(long long h, long long N, long long b, long long k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("gauss_sum_even_closed: modulus must be even");
    if (h % 2 == 0) throw std::domain_error("gauss_sum_even_closed: h must be odd");
    if (arith::gcd(h, k) != 1) throw std::domain_error("gauss_sum_even_closed: gcd(h, k) != 1");
    int nu = 0;
    long long mu = k;
    while (mu % 2 == 0) {
        mu /= 2;
        ++nu;
    }
    return detail::odd_modulus_closed((h * N) << nu, b, mu) * detail::pow2_closed(h * N * mu, b, nu);
}

double sin_sum_identity_check(long long h, long long k, long long j, long long r,
                              long long N) {
    if (k < 1) throw std::domain_error("sin_sum_identity_check: modulus must be positive");
    if (arith::gcd(h, k) != 1) throw std::domain_error("sin_sum_identity_check: gcd(h, k) != 1");
    long long hp = neg_mod_inverse(h, k);
    Complex lhs(0.0, 0.0);
    for (long long s = 0; s < k; ++s) {
        long long m = 2 * N * s + j;
        __int128 num = static_cast<__int128>(h) * m * m - static_cast<__int128>(hp) * r * r;
        lhs += unit_phase(num, static_cast<__int128>(4) * N * k) *
               sin_pi_frac(r * m, N * k);
    }
    Complex gp = gauss_sum_direct(h * N, h * j + r, k);
    Complex gm = gauss_sum_direct(h * N, h * j - r, k);
    Complex rhs = (unit_phase(h * j * j - hp * r * r + 2 * r * j, 4 * N * k) * gp -
                   unit_phase(h * j * j - hp * r * r - 2 * r * j, 4 * N * k) * gm) /
                  Complex(0.0, 2.0);
    return std::abs(lhs - rhs);
}

}  // namespace falsetheta::gauss
