#include "falsetheta/multipliers.hpp"

#include <cmath>
#include <stdexcept>

#include "falsetheta/arith.hpp"
#include "falsetheta/gauss.hpp"

namespace falsetheta::multipliers {

using arith::dedekind_sum;
using arith::kronecker;
using arith::neg_mod_inverse;

SL2Matrix::SL2Matrix(long long a_, long long b_, long long c_, long long d_)
    : a(a_), b(b_), c(c_), d(d_) {
    __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
    if (det != 1) throw std::invalid_argument("SL2Matrix: determinant must be 1");
}

SL2Matrix matrix_hk(long long h, long long k) {
    if (k < 1 || h < 0 || h >= k) throw std::domain_error("matrix_hk: need 0 <= h < k");
    long long hp = neg_mod_inverse(h, k);
    return SL2Matrix(hp, -(h * hp + 1) / k, k, -h);
}

SL2Matrix matrix_inverse(const SL2Matrix& m) {
    return SL2Matrix(m.d, -m.b, -m.c, m.a);
}

namespace {

long long mod24(__int128 v) {
    long long r = static_cast<long long>(v % 24);
    return r < 0 ? r + 24 : r;
}

}  // namespace

Complex eta_multiplier_dedekind(const SL2Matrix& m) {
    if (m.c <= 0) throw std::domain_error("eta_multiplier_dedekind: requires c > 0");
    // pi i ((a+d)/12c - 1/4 + s) = 2 pi i ((a+d)/24c - 1/8 + s/2)
    Rational e = make_rational(m.a + m.d, 24 * m.c) - make_rational(1, 8) +
                 dedekind_sum(-m.d, m.c) / 2;
    return unit_phase(e);
}

Complex eta_multiplier_closed(const SL2Matrix& m) {
    __int128 a = m.a, b = m.b, c = m.c, d = m.d;
    if (m.c % 2 != 0) {
        long long n = mod24((a + d) * c - b * d * (c * c - 1) - 3 * c);
        return static_cast<double>(kronecker(m.d, std::llabs(m.c))) * unit_phase(n, 24);
    }
    // even c; c = 0 implies d = +-1, where the Kronecker symbol (0|+-1) is 1
    long long n = mod24(a * c * (1 - d * d) + d * (b - c + 3) - 3);
    return static_cast<double>(kronecker(m.c, m.d)) * unit_phase(n, 24);
}

Complex psi_multiplier(long long j, long long r, long long N, const SL2Matrix& m) {
    if (N < 2 || j < 1 || j > N - 1 || r < 1 || r > N - 1)
        throw std::out_of_range("psi_multiplier: j, r must lie in [1, N-1]");
    if (m.c == 0) {
        if (j != r) return {0.0, 0.0};
        Complex sign_factor = (m.d > 0) ? Complex(1.0, 0.0) : Complex(0.0, -1.0);
        return unit_phase(m.a * m.b * j * j, 4 * N) * sign_factor;
    }
    long long abs_c = std::llabs(m.c);
    Complex prefactor = std::polar(1.0, -3.0 * kPi / 4.0 * (m.c > 0 ? 1.0 : -1.0)) *
                        std::sqrt(2.0 / (static_cast<double>(N) * abs_c));
    Complex sum(0.0, 0.0);
    for (long long l = 0; l < abs_c; ++l) {
        long long t = 2 * N * l + j;
        __int128 num = static_cast<__int128>(m.a) * t * t + static_cast<__int128>(m.d) * r * r;
        sum += unit_phase(num, static_cast<__int128>(4) * N * m.c) * sin_pi_frac(r * t, N * abs_c);
    }
    return prefactor * sum;
}

Complex chi_multiplier(long long j, long long r, long long N, const SL2Matrix& m) {
    Complex nu = (m.c > 0) ? eta_multiplier_dedekind(m) : eta_multiplier_closed(m);
    return nu * psi_multiplier(j, r, N, matrix_inverse(m));
}

Complex chi_via_gauss_odd(long long h, long long k, long long j, long long r,
                          long long N) {
    if (k < 1 || k % 2 == 0) throw std::domain_error("chi_via_gauss_odd: k must be odd");
    if (arith::gcd(h, k) != 1) throw std::domain_error("chi_via_gauss_odd: gcd(h, k) != 1");
    if (N < 2 || j < 1 || j > N - 1 || r < 1 || r > N - 1)
        throw std::out_of_range("chi_via_gauss_odd: j, r must lie in [1, N-1]");
    long long hp = neg_mod_inverse(h, k);
    // (1/24)((h'-h)k - ((hh'+1)/k) h (k^2-1) - 3k) + 3/8 as a 24th root
    __int128 n24 = (static_cast<__int128>(hp - h) * k -
                    static_cast<__int128>((h * hp + 1) / k) * h * (static_cast<__int128>(k) * k - 1) -
                    3 * static_cast<__int128>(k)) %
                   24;
    Complex base = unit_phase(n24 + 9, static_cast<__int128>(24));
    double pref = kronecker(-h, k) / std::sqrt(2.0 * N * k);
    Complex plus = unit_phase(h * j * j - hp * r * r + 2 * r * j, 4 * N * k) *
                   gauss::gauss_sum_odd_closed(h, N, j, r, k, +1);
    Complex minus = unit_phase(h * j * j - hp * r * r - 2 * r * j, 4 * N * k) *
                    gauss::gauss_sum_odd_closed(h, N, j, r, k, -1);
    return pref * base * (Complex(0.0, -1.0) * plus + Complex(0.0, 1.0) * minus);
}

}  // namespace falsetheta::multipliers
