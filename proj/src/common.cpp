#include "falsetheta/common.hpp"

#include <cmath>
#include <stdexcept>

namespace falsetheta {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

Complex unit_phase(long long num, long long den) {
    return unit_phase(static_cast<__int128>(num), static_cast<__int128>(den));
}

Complex unit_phase(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("unit_phase with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    num %= den;
    if (num < 0) num += den;
    return std::polar(1.0, 2.0 * kPi * (static_cast<double>(num) / static_cast<double>(den)));
}

Complex unit_phase(const Rational& x) {
    // floor division gives the exact fractional part in [0, 1)
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational frac = x - Rational(fl);
    return std::polar(1.0, 2.0 * kPi * frac.get_d());
}

double sin_pi_frac(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("sin_pi_frac with zero denominator");
    if (den < 0) {
        den = -den;
        num = -num;
    }
    long long two_den = 2 * den;
    num %= two_den;
    if (num < 0) num += two_den;
    return std::sin(kPi * (static_cast<double>(num) / static_cast<double>(den)));
}

}  // namespace falsetheta
