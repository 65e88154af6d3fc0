#include "falsetheta/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace falsetheta::arith {

long long gcd(long long a, long long b) {
    return std::gcd(a, b);
}

namespace {

// extended euclid: returns g and x with a*x == g (mod m), a in [0, m)
long long mod_inverse_checked(long long a, long long m, const char* who) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error(std::string(who) + ": arguments are not coprime");
    if (t < 0) t += m;
    return t;
}

}  // namespace

long long neg_mod_inverse(long long h, long long k) {
    if (k < 1) throw std::domain_error("neg_mod_inverse: modulus must be positive");
    if (k == 1) return 0;
    long long a = h % k;
    if (a < 0) a += k;
    long long inv = mod_inverse_checked(a, k, "neg_mod_inverse");
    return (k - inv) % k;
}

long long neg_mod_inverse_lifted(long long h, long long k, long long x) {
    if (k < 1 || x < 1) throw std::domain_error("neg_mod_inverse_lifted: modulus must be positive");
    return neg_mod_inverse(h, x * k);
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -1;
    }
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    if (e > 0) {
        if (a % 2 == 0) return 0;
        long long a8 = a % 8;
        if (a8 < 0) a8 += 8;
        if ((e % 2 == 1) && (a8 == 3 || a8 == 5)) sign = -sign;
    }
    // Jacobi symbol (a|n), n odd positive
    a %= n;
    if (a < 0) a += n;
    int result = sign;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

Rational dedekind_sum(long long h, long long k) {
    if (k < 1) throw std::domain_error("dedekind_sum: modulus must be positive");
    h %= k;
    if (h < 0) h += k;
    if (std::gcd(h, k) != 1) throw std::domain_error("dedekind_sum: gcd(h, k) != 1");
    // s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk), with s(k,h) = s(k mod h, h)
    Rational acc(0);
    int sign = 1;
    while (h > 0) {
        BigInt hh(static_cast<long>(h)), kk(static_cast<long>(k));
        Rational term(hh * hh + kk * kk + 1, 12 * hh * kk);
        term.canonicalize();
        term -= make_rational(1, 4);
        if (sign > 0)
            acc += term;
        else
            acc -= term;
        sign = -sign;
        long long t = k % h;
        k = h;
        h = t;
    }
    return acc;
}

Complex epsilon_m(long long m) {
    long long m4 = m % 4;
    if (m4 < 0) m4 += 4;
    if (m4 == 1) return {1.0, 0.0};
    if (m4 == 3) return {0.0, 1.0};
    throw std::domain_error("epsilon_m: argument must be odd");
}

BigInt partition(long long n) {
    if (n < 0) throw std::domain_error("partition: negative argument");
    thread_local std::vector<BigInt> memo{BigInt(1)};
    while (static_cast<long long>(memo.size()) <= n) {
        long long m = static_cast<long long>(memo.size());
        BigInt s(0);
        for (long long q = 1;; ++q) {
            long long g1 = q * (3 * q - 1) / 2;
            long long g2 = q * (3 * q + 1) / 2;
            if (g1 > m && g2 > m) break;
            if (q % 2 == 1) {
                if (g1 <= m) s += memo[m - g1];
                if (g2 <= m) s += memo[m - g2];
            } else {
                if (g1 <= m) s -= memo[m - g1];
                if (g2 <= m) s -= memo[m - g2];
            }
        }
        memo.push_back(s);
    }
    return memo[n];
}

}  // namespace falsetheta::arith
