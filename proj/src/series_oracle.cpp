#include "falsetheta/series_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "falsetheta/arith.hpp"

namespace falsetheta::oracle {

CoefficientParams::CoefficientParams(long long j_, long long N_, long long n_)
    : j(j_), N(N_), n(n_) {
    if (N < 2) throw std::domain_error("CoefficientParams: N must be >= 2");
    if (j < 1 || j > N - 1) throw std::domain_error("CoefficientParams: j must lie in [1, N-1]");
    if (n < 0) throw std::domain_error("CoefficientParams: n must be >= 0");
    g = Rational(static_cast<long>(n)) + make_rational(j * j, 4 * N) - make_rational(1, 24);
}

bool excluded_modulus(long long N) {
    if (N < 6 || N % 6 != 0) return false;
    long long q = N / 6;
    long long m = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(q))));
    for (long long c = std::max<long long>(0, m - 1); c <= m + 1; ++c)
        if (c * c == q) return true;
    return false;
}

BigInt coefficient_exact(const CoefficientParams& params) {
    long long j = params.j, N = params.N, n = params.n;
    BigInt total(0);
    long long span = 2 + static_cast<long long>(std::sqrt(static_cast<double>(n) / N));
    for (long long t = -span; t <= span; ++t) {
        long long shift = j * t + N * t * t;
        if (shift > n) continue;
        long long m = j + 2 * N * t;
        if (m == 0) continue;
        if (m > 0)
            total += arith::partition(n - shift);
        else
            total -= arith::partition(n - shift);
    }
    return total;
}

std::vector<BigInt> coefficient_table(long long j, long long N, long long n_max) {
    if (n_max < 0) throw std::domain_error("coefficient_table: n_max must be >= 0");
    arith::partition(n_max);  // grow the memo once
    std::vector<BigInt> table;
    table.reserve(n_max + 1);
    for (long long n = 0; n <= n_max; ++n)
        table.push_back(coefficient_exact(CoefficientParams(j, N, n)));
    return table;
}

std::vector<std::pair<Rational, int>> false_theta_truncation(long long j, long long N,
                                                             const Rational& cap) {
    if (N < 2) throw std::domain_error("false_theta_truncation: N must be >= 2");
    std::vector<std::pair<Rational, int>> out;
    if (cap < 0) return out;
    // m = j + 2Nt with m^2 <= 4N cap
    long long m_bound = 2 + static_cast<long long>(std::sqrt(4.0 * N * cap.get_d()));
    long long t_lo = -(m_bound + std::llabs(j)) / (2 * N) - 1;
    long long t_hi = (m_bound + std::llabs(j)) / (2 * N) + 1;
    std::map<Rational, int> terms;
    for (long long t = t_lo; t <= t_hi; ++t) {
        long long m = j + 2 * N * t;
        if (m == 0) continue;
        Rational expnt = make_rational(m * m, 4 * N);
        if (expnt > cap) continue;
        terms[expnt] += (m > 0) ? 1 : -1;
    }
    for (const auto& [expnt, coeff] : terms)
        if (coeff != 0) out.emplace_back(expnt, coeff);
    return out;
}

}  // namespace falsetheta::oracle
