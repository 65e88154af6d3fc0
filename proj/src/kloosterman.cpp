#include "falsetheta/kloosterman.hpp"

#include <cmath>
#include <stdexcept>

#include "falsetheta/arith.hpp"
#include "falsetheta/multipliers.hpp"
#include "parallel.hpp"

namespace falsetheta::kloosterman {

using arith::neg_mod_inverse;
using multipliers::chi_multiplier;
using multipliers::matrix_hk;

namespace {

void validate(long long k, long long j, long long N, long long n, long long r) {
    if (k < 1) throw std::domain_error("kloosterman: k must be positive");
    if (N < 2) throw std::domain_error("kloosterman: N must be >= 2");
    if (j < 1 || j > N - 1 || r < 1 || r > N - 1)
        throw std::domain_error("kloosterman: j, r must lie in [1, N-1]");
    if (n < 0) throw std::domain_error("kloosterman: n must be >= 0");
}

// exponent numerator over the denominator 24kN:
//   ((24 N kappa^2 + 24 kappa r - 1) N + 6 r^2) h' - ((24 n - 1) N + 6 j^2) h
__int128 phase_numerator(long long N, long long n, long long j, long long r,
                         long long kappa, long long h, long long hp) {
    __int128 hp_coeff =
        (static_cast<__int128>(24) * N * kappa * kappa + 24 * kappa * r - 1) * N +
        static_cast<__int128>(6) * r * r;
    __int128 h_coeff = (static_cast<__int128>(24) * n - 1) * N + static_cast<__int128>(6) * j * j;
    return hp_coeff * hp - h_coeff * h;
}

}  // namespace

Complex kloosterman_sum(const KloostermanKey& key) {
    validate(key.k, key.j, key.N, key.n, key.r);
    long long k = key.k;
    long long kappa = key.kappa % k;
    if (kappa < 0) kappa += k;
    __int128 den = static_cast<__int128>(24) * k * key.N;
    Complex total(0.0, 0.0);
    for (long long h = 0; h < k; ++h) {
        if (arith::gcd(h, k) != 1) continue;
        long long hp = neg_mod_inverse(h, k);
        total += chi_multiplier(key.j, key.r, key.N, matrix_hk(h, k)) *
                 unit_phase(phase_numerator(key.N, key.n, key.j, key.r, kappa, h, hp), den);
    }
    return total;
}

std::vector<Complex> kloosterman_row(long long k, long long j, long long N,
                                     long long n, long long r) {
    validate(k, j, N, n, r);
    std::vector<long long> hs, hps;
    std::vector<Complex> chis;
    for (long long h = 0; h < k; ++h) {
        if (arith::gcd(h, k) != 1) continue;
        hs.push_back(h);
        hps.push_back(neg_mod_inverse(h, k));
        chis.push_back(chi_multiplier(j, r, N, matrix_hk(h, k)));
    }
    __int128 den = static_cast<__int128>(24) * k * N;
    std::vector<Complex> row(k, Complex(0.0, 0.0));
    for (long long kappa = 0; kappa < k; ++kappa) {
        Complex total(0.0, 0.0);
        for (std::size_t i = 0; i < hs.size(); ++i)
            total += chis[i] * unit_phase(phase_numerator(N, n, j, r, kappa, hs[i], hps[i]), den);
        row[kappa] = total;
    }
    return row;
}

BoundScanReport bound_ratio_scan(long long j, long long N,
                                 const std::vector<long long>& n_set,
                                 long long k_max, double eps, int threads) {
    if (k_max < 1) throw std::domain_error("bound_ratio_scan: k_max must be >= 1");
    if (eps <= 0) throw std::domain_error("bound_ratio_scan: eps must be positive");
    for (long long n : n_set)
        if (n < 1) throw std::domain_error("bound_ratio_scan: n values must be >= 1");

    BoundScanReport report;
    report.eps = eps;
    report.per_k.resize(k_max);
    struct ArgMax {
        double value = -1.0;
        long long n = 0, r = 0, kappa = 0;
    };
    std::vector<ArgMax> arg(k_max);

    detail::parallel_index_for(1, k_max + 1, threads, [&](long long k) {
        std::vector<long long> hs, hps;
        for (long long h = 0; h < k; ++h) {
            if (arith::gcd(h, k) != 1) continue;
            hs.push_back(h);
            hps.push_back(neg_mod_inverse(h, k));
        }
        std::size_t m = hs.size();
        __int128 den = static_cast<__int128>(24) * k * N;
        // n-dependent factors, shared across (r, kappa)
        std::vector<Complex> nphase(m * n_set.size());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t q = 0; q < n_set.size(); ++q) {
                __int128 h_coeff = (static_cast<__int128>(24) * n_set[q] - 1) * N +
                                   static_cast<__int128>(6) * j * j;
                nphase[i * n_set.size() + q] = unit_phase(-h_coeff * hs[i], den);
            }
        ArgMax best;
        std::vector<Complex> twisted(m);
        for (long long r = 1; r <= N - 1; ++r) {
            std::vector<Complex> chis(m);
            for (std::size_t i = 0; i < m; ++i)
                chis[i] = chi_multiplier(j, r, N, matrix_hk(hs[i], k));
            for (long long kappa = 0; kappa < k; ++kappa) {
                for (std::size_t i = 0; i < m; ++i) {
                    __int128 hp_coeff =
                        (static_cast<__int128>(24) * N * kappa * kappa + 24 * kappa * r - 1) * N +
                        static_cast<__int128>(6) * r * r;
                    twisted[i] = chis[i] * unit_phase(hp_coeff * hps[i], den);
                }
                for (std::size_t q = 0; q < n_set.size(); ++q) {
                    Complex total(0.0, 0.0);
                    for (std::size_t i = 0; i < m; ++i)
                        total += twisted[i] * nphase[i * n_set.size() + q];
                    double value = std::abs(total) / static_cast<double>(n_set[q]);
                    if (value > best.value) best = {value, n_set[q], r, kappa};
                }
            }
        }
        arg[k - 1] = best;
        report.per_k[k - 1] = {k, best.value, best.value / std::pow(static_cast<double>(k), 0.5 + eps)};
    });

    for (long long k = 1; k <= k_max; ++k) {
        const auto& entry = report.per_k[k - 1];
        if (entry.ratio > report.max_ratio) {
            report.max_ratio = entry.ratio;
            report.argmax_k = k;
            report.argmax_n = arg[k - 1].n;
            report.argmax_r = arg[k - 1].r;
            report.argmax_kappa = arg[k - 1].kappa;
        }
    }
    return report;
}

}  // namespace falsetheta::kloosterman
