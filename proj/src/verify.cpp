#include "falsetheta/verify.hpp"

#include <cmath>

#include "falsetheta/arith.hpp"
#include "falsetheta/gauss.hpp"
#include "falsetheta/kloosterman.hpp"
#include "falsetheta/multipliers.hpp"
#include "falsetheta/special_functions.hpp"

namespace falsetheta::verify {

namespace {

using arith::gcd;

double eta_formula_agreement(long long k_max) {
    double worst = 0.0;
    for (long long k = 1; k <= k_max; ++k)
        for (long long h = 0; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            auto m = multipliers::matrix_hk(h, k);
            worst = std::max(worst, std::abs(multipliers::eta_multiplier_dedekind(m) -
                                             multipliers::eta_multiplier_closed(m)));
        }
    return worst;
}

double gauss_odd_agreement(long long k_max, long long N_max) {
    double worst = 0.0;
    for (long long k = 1; k <= k_max; k += 2)
        for (long long N = 1; N <= N_max; ++N)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, k) != 1) continue;
                for (long long j = 0; j < 2 * N; ++j)
                    for (long long r = 0; r < N; ++r)
                        for (int sign : {+1, -1}) {
                            worst = std::max(
                                worst,
                                std::abs(gauss::gauss_sum_odd_closed(h, N, j, r, k, sign) -
                                         gauss::gauss_sum_direct(h * N, h * j + sign * r, k)));
                        }
            }
    return worst;
}

double gauss_even_agreement(long long k_max, long long N_max) {
    double worst = 0.0;
    for (long long k = 2; k <= k_max; k += 2)
        for (long long N = 1; N <= N_max; ++N)
            for (long long h = 1; h < k; h += 2) {
                if (gcd(h, k) != 1) continue;
                for (long long b = -2 * k; b <= 2 * k; ++b)
                    worst = std::max(worst, std::abs(gauss::gauss_sum_even_closed(h, N, b, k) -
                                                     gauss::gauss_sum_direct(h * N, b, k)));
            }
    return worst;
}

double gauss_multiplicativity(long long cd_max) {
    double worst = 0.0;
    for (long long c = 1; c <= cd_max; ++c)
        for (long long d = 1; d <= cd_max; ++d) {
            if (gcd(c, d) != 1) continue;
            for (long long a = 1; a <= 10; ++a) {
                long long step = std::max<long long>(1, c * d / 3);
                for (long long b = 0; b < c * d; b += step)
                    worst = std::max(worst, std::abs(gauss::gauss_sum_direct(a, b, c * d) -
                                                     gauss::gauss_sum_direct(a * c, b, d) *
                                                         gauss::gauss_sum_direct(a * d, b, c)));
            }
        }
    return worst;
}

double sin_sum_identity(long long k_max, long long N_max) {
    double worst = 0.0;
    for (long long k = 1; k <= k_max; ++k)
        for (long long N = 2; N <= N_max; ++N)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, k) != 1) continue;
                for (long long j = 1; j <= N - 1; ++j)
                    for (long long r = 1; r <= N - 1; ++r)
                        worst = std::max(worst, gauss::sin_sum_identity_check(h, k, j, r, N));
            }
    return worst;
}

double chi_gauss_odd_agreement(long long k_max, const std::vector<long long>& Ns) {
    double worst = 0.0;
    for (long long k = 1; k <= k_max; k += 2)
        for (long long N : Ns)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, k) != 1) continue;
                for (long long j = 1; j <= N - 1; ++j)
                    for (long long r = 1; r <= N - 1; ++r)
                        worst = std::max(
                            worst,
                            std::abs(multipliers::chi_via_gauss_odd(h, k, j, r, N) -
                                     multipliers::chi_multiplier(j, r, N, multipliers::matrix_hk(h, k))));
            }
    return worst;
}

double kloosterman_periodicity(long long k_max) {
    double worst = 0.0;
    for (long long k = 1; k <= k_max; ++k)
        for (long long N : {3LL, 8LL})
            for (long long n : {1LL, 5LL})
                for (long long j : {1LL, N - 1})
                    for (long long r = 1; r <= N - 1; r += 2)
                        for (long long kappa : {0LL, 1LL, k - 1}) {
                            kloosterman::KloostermanKey base{k, j, N, n, r, kappa};
                            kloosterman::KloostermanKey shifted{k, j, N, n, r, kappa + k};
                            worst = std::max(worst, std::abs(kloosterman::kloosterman_sum(base) -
                                                             kloosterman::kloosterman_sum(shifted)));
                        }
    return worst;
}

double pv_checks() {
    double worst = 0.0;
    auto inv = [](double x) { return 1.0 / x; };
    worst = std::max(worst, std::abs(special::integrate_pv(inv, -1.0, 1.0, 0.0, 8, 32)));
    worst = std::max(worst,
                     std::abs(special::integrate_pv(inv, -1.0, 2.0, 0.0, 8, 32) - std::log(2.0)));
    auto cot = [](double x) { return 1.0 / std::tan(kPi * x); };
    worst = std::max(worst, std::abs(special::integrate_pv(cot, -0.3, 0.3, 0.0, 8, 32)));
    return worst;
}

}  // namespace

std::vector<SuiteResult> run_identity_suites(Grid grid) {
    bool large = (grid == Grid::Large);
    std::vector<SuiteResult> results;
    auto add = [&](const std::string& name, double residual, double tol) {
        results.push_back({name, residual, tol, residual <= tol});
    };
    add("eta multiplier, Dedekind vs Kronecker formula",
        eta_formula_agreement(large ? 45 : 30), 1e-12);
    add("Gauss sum, odd closed form vs direct", gauss_odd_agreement(large ? 31 : 25, 10), 1e-9);
    add("Gauss sum, even closed form vs direct", gauss_even_agreement(large ? 32 : 24, 8), 1e-9);
    add("Gauss sum multiplicativity", gauss_multiplicativity(large ? 36 : 30), 1e-9);
    add("twisted sine sum vs Gauss-sum pair", sin_sum_identity(large ? 24 : 20, 8), 1e-9);
    add("chi via Gauss sums vs chi, odd k",
        chi_gauss_odd_agreement(large ? 25 : 21, {3, 4, 5, 8, 10}), 1e-9);
    add("Kloosterman kappa-periodicity", kloosterman_periodicity(large ? 52 : 40), 1e-12);
    add("principal-value integrator", pv_checks(), 1e-10);
    return results;
}

}  // namespace falsetheta::verify
