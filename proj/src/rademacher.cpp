// Truncated Rademacher-type evaluation of the Fourier coefficients.
//
// For each modulus k the Kloosterman row over kappa is computed once per r
// (the multiplier values are shared across kappa) and paired with the
// cot/Bessel integrals.  The integrand vanishes like sqrt at both endpoints,
// and the only interior pole is at x = r/2N in the (kappa = 0, 6r^2 < N)
// cells; there the integral is taken in the principal-value sense.
//
// Summation order is fixed (k, then r, then kappa ascending) and per-k terms
// are reduced in index order even when they were produced by worker threads,
// so results are bit-stable for a given quadrature configuration.

#include "falsetheta/rademacher.hpp"

#include <cmath>
#include <stdexcept>

#include "falsetheta/kloosterman.hpp"
#include "falsetheta/special_functions.hpp"
#include "parallel.hpp"

namespace falsetheta::rademacher {

namespace {

void validate_for_formula(const oracle::CoefficientParams& params) {
    if (params.n < 1)
        throw std::domain_error("rademacher: the exact formula requires n >= 1");
    if (oracle::excluded_modulus(params.N))
        throw std::domain_error(
            "rademacher: N = 6 m^2 is excluded (sqrt(N/6) integer puts the pole on the "
            "integration boundary)");
}

}  // namespace

double term_integral(long long k, long long kappa, long long r,
                     const oracle::CoefficientParams& params, const QuadConfig& quad) {
    if (k < 1) throw std::domain_error("term_integral: k must be >= 1");
    if (kappa < 0 || kappa >= k) throw std::domain_error("term_integral: kappa must lie in [0, k)");
    if (r < 1 || r > params.N - 1)
        throw std::domain_error("term_integral: r must lie in [1, N-1]");
    if (params.n < 1) throw std::domain_error("term_integral: requires n >= 1");
    if (oracle::excluded_modulus(params.N))
        throw std::domain_error("term_integral: N = 6 m^2 excluded");

    long long N = params.N;
    double endpoint = std::sqrt(1.0 / (24.0 * N));
    double bessel_scale = 4.0 * kPi * std::sqrt(params.g.get_d()) / k;
    double shift = static_cast<double>(kappa) / k + static_cast<double>(r) / (2.0 * N * k);
    auto integrand = [&](double x) {
        double w2 = 1.0 / 24.0 - N * x * x;
        if (w2 <= 0.0) return 0.0;
        double w = std::sqrt(w2);
        return w / std::tan(kPi * (shift - x / k)) * special::bessel_i1(bessel_scale * w);
    };
    bool pole_inside = (kappa == 0) && (6 * r * r < N);
    if (pole_inside) {
        double pole = static_cast<double>(r) / (2.0 * N);
        return special::integrate_pv(integrand, -endpoint, endpoint, pole, quad.panels, quad.order);
    }
    return special::integrate_smooth(integrand, -endpoint, endpoint, quad.panels, quad.order);
}

Complex modulus_term(long long k, const oracle::CoefficientParams& params,
                     const QuadConfig& quad) {
    Complex acc(0.0, 0.0);
    double k2 = static_cast<double>(k) * k;
    for (long long r = 1; r <= params.N - 1; ++r) {
        std::vector<Complex> row = kloosterman::kloosterman_row(k, params.j, params.N, params.n, r);
        for (long long kappa = 0; kappa < k; ++kappa)
            acc += row[kappa] / k2 * term_integral(k, kappa, r, params, quad);
    }
    return acc;
}

std::vector<Complex> modulus_terms(const oracle::CoefficientParams& params, long long J,
                                   const QuadConfig& quad, int threads) {
    validate_for_formula(params);
    if (J < 1) throw std::domain_error("rademacher: J must be >= 1");
    std::vector<Complex> terms(J);
    detail::parallel_index_for(1, J + 1, threads,
                               [&](long long k) { terms[k - 1] = modulus_term(k, params, quad); });
    return terms;
}

Complex partial_sum(const oracle::CoefficientParams& params, long long J,
                    const QuadConfig& quad, int threads) {
    std::vector<Complex> terms = modulus_terms(params, J, quad, threads);
    Complex total(0.0, 0.0);
    for (const Complex& t : terms) total += t;
    return Complex(0.0, -2.0 * kPi) / std::sqrt(params.g.get_d()) * total;
}

std::vector<ConvergenceRow> convergence_table(const oracle::CoefficientParams& params,
                                              const std::vector<long long>& J_list,
                                              const QuadConfig& quad, int threads) {
    if (J_list.empty()) return {};
    for (std::size_t i = 1; i < J_list.size(); ++i)
        if (J_list[i] <= J_list[i - 1])
            throw std::domain_error("convergence_table: J_list must be strictly ascending");
    std::vector<Complex> terms = modulus_terms(params, J_list.back(), quad, threads);
    BigInt oracle_value = oracle::coefficient_exact(params);
    double oracle_d = oracle_value.get_d();
    Complex prefactor = Complex(0.0, -2.0 * kPi) / std::sqrt(params.g.get_d());

    std::vector<ConvergenceRow> rows;
    rows.reserve(J_list.size());
    Complex running(0.0, 0.0);
    long long k = 0;
    for (long long J : J_list) {
        while (k < J) running += terms[k++];
        Complex value = prefactor * running;
        rows.push_back({J, value.real(), value.imag(), oracle_value,
                        std::abs(value.real() - oracle_d)});
    }
    return rows;
}

}  // namespace falsetheta::rademacher
