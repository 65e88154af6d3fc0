#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "falsetheta/arith.hpp"
#include "falsetheta/multipliers.hpp"
#include "oracles.hpp"

using namespace falsetheta;
using namespace falsetheta::multipliers;
using falsetheta::arith::gcd;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("SL2 matrices") {
    CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), std::invalid_argument);

    SL2Matrix s = matrix_hk(0, 1);
    CHECK(s.a == 0);
    CHECK(s.b == -1);
    CHECK(s.c == 1);
    CHECK(s.d == 0);

    SL2Matrix m12 = matrix_hk(1, 2);
    CHECK(m12.a == 1);
    CHECK(m12.b == -1);
    CHECK(m12.c == 2);
    CHECK(m12.d == -1);

    SL2Matrix m25 = matrix_hk(2, 5);
    CHECK(m25.a == 2);
    CHECK(m25.b == -1);
    CHECK(m25.c == 5);
    CHECK(m25.d == -2);

    CHECK_THROWS_AS(matrix_hk(2, 4), std::domain_error);
    CHECK_THROWS_AS(matrix_hk(3, 2), std::domain_error);

    SUBCASE("inverse") {
        SL2Matrix id(1, 0, 0, 1);
        SL2Matrix id_inv = matrix_inverse(id);
        CHECK(id_inv.a == 1);
        CHECK(id_inv.b == 0);

        SL2Matrix s_inv = matrix_inverse(s);
        CHECK(s_inv.a == 0);
        CHECK(s_inv.b == 1);
        CHECK(s_inv.c == -1);
        CHECK(s_inv.d == 0);

        SL2Matrix m_inv = matrix_inverse(m12);
        CHECK(m_inv.a == -1);
        CHECK(m_inv.b == 1);
        CHECK(m_inv.c == -2);
        CHECK(m_inv.d == 1);
    }
}

TEST_CASE("eta multiplier, both formulas") {
    SL2Matrix s(0, -1, 1, 0);
    Complex expect_s = std::polar(1.0, -kPi / 4.0);
    CHECK(std::abs(eta_multiplier_dedekind(s) - expect_s) < 1e-15);
    CHECK(std::abs(eta_multiplier_closed(s) - expect_s) < 1e-15);

    SL2Matrix t(1, 1, 0, 1);
    CHECK(std::abs(eta_multiplier_closed(t) - std::polar(1.0, kPi / 12.0)) < 1e-15);
    CHECK_THROWS_AS(eta_multiplier_dedekind(t), std::domain_error);

    SL2Matrix m(1, 0, 1, 1);
    CHECK(std::abs(std::abs(eta_multiplier_dedekind(m)) - 1.0) < 1e-15);
    CHECK(std::abs(eta_multiplier_dedekind(m) - eta_multiplier_closed(m)) < 1e-14);

    SL2Matrix m2(2, 1, 3, 2);
    CHECK(std::abs(std::abs(eta_multiplier_dedekind(m2)) - 1.0) < 1e-15);
    CHECK(std::abs(eta_multiplier_dedekind(m2) - eta_multiplier_closed(m2)) < 1e-14);

    SL2Matrix m3(1, -1, 2, -1);
    CHECK(std::abs(eta_multiplier_dedekind(m3) - eta_multiplier_closed(m3)) < 1e-14);

    SUBCASE("agreement, unit modulus and 24th-root structure for all M_{h,k}, k <= 30") {
        for (long long k = 1; k <= 30; ++k)
            for (long long h = 0; h < k; ++h) {
                if (gcd(h, k) != 1) continue;
                SL2Matrix mhk = matrix_hk(h, k);
                Complex nu1 = eta_multiplier_dedekind(mhk);
                Complex nu2 = eta_multiplier_closed(mhk);
                CHECK(std::abs(nu1 - nu2) < 1e-12);
                CHECK(std::abs(std::abs(nu1) - 1.0) < 1e-12);
                CHECK(std::abs(std::pow(nu1, 24) - Complex(1.0, 0.0)) < 1e-10);
            }
    }

    SUBCASE("negative c through the closed formula") {
        SL2Matrix neg_s(0, 1, -1, 0);  // also maps tau to -1/tau
        Complex nu = eta_multiplier_closed(neg_s);
        CHECK(std::abs(nu - std::polar(1.0, kPi / 4.0)) < 1e-15);
        Complex tau(0.0, 2.0);
        Complex lhs = test_oracles::eta_series(-1.0 / tau);
        Complex rhs = nu * std::sqrt(-tau) * test_oracles::eta_series(tau);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }

    SUBCASE("numeric transformation check, eta(-1/tau) vs multiplier") {
        // eta(M tau) = nu (c tau + d)^{1/2} eta(tau) for M = S at tau = 2i
        Complex tau(0.0, 2.0);
        Complex lhs = test_oracles::eta_series(-1.0 / tau);
        Complex rhs = eta_multiplier_dedekind(s) * std::sqrt(tau) * test_oracles::eta_series(tau);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        // the same statement in the sqrt(-i tau) normalization
        CHECK(std::abs(lhs - std::sqrt(Complex(0.0, -1.0) * tau) * test_oracles::eta_series(tau)) <
              1e-12);
    }
}

TEST_CASE("psi multiplier") {
    SL2Matrix id(1, 0, 0, 1);
    for (long long N : {3LL, 5LL, 8LL})
        for (long long j = 1; j <= N - 1; ++j)
            for (long long r = 1; r <= N - 1; ++r) {
                Complex expect = (j == r) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                CHECK(psi_multiplier(j, r, N, id) == expect);
            }

    SL2Matrix w(0, 1, -1, 0);
    CHECK(std::abs(psi_multiplier(1, 1, 3, w) - Complex(-0.5, 0.5)) < 1e-14);

    SUBCASE("c = 0 with negative d") {
        SL2Matrix neg_id(-1, 0, 0, -1);
        CHECK(std::abs(psi_multiplier(1, 1, 3, neg_id) - Complex(0.0, -1.0)) < 1e-15);
        CHECK(psi_multiplier(1, 2, 3, neg_id) == Complex(0.0, 0.0));
        SL2Matrix shear(-1, 1, 0, -1);  // ab = -1 phase times the -i factor
        CHECK(std::abs(psi_multiplier(1, 1, 3, shear) -
                       Complex(0.0, -1.0) * std::polar(1.0, -2.0 * kPi / 12.0)) < 1e-14);
    }

    CHECK_THROWS_AS(psi_multiplier(0, 1, 3, id), std::out_of_range);
    CHECK_THROWS_AS(psi_multiplier(1, 3, 3, id), std::out_of_range);
}

TEST_CASE("chi multiplier") {
    CHECK(std::abs(chi_multiplier(1, 1, 3, matrix_hk(0, 1)) - Complex(0.0, kInvSqrt2)) < 1e-14);
    CHECK(std::abs(chi_via_gauss_odd(0, 1, 1, 1, 3) - Complex(0.0, kInvSqrt2)) < 1e-14);

    CHECK(std::abs(chi_via_gauss_odd(1, 3, 1, 1, 4) -
                   chi_multiplier(1, 1, 4, matrix_hk(1, 3))) < 1e-10);
    CHECK(std::abs(chi_via_gauss_odd(2, 5, 2, 1, 4) -
                   chi_multiplier(2, 1, 4, matrix_hk(2, 5))) < 1e-10);

    CHECK_THROWS_AS(chi_via_gauss_odd(1, 4, 1, 1, 3), std::domain_error);
    CHECK_THROWS_AS(chi_via_gauss_odd(3, 9, 1, 1, 3), std::domain_error);

    SUBCASE("gauss route agrees with the multiplier product on the odd-k grid") {
        double worst = 0.0;
        for (long long k = 1; k <= 21; k += 2)
            for (long long N : {3LL, 4LL, 5LL, 8LL, 10LL})
                for (long long h = 0; h < k; ++h) {
                    if (gcd(h, k) != 1) continue;
                    for (long long j = 1; j <= N - 1; ++j)
                        for (long long r = 1; r <= N - 1; ++r)
                            worst = std::max(worst,
                                             std::abs(chi_via_gauss_odd(h, k, j, r, N) -
                                                      chi_multiplier(j, r, N, matrix_hk(h, k))));
                }
        CHECK(worst < 1e-9);
    }
}
