#ifndef FALSETHETA_KLOOSTERMAN_HPP
#define FALSETHETA_KLOOSTERMAN_HPP

#include <vector>

#include "falsetheta/common.hpp"

namespace falsetheta::kloosterman {

struct KloostermanKey {
    long long k = 1;      // modulus, >= 1
    long long j = 1;      // 1 <= j <= N-1
    long long N = 2;      // >= 2
    long long n = 0;      // >= 0
    long long r = 1;      // 1 <= r <= N-1
    long long kappa = 0;  // reduced mod k before use
};

// K_{k,j,N}(n, r, kappa) =
//   sum_{0<=h<k, gcd(h,k)=1} chi_{j,r}(N, M_{h,k})
//     * zeta_{24k}^{(24N(kappa + r/2N)^2 - 1) h' - 24(n + j^2/4N - 1/24) h}
// The fractional exponent is assembled over the common denominator 24kN in
// exact integer arithmetic and reduced mod 1 before exponentiation.
Complex kloosterman_sum(const KloostermanKey& key);

// row[kappa] for kappa in [0, k); the multiplier values chi_{j,r}(N, M_{h,k})
// and the inverses h' are computed once per h and reused across all kappa.
std::vector<Complex> kloosterman_row(long long k, long long j, long long N,
                                     long long n, long long r);

struct BoundScanPerK {
    long long k = 0;
    double max_abs_over_n = 0.0;  // max over (n, r, kappa) of |K| / n
    double ratio = 0.0;           // max_abs_over_n / k^{1/2 + eps}
};

struct BoundScanReport {
    double eps = 0.0;
    double max_ratio = 0.0;
    long long argmax_k = 0, argmax_n = 0, argmax_r = 0, argmax_kappa = 0;
    std::vector<BoundScanPerK> per_k;  // one entry per k in [1, k_max]
};

// Empirical growth scan: for every (n in n_set, k <= k_max, r, kappa)
// record |K_{k,j,N}(n,r,kappa)| / (n k^{1/2+eps}); keeps per-k maxima and
// the global argmax.  Work is distributed over threads by k; the report is
// deterministic regardless of the thread count.
BoundScanReport bound_ratio_scan(long long j, long long N,
                                 const std::vector<long long>& n_set,
                                 long long k_max, double eps, int threads = 1);

}  // namespace falsetheta::kloosterman

#endif
