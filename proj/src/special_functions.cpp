#include "falsetheta/special_functions.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "falsetheta/common.hpp"

namespace falsetheta::special {

double bessel_i1(double z) {
    if (z < 0.0) throw std::domain_error("bessel_i1: negative argument");
    if (z > 700.0) throw std::domain_error("bessel_i1: argument too large, would overflow");
    double t = 0.5 * z;
    double term = t;
    double sum = term;
    for (int m = 1; m < 1000; ++m) {
        term *= t * t / (static_cast<double>(m) * (m + 1));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

namespace {

std::vector<QuadNode> build_rule(int order) {
    // Newton iteration on P_n from the Chebyshev-like initial guess;
    // nodes come out symmetric, weights from the derivative.
    std::vector<QuadNode> rule(order);
    int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= order; ++n) {
                double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0;
                p1 = x;
                for (int n = 2; n <= order; ++n) {
                    double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                    p0 = p1;
                    p1 = p2;
                }
                pp = order * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule[i] = {-x, w};
        rule[order - 1 - i] = {x, w};
    }
    if (order % 2 == 1) rule[order / 2].node = 0.0;
    return rule;
}

}  // namespace

const std::vector<QuadNode>& gauss_legendre_rule(int order) {
    if (order < 2 || order > 128)
        throw std::domain_error("gauss_legendre_rule: order must lie in [2, 128]");
    static std::mutex mu;
    static std::map<int, std::vector<QuadNode>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

}  // namespace falsetheta::special
