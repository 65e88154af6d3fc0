#ifndef FALSETHETA_SPECIAL_FUNCTIONS_HPP
#define FALSETHETA_SPECIAL_FUNCTIONS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace falsetheta::special {

// Modified Bessel function I_1 by its power series, summed until
// term/partial-sum < 1e-17.  Valid for 0 <= z <= 700.
double bessel_i1(double z);

struct QuadNode {
    double node;
    double weight;
};

// Gauss-Legendre nodes and weights on [-1, 1], 2 <= order <= 128.
// Rules are cached; the returned reference stays valid for the process
// lifetime and is safe to share across threads.
const std::vector<QuadNode>& gauss_legendre_rule(int order);

// Composite Gauss-Legendre quadrature over [a, b].
template <class F>
double integrate_smooth(F&& f, double a, double b, int panels, int order) {
    if (panels < 1) throw std::domain_error("integrate_smooth: panels must be >= 1");
    const auto& rule = gauss_legendre_rule(order);
    double total = 0.0;
    double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + width * p;
        double mid = lo + 0.5 * width;
        double half = 0.5 * width;
        double acc = 0.0;
        for (const auto& qn : rule) acc += qn.weight * f(mid + half * qn.node);
        total += half * acc;
    }
    return total;
}

namespace detail {

// Composite rule with panels shrinking geometrically toward one endpoint,
// for integrands with a singularity just beyond that endpoint.
template <class F>
double integrate_graded(F&& f, double a, double b, bool singular_at_left, int order) {
    constexpr int kLevels = 40;
    double total = 0.0;
    double length = b - a;
    double t_prev = 1.0;
    for (int i = 1; i <= kLevels; ++i) {
        double t = (i == kLevels) ? 0.0 : t_prev * 0.5;
        double lo, hi;
        if (singular_at_left) {
            lo = a + t * length;
            hi = a + t_prev * length;
        } else {
            lo = b - t_prev * length;
            hi = b - t * length;
        }
        total += integrate_smooth(f, lo, hi, 1, order);
        t_prev = t;
    }
    return total;
}

}  // namespace detail

// Cauchy principal value of f across a single simple pole in (a, b):
// the symmetric window [pole - m, pole + m] (m the distance to the nearer
// endpoint) is folded into integral_0^m [f(pole+u) + f(pole-u)] du, whose
// integrand extends smoothly to u = 0 and is never sampled there; the
// leftover one-sided piece is integrated with panels graded toward the pole.
template <class F>
double integrate_pv(F&& f, double a, double b, double pole, int panels, int order) {
    if (pole <= a || pole >= b) {
        if (pole == a || pole == b)
            throw std::domain_error("integrate_pv: pole on the integration boundary");
        throw std::domain_error("integrate_pv: pole outside the interval");
    }
    double m = std::min(pole - a, b - pole);
    double paired =
        integrate_smooth([&](double u) { return f(pole + u) + f(pole - u); }, 0.0, m, panels, order);
    double rest = 0.0;
    if (pole - a < b - pole)
        rest = detail::integrate_graded(f, pole + m, b, true, order);
    else if (b - pole < pole - a)
        rest = detail::integrate_graded(f, a, pole - m, false, order);
    return paired + rest;
}

}  // namespace falsetheta::special

#endif
