#ifndef FALSETHETA_VERIFY_HPP
#define FALSETHETA_VERIFY_HPP

#include <string>
#include <vector>

namespace falsetheta::verify {

struct SuiteResult {
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
};

enum class Grid { Default, Large };

// Cross-identity suites: the eta multiplier through its two formulas, the
// Gauss closed forms against direct summation, Gauss-sum multiplicativity,
// the twisted sine-sum rewriting, chi through Gauss sums for odd k,
// Kloosterman periodicity in kappa, and the oddness/accuracy checks of the
// principal-value integrator.  Each suite reports its maximum residual over
// the grid and the tolerance it is held to.
std::vector<SuiteResult> run_identity_suites(Grid grid = Grid::Default);

}  // namespace falsetheta::verify

#endif
