#ifndef HLC_SOLVER_B_HPP
#define HLC_SOLVER_B_HPP

#include <cstdint>
#include <functional>

#include "hlc/solve.hpp"
#include "hlc/structures.hpp"
#include "hlc/types.hpp"

namespace hlc {

// Volume-dependent parameter schedule. With H = 4(c+1) ln(2 rho), xi is the
// unique root > H of (xi/H)^xi = 2 mu, and eps = H / xi; the rest follow.
struct SolverBParams {
    double mu = 0;
    double hconst = 0;
    double xi = 0;
    double eps = 0;
    double delta = 0;  // 2(c+1) / eps
    double eps1 = 0;   // eps / (4(c+1))
    double eps2 = 0;   // eps / 2
};

// Root of (xi/H)^xi = 2 mu for xi > H, found by bisection in log space.
// Relative residual of (xi/H)^xi against 2 mu is at most 1e-9.
double xi_solve(double mu, int rho, int c);

SolverBParams params_for(double mu, int rho, int c);

enum class SolverBMode { Full, Simplified };

// Probe decomposition streams. Both yield the probe extension first (every
// vertex outside s colored with its smallest admissible color), then the
// forced follow-up candidates; candidates that leave some vertex without the
// forced color in its list, or that make the coloring improper, are skipped.
// The callback gets the candidate coloring and the follow-up edge (-1 for
// the probe itself) and returns true to stop; the functions return true when
// stopped. skip_warnings, when given, counts follow-up edges whose forced
// vertex set inside s is unexpectedly empty.
bool probe_phase1(const Instance& inst, const Classification& cls, const PartialColoring& chi,
                  const BalancedSet& s,
                  const std::function<bool(const PartialColoring&, int)>& cb,
                  std::uint64_t* skip_warnings = nullptr);

bool probe_phase2(const Instance& inst, const Classification& cls, const PartialColoring& chi,
                  int i, const BalancedSet& s,
                  const std::function<bool(const PartialColoring&, int)>& cb,
                  std::uint64_t* skip_warnings = nullptr);

// Recursive solver driven by the volume parameter schedule: vertex branching
// on high-degree vertices, balanced-set probing otherwise, simple-assignment
// clean-up of small parts. Simplified mode replaces the balanced sets by
// "all uncolored vertices but one of minimum degree".
SolveResult solve_b(const Instance& inst, SolverBMode mode = SolverBMode::Full,
                    const SolveOptions& opts = {});

} // namespace hlc

#endif
