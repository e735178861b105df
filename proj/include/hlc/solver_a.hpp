#ifndef HLC_SOLVER_A_HPP
#define HLC_SOLVER_A_HPP

#include <functional>
#include <utility>
#include <vector>

#include "hlc/solve.hpp"
#include "hlc/types.hpp"

namespace hlc {

// A simple assignment: per edge of one part, a forced choice that makes the
// edge bichromatic. kind 0 picks two vertices with two distinct colors per
// edge; kind i >= 1 picks one vertex with a color != i per edge.
struct SimpleAssignment {
    int kind = 0;
    std::vector<std::pair<int, int>> assignments;  // (vertex, color), vertices distinct
};

// Enumerates all consistent i-simple assignments for parts[i] in
// lexicographic order (edge index, then vertex/color choices ascending).
// Choices that would give one vertex two different colors are skipped.
// With prune_improper set, combinations whose partial coloring already
// monochromatizes a fully colored edge are cut at the earliest prefix; this
// drops only assignments whose completed coloring is improper anyway.
// The callback returns true to stop the enumeration; enumerate_simple
// returns true when stopped early.
bool enumerate_simple(const Classification& cls, const Instance& inst, int i,
                      const PartialColoring& chi,
                      const std::function<bool(const SimpleAssignment&, const PartialColoring&)>& cb,
                      bool prune_improper = false);

// Recursive two-phase solver with threshold delta = max{2c, rho^2}:
// vertex branching on high-degree vertices, greedy conditional-expectations
// completion when the expectation is below 1, and simple-assignment clean-up
// of small parts.
SolveResult solve_a(const Instance& inst, const SolveOptions& opts = {});

} // namespace hlc

#endif
