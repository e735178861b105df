#ifndef HLC_SOLVE_HPP
#define HLC_SOLVE_HPP

#include <cstdint>

#include "hlc/types.hpp"

namespace hlc {

enum class Decision { Colorable, Uncolorable };

// Recursion-tree instrumentation. A node is every entered recursive call;
// it counts toward phase 1 when its fully-uncolored part is above the
// solver's Phase I threshold, toward phase 2 otherwise.
struct Stats {
    std::uint64_t nodes_total = 0;
    std::uint64_t nodes_phase1 = 0;
    std::uint64_t nodes_phase2 = 0;
    std::uint64_t depth_max = 0;
    std::uint64_t derand_successes = 0;
    std::uint64_t probes = 0;           // probe decompositions performed
    std::uint64_t probe_followups = 0;  // follow-up candidates recursed into
    std::uint64_t cleanups = 0;         // clean-up enumerations performed
    std::uint64_t branch_vertices = 0;  // vertex branchings performed
    std::uint64_t recurrence_violations = 0;
    std::uint64_t runtime_ms = 0;
};

struct SolveResult {
    Decision decision = Decision::Uncolorable;
    PartialColoring coloring;  // total proper coloring when Colorable
    Stats stats;
};

struct SolveOptions {
    bool check_recurrences = false;  // assert the per-step volume-shrink clauses
    bool strict_c = false;           // recompute c and reject understated declarations
};

} // namespace hlc

#endif
