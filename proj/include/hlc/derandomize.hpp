#ifndef HLC_DERANDOMIZE_HPP
#define HLC_DERANDOMIZE_HPP

#include <gmpxx.h>

#include "hlc/types.hpp"

namespace hlc {

// Exact expected number of monochromatic active edges when every uncolored
// vertex independently picks a uniform color from its list. chi must be a
// proper partial coloring (throws ImproperInput otherwise).
mpq_class expected_monochromatic(const Instance& inst, const PartialColoring& chi);

// Conditional expectation of the final monochromatic-edge count given chi:
// (# fully colored monochromatic edges) + sum of active-edge probabilities.
// Equals expected_monochromatic on proper inputs; tolerates improper ones.
// This is the quantity the greedy extension minimizes.
mpq_class expectation_with_penalty(const Instance& inst, const PartialColoring& chi);

// Greedy conditional-expectations extension: processes uncolored vertices in
// ascending order, assigning each the list color minimizing the conditional
// expectation (ties to the smallest color). If expected_monochromatic(chi) < 1
// the returned total coloring is proper.
PartialColoring derandomize(const Instance& inst, const PartialColoring& chi);

// Completes chi by giving every uncolored vertex its smallest list color
// different from i. Requires parts[0] empty and parts[j] empty for all
// j not in {0, i}; the result is then proper.
PartialColoring avoid_color_extension(const Instance& inst, const PartialColoring& chi, int i);

} // namespace hlc

#endif
