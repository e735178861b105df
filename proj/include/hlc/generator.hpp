#ifndef HLC_GENERATOR_HPP
#define HLC_GENERATOR_HPP

#include <cstdint>

#include "hlc/types.hpp"

namespace hlc {

// PRNG identifier recorded in generated-instance metadata: all generators
// draw from std::mt19937_64 seeded directly with the given seed.
inline constexpr const char* kGeneratorRngId = "mt19937_64";

// Pairwise intersecting instance (c = 0): m distinct edges of size at least
// floor(n/2)+1 sampled uniformly, lists uniform subsets of {1..k} with sizes
// in [2, k]. Deterministic in seed.
Instance gen_intersecting(int n, int m, int k, std::uint64_t seed);

// Instance with compute_c == c_target exactly: an intersecting core on one
// vertex block plus planted edges overlapping two disjoint half-blocks so
// that one planted edge misses exactly c_target others. c_declared is set to
// the recomputed value.
Instance gen_c_intersecting(int n, int m, int k, int c_target, std::uint64_t seed);

// Complete graph on k+1 vertices with full lists {1..k}: uncolorable by
// pigeonhole. c_declared = C(k-1, 2). The seed only permutes vertex labels.
Instance gen_uncolorable(int k, std::uint64_t seed);

} // namespace hlc

#endif
