#ifndef HLC_STRUCTURES_HPP
#define HLC_STRUCTURES_HPP

#include "hlc/types.hpp"

namespace hlc {

// A vertex set certified to induce a bounded fraction of a part's edges.
// "Induced" counts edges of the part whose uncolored vertices all lie in s.
struct BalancedSet {
    Bitset s;             // subset of the uncolored vertices
    int target_part = 0;  // part the certificate is about
    double lower = 0;     // certified bounds on the induced-edge count
    double upper = 0;
};

// Outcome of the Phase I / Phase II high-degree-vertex tests: either a
// branching vertex (with the certifying part indices in Phase II) or the
// guarantee that a greedy conditional-expectations extension exists.
struct PhaseDichotomy {
    bool derandomizable = false;
    int v = -1;
    int i = -1;  // part with the high normalized degree (Phase II)
    int j = -1;  // part of the minimum edge, deg >= 1 there (Phase II)
};

struct Phase2BalanceResult {
    bool is_vertex = false;
    int v = -1, i = -1, j = -1;  // common high-degree vertex and its two parts
    BalancedSet set;             // used when !is_vertex
};

// Active edge minimizing |H ∩ V0|, ties to the smallest edge index.
int min_active_edge(const Classification& cls, const Instance& inst);

// Number of edges in `part` whose uncolored vertices all lie in s.
int induced_count(const std::vector<int>& part, const Bitset& s, const Classification& cls,
                  const Instance& inst);

// Uncolored vertices v with deg(v) strictly above eps * |part|.
Bitset high_degree_set(const std::vector<int>& part, double eps, const Classification& cls,
                       const Instance& inst);

// Lemma-1 style dichotomy for fully uncolored edges. Requires
// |parts[0]| > 2c. Either the instance admits a guaranteed greedy
// extension (m*kappa < nu^{|Hmin ∩ V0|}, tested in exact integers) or a
// vertex of degree > |H0| / (2 log_nu(m kappa)) is returned.
PhaseDichotomy phase1_dichotomy(const Instance& inst, const Params& params,
                                const Classification& cls);

// Lemma-2 style dichotomy once no fully uncolored edges remain. Requires
// parts[0] empty, every non-empty part of size > 2c, and at least two
// non-empty parts.
PhaseDichotomy phase2_dichotomy(const Instance& inst, const Params& params,
                                const Classification& cls);

// Exact-arithmetic check of the Phase I degree guarantee
// deg * 2 * log_nu(m kappa) > h0, evaluated as (m kappa)^(2 deg) > nu^h0.
bool phase1_degree_premise(const Params& params, int deg, int h0_size);

// Removes low-degree vertices in ascending order until the induced count of
// `part` first drops into [(1-eps2)|part|, (1-(eps2-eps1))|part|].
// Preconditions: eps1 < eps2 and induced(T(part, eps1)) <= (1-eps2)|part|.
BalancedSet balanced_set_basic(const std::vector<int>& part, double eps1, double eps2,
                               const Classification& cls, const Instance& inst);

// Balanced set for parts[0] additionally covering every active edge: after
// the construction no active edge's uncolored part avoids s. Requires
// T(parts[0], eps1) empty and eps1 < eps2 / (1+c). More than c appended
// cover vertices means the instance is not c-intersecting as declared.
BalancedSet balanced_set_phase1(const Instance& inst, const Classification& cls, double eps1,
                                double eps2);

// Lemma-6 construction: for the two largest parts of size > 2c, either a
// vertex of high degree in both, or a balanced set for one part covering all
// edges of the other parts. Requires eps1 < eps2 <= 1/2.
Phase2BalanceResult balanced_set_phase2(const Instance& inst, const Classification& cls,
                                        double eps1, double eps2);

} // namespace hlc

#endif
