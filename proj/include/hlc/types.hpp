#ifndef HLC_TYPES_HPP
#define HLC_TYPES_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "hlc/bitset.hpp"
#include "hlc/errors.hpp"

namespace hlc {

// Colors are 1-based in {1..k}; 0 means "unassigned". A color list is a
// 64-bit mask with bit (c-1) set for color c, which caps k at 64.
using ColorMask = std::uint64_t;

constexpr int kMaxColors = 64;

inline bool mask_has(ColorMask m, int color) { return (m >> (color - 1)) & 1u; }
inline ColorMask mask_bit(int color) { return ColorMask{1} << (color - 1); }
inline int mask_size(ColorMask m) { return std::popcount(m); }
// Smallest color in m, 0 if empty.
inline int mask_min(ColorMask m) { return m ? std::countr_zero(m) + 1 : 0; }

struct Instance {
    int k = 0;            // number of colors
    int c_declared = 0;   // declared intersection deficiency
    int n = 0;            // vertices, ids 0..n-1
    std::vector<std::vector<int>> edges;       // each sorted ascending, no duplicates
    std::vector<ColorMask> lists;              // per-vertex admissible colors

    int m() const { return static_cast<int>(edges.size()); }

    // Derived; filled by finalize() (idempotent, also called by validate()).
    std::vector<Bitset> edge_sets;
    void finalize();

    bool list_has(int v, int color) const { return mask_has(lists[v], color); }
    int list_size(int v) const { return mask_size(lists[v]); }
};

struct Params {
    int nu = 0;     // min list size
    int rho = 0;    // max list size
    int kappa = 0;  // max pairwise list intersection
    int m = 0;
    int n = 0;
};

struct PartialColoring {
    std::vector<std::uint8_t> color;  // 0 = unassigned

    PartialColoring() = default;
    explicit PartialColoring(int n) : color(n, 0) {}
    explicit PartialColoring(std::vector<std::uint8_t> colors) : color(std::move(colors)) {}

    int operator[](int v) const { return color[v]; }
    void assign(int v, int c) { color[v] = static_cast<std::uint8_t>(c); }
    bool assigned(int v) const { return color[v] != 0; }
    bool fully_assigned() const {
        for (auto c : color)
            if (c == 0) return false;
        return true;
    }
    bool operator==(const PartialColoring&) const = default;
};

struct Classification {
    Bitset v0;                            // uncolored vertices
    std::vector<std::vector<int>> parts;  // parts[i] = edges with color trace {0, i}, i in 0..k
    std::vector<int> active;              // union of parts, ascending
    std::vector<int> part_of;             // per edge: 0..k, or -1 if not active
    int improper_edges = 0;               // fully colored edges with < 2 distinct colors

    bool improper() const { return improper_edges > 0; }

    int part_size(int i) const { return static_cast<int>(parts[i].size()); }
    // Uncolored portion of an edge.
    Bitset trace(const Instance& inst, int e) const { return inst.edge_sets[e] & v0; }
};

struct VolumeMeasure {
    std::size_t mu1 = 0;       // |parts[0]|
    std::uint64_t mu2 = 1;     // prod_i max{|parts[i]|, 1}, saturating
    int t = 0;                 // number of non-empty parts
};

// Checks structural invariants and computes (nu, rho, kappa, m, n).
// Throws hlc::Error on malformed input.
Params validate(const Instance& inst);

// Max over edges H of the number of edges disjoint from H; 0 for m <= 1.
int compute_c(const Instance& inst);

// Partitions the edges still constraining the search by their color trace.
// Edges with >= 2 distinct nonzero colors drop out; a fully colored edge
// with < 2 distinct colors bumps improper_edges.
Classification classify(const Instance& inst, const PartialColoring& chi);

// Number of edges in `part` (a set of edge indices) containing v.
int degree(int v, const std::vector<int>& part, const Instance& inst);

VolumeMeasure volumes(const Classification& cls, int k);

// True iff chi is total, respects the lists, every edge has size >= 2 and
// every edge sees >= 2 distinct colors. Vacuously true for m = 0.
bool is_proper_complete(const Instance& inst, const PartialColoring& chi);

} // namespace hlc

#endif
