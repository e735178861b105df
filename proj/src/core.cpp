#include "hlc/types.hpp"

#include <algorithm>
#include <string>

namespace hlc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::EmptyList: return "EmptyList";
        case ErrorKind::ListTooSmall: return "ListTooSmall";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
        case ErrorKind::BadColor: return "BadColor";
        case ErrorKind::KTooLarge: return "KTooLarge";
        case ErrorKind::NoVertices: return "NoVertices";
        case ErrorKind::ImproperInput: return "ImproperInput";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::EmptyActive: return "EmptyActive";
        case ErrorKind::EmptyPart: return "EmptyPart";
        case ErrorKind::Eps2TooLarge: return "Eps2TooLarge";
        case ErrorKind::CNotRespected: return "CNotRespected";
        case ErrorKind::TooManyEdges: return "TooManyEdges";
        case ErrorKind::Infeasible: return "Infeasible";
        case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
    }
    return "Unknown";
}

void Instance::finalize() {
    edge_sets.clear();
    edge_sets.reserve(edges.size());
    for (auto& e : edges) {
        Bitset b(static_cast<std::size_t>(n));
        for (int v : e) {
            if (v >= 0 && v < n) b.set(static_cast<std::size_t>(v));
        }
        edge_sets.push_back(std::move(b));
    }
}

Params validate(const Instance& inst) {
    if (inst.n < 1) throw Error(ErrorKind::NoVertices, "instance has no vertices");
    if (inst.k < 1) throw Error(ErrorKind::BadColor, "color count must be positive");
    if (inst.k > kMaxColors)
        throw Error(ErrorKind::KTooLarge,
                    "color count " + std::to_string(inst.k) + " exceeds the supported maximum of " +
                        std::to_string(kMaxColors));
    if (inst.c_declared < 0)
        throw Error(ErrorKind::PreconditionViolated, "declared c must be non-negative");
    if (static_cast<int>(inst.lists.size()) != inst.n)
        throw Error(ErrorKind::EmptyList, "need one color list per vertex");

    ColorMask allowed = (inst.k == 64) ? ~ColorMask{0} : (mask_bit(inst.k + 1) - 1);
    Params p;
    p.n = inst.n;
    p.m = inst.m();
    p.nu = kMaxColors + 1;
    p.rho = 0;
    for (int v = 0; v < inst.n; ++v) {
        ColorMask l = inst.lists[v];
        if (l == 0)
            throw Error(ErrorKind::EmptyList, "vertex " + std::to_string(v) + " has an empty list");
        if (l & ~allowed)
            throw Error(ErrorKind::BadColor,
                        "vertex " + std::to_string(v) + " lists a color above k");
        int s = mask_size(l);
        if (s < 2)
            throw Error(ErrorKind::ListTooSmall,
                        "vertex " + std::to_string(v) + " has a list of size " + std::to_string(s) +
                            "; lists must have at least 2 colors");
        p.nu = std::min(p.nu, s);
        p.rho = std::max(p.rho, s);
    }
    p.kappa = 0;
    for (int u = 0; u < inst.n; ++u)
        for (int v = u + 1; v < inst.n; ++v)
            p.kappa = std::max(p.kappa, mask_size(inst.lists[u] & inst.lists[v]));

    for (std::size_t e = 0; e < inst.edges.size(); ++e) {
        const auto& edge = inst.edges[e];
        for (std::size_t i = 0; i < edge.size(); ++i) {
            if (edge[i] < 0 || edge[i] >= inst.n)
                throw Error(ErrorKind::VertexOutOfRange,
                            "edge " + std::to_string(e) + " references vertex " +
                                std::to_string(edge[i]));
            if (i > 0 && edge[i] == edge[i - 1])
                throw Error(ErrorKind::DuplicateVertexInEdge,
                            "edge " + std::to_string(e) + " repeats vertex " +
                                std::to_string(edge[i]));
        }
        if (!std::is_sorted(edge.begin(), edge.end()))
            throw Error(ErrorKind::DuplicateVertexInEdge,
                        "edge " + std::to_string(e) + " is not sorted ascending");
        // sorted + no adjacent equal already rules out duplicates
    }
    return p;
}

int compute_c(const Instance& inst) {
    int m = inst.m();
    if (m <= 1) return 0;
    int worst = 0;
    for (int e = 0; e < m; ++e) {
        int disjoint = 0;
        for (int f = 0; f < m; ++f) {
            if (f == e) continue;
            if (!inst.edge_sets[e].intersects(inst.edge_sets[f])) ++disjoint;
        }
        worst = std::max(worst, disjoint);
    }
    return worst;
}

Classification classify(const Instance& inst, const PartialColoring& chi) {
    Classification cls;
    cls.v0 = Bitset(static_cast<std::size_t>(inst.n));
    for (int v = 0; v < inst.n; ++v)
        if (!chi.assigned(v)) cls.v0.set(static_cast<std::size_t>(v));

    cls.parts.assign(static_cast<std::size_t>(inst.k) + 1, {});
    cls.part_of.assign(inst.edges.size(), -1);

    for (int e = 0; e < inst.m(); ++e) {
        ColorMask seen = 0;
        int uncolored = 0;
        for (int v : inst.edges[e]) {
            int c = chi[v];
            if (c == 0)
                ++uncolored;
            else
                seen |= mask_bit(c);
        }
        int distinct = mask_size(seen);
        if (distinct >= 2) continue;  // already bichromatic, no longer a constraint
        if (uncolored == 0) {
            ++cls.improper_edges;  // fully colored with <= 1 color (covers |H| <= 1)
            continue;
        }
        int part = (distinct == 0) ? 0 : mask_min(seen);
        cls.parts[static_cast<std::size_t>(part)].push_back(e);
        cls.part_of[static_cast<std::size_t>(e)] = part;
        cls.active.push_back(e);
    }
    return cls;
}

int degree(int v, const std::vector<int>& part, const Instance& inst) {
    int d = 0;
    for (int e : part)
        if (inst.edge_sets[e].test(static_cast<std::size_t>(v))) ++d;
    return d;
}

VolumeMeasure volumes(const Classification& cls, int k) {
    VolumeMeasure vm;
    vm.mu1 = cls.parts[0].size();
    vm.mu2 = 1;
    vm.t = 0;
    for (int i = 0; i <= k; ++i) {
        std::uint64_t s = cls.parts[static_cast<std::size_t>(i)].size();
        if (s >= 1) ++vm.t;
        std::uint64_t f = std::max<std::uint64_t>(s, 1);
        // saturate instead of wrapping on absurdly fragmented instances
        if (vm.mu2 > UINT64_MAX / f)
            vm.mu2 = UINT64_MAX;
        else
            vm.mu2 *= f;
    }
    return vm;
}

bool is_proper_complete(const Instance& inst, const PartialColoring& chi) {
    for (int v = 0; v < inst.n; ++v) {
        int c = chi[v];
        if (c == 0 || !inst.list_has(v, c)) return false;
    }
    for (const auto& edge : inst.edges) {
        if (edge.size() <= 1) return false;
        ColorMask seen = 0;
        for (int v : edge) seen |= mask_bit(chi[v]);
        if (mask_size(seen) < 2) return false;
    }
    return true;
}

} // namespace hlc
