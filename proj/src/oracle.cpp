#include "hlc/oracle.hpp"

#include <chrono>

namespace hlc {

namespace {

struct Brute {
    const Instance& inst;
    // edges indexed by their maximum vertex: fully colored exactly when that
    // vertex is assigned, so each edge is checked once per leaf path
    std::vector<std::vector<int>> closing_edges;
    PartialColoring chi;
    std::uint64_t proper_count = 0;
    bool stop_at_first = false;
    bool found = false;

    explicit Brute(const Instance& i) : inst(i), chi(i.n) {
        closing_edges.assign(static_cast<std::size_t>(inst.n), {});
        for (int e = 0; e < inst.m(); ++e)
            closing_edges[static_cast<std::size_t>(inst.edges[static_cast<std::size_t>(e)].back())]
                .push_back(e);
    }

    bool violates(int v) const {
        for (int e : closing_edges[static_cast<std::size_t>(v)]) {
            ColorMask seen = 0;
            for (int u : inst.edges[static_cast<std::size_t>(e)]) seen |= mask_bit(chi[u]);
            if (mask_size(seen) < 2) return true;
        }
        return false;
    }

    bool search(int v) {
        if (v == inst.n) {
            ++proper_count;
            return stop_at_first;
        }
        for (int c = 1; c <= inst.k; ++c) {
            if (!inst.list_has(v, c)) continue;
            chi.assign(v, c);
            if (!violates(v) && search(v + 1)) return true;
        }
        chi.assign(v, 0);
        return false;
    }
};

void check_budget(const Instance& inst, std::uint64_t budget) {
    validate(inst);
    std::uint64_t leaves = 1;
    for (int v = 0; v < inst.n; ++v) {
        std::uint64_t s = static_cast<std::uint64_t>(inst.list_size(v));
        if (leaves > budget / s)
            throw Error(ErrorKind::BudgetExceeded,
                        "brute-force search space exceeds the leaf budget");
        leaves *= s;
    }
}

} // namespace

SolveResult solve_brute(const Instance& inst, std::uint64_t budget) {
    auto t0 = std::chrono::steady_clock::now();
    check_budget(inst, budget);
    SolveResult res;

    bool tiny_edge = false;
    for (const auto& e : inst.edges)
        if (e.size() <= 1) tiny_edge = true;

    if (!tiny_edge) {
        Brute b(inst);
        b.stop_at_first = true;
        if (b.search(0)) {
            res.decision = Decision::Colorable;
            res.coloring = b.chi;
        }
    }
    res.stats.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return res;
}

std::uint64_t count_proper(const Instance& inst, std::uint64_t budget) {
    check_budget(inst, budget);
    for (const auto& e : inst.edges)
        if (e.size() <= 1) return 0;
    Brute b(inst);
    b.search(0);
    return b.proper_count;
}

} // namespace hlc
