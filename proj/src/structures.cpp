#include "hlc/structures.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>

namespace hlc {

namespace {

// nu^exponent > bound, computed with saturation so huge exponents are safe.
bool pow_exceeds(std::uint64_t nu, int exponent, std::uint64_t bound) {
    std::uint64_t acc = 1;
    for (int i = 0; i < exponent; ++i) {
        if (acc > bound / nu) return true;  // acc * nu would exceed bound
        acc *= nu;
        if (acc > bound) return true;
    }
    return acc > bound;
}

int trace_size(const Classification& cls, const Instance& inst, int e) {
    return static_cast<int>(inst.edge_sets[e].intersection_count(cls.v0));
}

int smallest_trace_vertex(const Classification& cls, const Instance& inst, int e) {
    for (int v : inst.edges[e])
        if (cls.v0.test(static_cast<std::size_t>(v))) return v;
    return -1;
}

} // namespace

int min_active_edge(const Classification& cls, const Instance& inst) {
    if (cls.active.empty())
        throw Error(ErrorKind::EmptyActive, "min_active_edge: no active edges");
    int best = -1, best_size = 0;
    for (int e : cls.active) {
        int s = trace_size(cls, inst, e);
        if (best == -1 || s < best_size) {
            best = e;
            best_size = s;
        }
    }
    return best;
}

int induced_count(const std::vector<int>& part, const Bitset& s, const Classification& cls,
                  const Instance& inst) {
    int count = 0;
    for (int e : part) {
        Bitset tr = cls.trace(inst, e);
        if (tr.is_subset_of(s)) ++count;
    }
    return count;
}

Bitset high_degree_set(const std::vector<int>& part, double eps, const Classification& cls,
                       const Instance& inst) {
    std::vector<int> deg(static_cast<std::size_t>(inst.n), 0);
    for (int e : part)
        cls.trace(inst, e).for_each([&](std::size_t v) { ++deg[v]; });
    double threshold = eps * static_cast<double>(part.size());
    Bitset t(static_cast<std::size_t>(inst.n));
    cls.v0.for_each([&](std::size_t v) {
        if (static_cast<double>(deg[v]) > threshold) t.set(v);
    });
    return t;
}

PhaseDichotomy phase1_dichotomy(const Instance& inst, const Params& params,
                                const Classification& cls) {
    const auto& h0 = cls.parts[0];
    if (static_cast<int>(h0.size()) <= 2 * inst.c_declared)
        throw Error(ErrorKind::PreconditionViolated,
                    "phase1_dichotomy requires |H0| > 2c");
    int e_min = min_active_edge(cls, inst);
    int s = trace_size(cls, inst, e_min);
    std::uint64_t mk = static_cast<std::uint64_t>(params.m) * static_cast<std::uint64_t>(params.kappa);
    PhaseDichotomy out;
    if (pow_exceeds(static_cast<std::uint64_t>(params.nu), s, mk)) {
        out.derandomizable = true;
        return out;
    }
    int best_v = -1, best_deg = -1;
    inst.edge_sets[e_min].for_each([&](std::size_t v) {
        if (!cls.v0.test(v)) return;
        int d = degree(static_cast<int>(v), h0, inst);
        if (d > best_deg) {
            best_deg = d;
            best_v = static_cast<int>(v);
        }
    });
    out.v = best_v;
    return out;
}

PhaseDichotomy phase2_dichotomy(const Instance& inst, const Params& params,
                                const Classification& cls) {
    if (!cls.parts[0].empty())
        throw Error(ErrorKind::PreconditionViolated, "phase2_dichotomy requires H0 empty");
    int nonempty = 0;
    for (int i = 1; i <= inst.k; ++i) {
        int size = cls.part_size(i);
        if (size == 0) continue;
        ++nonempty;
        if (size <= 2 * inst.c_declared)
            throw Error(ErrorKind::PreconditionViolated,
                        "phase2_dichotomy: part " + std::to_string(i) + " has size <= 2c");
    }
    if (nonempty < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "phase2_dichotomy requires at least two non-empty parts");

    int e_min = min_active_edge(cls, inst);
    int s = trace_size(cls, inst, e_min);
    PhaseDichotomy out;
    if (pow_exceeds(static_cast<std::uint64_t>(params.nu), s, static_cast<std::uint64_t>(params.m))) {
        out.derandomizable = true;
        return out;
    }
    int j = cls.part_of[static_cast<std::size_t>(e_min)];
    // v maximizes total degree over the parts other than j
    int best_v = -1, best_deg = -1;
    inst.edge_sets[e_min].for_each([&](std::size_t v) {
        if (!cls.v0.test(v)) return;
        int d = 0;
        for (int p = 1; p <= inst.k; ++p) {
            if (p == j) continue;
            d += degree(static_cast<int>(v), cls.parts[static_cast<std::size_t>(p)], inst);
        }
        if (d > best_deg) {
            best_deg = d;
            best_v = static_cast<int>(v);
        }
    });
    // i maximizes deg_{H_i}(v) / |H_i| over non-empty parts i != j (exact compare)
    int best_i = -1;
    long long bn = 0, bd = 1;
    for (int p = 1; p <= inst.k; ++p) {
        if (p == j || cls.parts[static_cast<std::size_t>(p)].empty()) continue;
        long long d = degree(best_v, cls.parts[static_cast<std::size_t>(p)], inst);
        long long size = cls.part_size(p);
        if (best_i == -1 || d * bd > bn * size) {
            best_i = p;
            bn = d;
            bd = size;
        }
    }
    out.v = best_v;
    out.i = best_i;
    out.j = j;
    return out;
}

bool phase1_degree_premise(const Params& params, int deg, int h0_size) {
    mpz_class lhs, rhs;
    std::uint64_t mk = static_cast<std::uint64_t>(params.m) * static_cast<std::uint64_t>(params.kappa);
    if (mk == 0) return false;  // log undefined; premise not certifiable
    mpz_ui_pow_ui(lhs.get_mpz_t(), mk, static_cast<unsigned long>(2 * deg));
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(params.nu),
                  static_cast<unsigned long>(h0_size));
    return lhs > rhs;
}

BalancedSet balanced_set_basic(const std::vector<int>& part, double eps1, double eps2,
                               const Classification& cls, const Instance& inst) {
    if (!(eps1 < eps2))
        throw Error(ErrorKind::PreconditionViolated, "balanced_set_basic requires eps1 < eps2");
    if (part.empty())
        throw Error(ErrorKind::PreconditionViolated, "balanced_set_basic requires a non-empty part");
    Bitset t = high_degree_set(part, eps1, cls, inst);
    double size = static_cast<double>(part.size());
    double keep_threshold = (1.0 - eps2) * size;
    if (static_cast<double>(induced_count(part, t, cls, inst)) > keep_threshold + 1e-9)
        throw Error(ErrorKind::PreconditionViolated,
                    "balanced_set_basic: high-degree set induces too many edges");

    // Incremental induced count: per edge, how many uncolored vertices are
    // currently outside s; induced while that stays 0.
    std::vector<int> outside(part.size(), 0);
    std::vector<std::vector<int>> edges_at(static_cast<std::size_t>(inst.n));
    for (std::size_t idx = 0; idx < part.size(); ++idx)
        cls.trace(inst, part[idx]).for_each(
            [&](std::size_t v) { edges_at[v].push_back(static_cast<int>(idx)); });

    Bitset s = cls.v0;
    int induced = static_cast<int>(part.size());
    for (int v = 0; v < inst.n; ++v) {
        if (!s.test(static_cast<std::size_t>(v)) || t.test(static_cast<std::size_t>(v))) continue;
        int drop = 0;
        for (int idx : edges_at[static_cast<std::size_t>(v)])
            if (outside[static_cast<std::size_t>(idx)] == 0) ++drop;
        if (static_cast<double>(induced - drop) <= keep_threshold + 1e-9) break;
        s.reset(static_cast<std::size_t>(v));
        induced -= drop;
        for (int idx : edges_at[static_cast<std::size_t>(v)]) ++outside[static_cast<std::size_t>(idx)];
    }

    BalancedSet out;
    out.s = std::move(s);
    out.target_part = -1;  // caller-specific
    out.lower = keep_threshold;
    out.upper = (1.0 - (eps2 - eps1)) * size;
    if (static_cast<double>(induced) < out.lower - 1e-9 ||
        static_cast<double>(induced) > out.upper + 1e-9)
        throw Error(ErrorKind::InternalInvariantViolation,
                    "balanced_set_basic produced an out-of-band induced count");
    return out;
}

BalancedSet balanced_set_phase1(const Instance& inst, const Classification& cls, double eps1,
                                double eps2) {
    const auto& h0 = cls.parts[0];
    if (h0.empty())
        throw Error(ErrorKind::PreconditionViolated, "balanced_set_phase1 requires |H0| > 0");
    int c = inst.c_declared;
    if (!(eps1 < eps2 / (1.0 + c)))
        throw Error(ErrorKind::PreconditionViolated,
                    "balanced_set_phase1 requires eps1 < eps2 / (1+c)");
    if (!high_degree_set(h0, eps1, cls, inst).empty())
        throw Error(ErrorKind::PreconditionViolated,
                    "balanced_set_phase1 requires no high-degree vertex in H0");

    BalancedSet bs = balanced_set_basic(h0, eps1, eps2, cls, inst);
    bs.target_part = 0;
    int appended = 0;
    for (int e : cls.active) {
        Bitset tr = cls.trace(inst, e);
        if (tr.intersects(bs.s)) continue;
        int v = smallest_trace_vertex(cls, inst, e);
        if (v < 0)
            throw Error(ErrorKind::InternalInvariantViolation,
                        "active edge with empty uncolored part");
        if (++appended > c)
            throw Error(ErrorKind::InternalInvariantViolation,
                        "more than c active edges avoid the balanced set; instance is not "
                        "c-intersecting as declared");
        bs.s.set(static_cast<std::size_t>(v));
    }

    double size = static_cast<double>(h0.size());
    bs.lower = (1.0 - eps2) * size;
    bs.upper = (1.0 - (eps2 - (1.0 + c) * eps1)) * size;
    int recount = induced_count(h0, bs.s, cls, inst);
    if (recount < bs.lower - 1e-9 || recount > bs.upper + 1e-9)
        throw Error(ErrorKind::InternalInvariantViolation,
                    "balanced_set_phase1 certificate recount failed");
    return bs;
}

Phase2BalanceResult balanced_set_phase2(const Instance& inst, const Classification& cls,
                                        double eps1, double eps2) {
    if (!(eps1 < eps2))
        throw Error(ErrorKind::PreconditionViolated, "balanced_set_phase2 requires eps1 < eps2");
    if (eps2 > 0.5)
        throw Error(ErrorKind::PreconditionViolated, "balanced_set_phase2 requires eps2 <= 1/2");
    int c = inst.c_declared;
    std::vector<int> qualifying;
    for (int i = 1; i <= inst.k; ++i)
        if (cls.part_size(i) > 2 * c) qualifying.push_back(i);
    if (qualifying.size() < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "balanced_set_phase2 requires two parts of size > 2c");
    std::stable_sort(qualifying.begin(), qualifying.end(),
                     [&](int a, int b) { return cls.part_size(a) > cls.part_size(b); });
    int i1 = qualifying[0], i2 = qualifying[1];

    Bitset t1 = high_degree_set(cls.parts[static_cast<std::size_t>(i1)], eps1, cls, inst);
    Bitset t2 = high_degree_set(cls.parts[static_cast<std::size_t>(i2)], eps1, cls, inst);
    Bitset common = t1 & t2;
    Phase2BalanceResult out;
    if (!common.empty()) {
        out.is_vertex = true;
        out.v = common.to_vector().front();
        out.i = i1;
        out.j = i2;
        return out;
    }

    int target = -1;
    for (int cand : {i1, i2}) {
        const auto& part = cls.parts[static_cast<std::size_t>(cand)];
        const Bitset& t = (cand == i1) ? t1 : t2;
        double bound = (1.0 - eps2) * static_cast<double>(part.size());
        if (static_cast<double>(induced_count(part, t, cls, inst)) <= bound + 1e-9) {
            target = cand;
            break;
        }
    }
    if (target == -1)
        throw Error(ErrorKind::InternalInvariantViolation,
                    "both candidate parts have heavy high-degree sets; instance is not "
                    "c-intersecting as declared");

    const auto& part = cls.parts[static_cast<std::size_t>(target)];
    BalancedSet bs = balanced_set_basic(part, eps1, eps2, cls, inst);
    bs.target_part = target;
    int appended = 0;
    for (int e : cls.active) {
        if (cls.part_of[static_cast<std::size_t>(e)] == target) continue;
        Bitset tr = cls.trace(inst, e);
        if (tr.intersects(bs.s)) continue;
        int v = smallest_trace_vertex(cls, inst, e);
        if (v < 0)
            throw Error(ErrorKind::InternalInvariantViolation,
                        "active edge with empty uncolored part");
        if (++appended > c)
            throw Error(ErrorKind::InternalInvariantViolation,
                        "more than c cross-part edges avoid the balanced set; instance is not "
                        "c-intersecting as declared");
        bs.s.set(static_cast<std::size_t>(v));
    }

    double size = static_cast<double>(part.size());
    bs.lower = (1.0 - eps2) * size;
    bs.upper = (1.0 - (eps2 - (1.0 + c) * eps1)) * size;
    int recount = induced_count(part, bs.s, cls, inst);
    if (recount < bs.lower - 1e-9 || recount > bs.upper + 1e-9)
        throw Error(ErrorKind::InternalInvariantViolation,
                    "balanced_set_phase2 certificate recount failed");
    out.set = std::move(bs);
    out.i = target;
    return out;
}

} // namespace hlc
