#include "hlc/solver_b.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "hlc/derandomize.hpp"
#include "hlc/solver_a.hpp"

namespace hlc {

double xi_solve(double mu, int rho, int c) {
    if (mu < 1) mu = 1;
    double h = 4.0 * (c + 1) * std::log(2.0 * rho);
    double target = std::log(2.0 * mu);
    auto g = [&](double xi) { return xi * std::log(xi / h) - target; };
    double lo = h, hi = 2.0 * h;
    while (g(hi) < 0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (g(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SolverBParams params_for(double mu, int rho, int c) {
    SolverBParams p;
    p.mu = std::max(mu, 1.0);
    p.hconst = 4.0 * (c + 1) * std::log(2.0 * rho);
    p.xi = xi_solve(p.mu, rho, c);
    p.eps = p.hconst / p.xi;
    p.delta = 2.0 * (c + 1) / p.eps;
    p.eps1 = p.eps / (4.0 * (c + 1));
    p.eps2 = p.eps / 2.0;
    if (!(p.xi > p.hconst) || !(p.eps > 0) || !(p.eps < 1))
        throw Error(ErrorKind::InternalInvariantViolation, "parameter schedule out of range");
    if (p.eps2 > 0.5)
        throw Error(ErrorKind::Eps2TooLarge, "eps2 above 1/2; volume too small for phase II");
    return p;
}

namespace {

// Comparison slack: threshold tests lean toward inclusion, shrink assertions
// tolerate the same rounding.
constexpr double kSlack = 1e-9;

std::vector<int> part_degrees(const Instance& inst, const Classification& cls,
                              const std::vector<int>& part) {
    std::vector<int> deg(static_cast<std::size_t>(inst.n), 0);
    for (int e : part)
        cls.trace(inst, e).for_each([&](std::size_t v) { ++deg[v]; });
    return deg;
}

PartialColoring probe_coloring(const Instance& inst, const Classification& cls,
                               const PartialColoring& chi, const Bitset& s, int avoid) {
    PartialColoring out = chi;
    cls.v0.for_each([&](std::size_t v) {
        if (s.test(v)) return;
        ColorMask usable = inst.lists[v];
        if (avoid >= 1) usable &= ~mask_bit(avoid);
        out.assign(static_cast<int>(v), mask_min(usable));
    });
    return out;
}

// Color of every vertex of edge e outside s (colored ones from chi, probed
// ones from hat); 0 when they disagree or the edge has no vertex outside s.
int forced_color_outside(const Instance& inst, const Classification& cls, int e,
                         const PartialColoring& hat, const Bitset& s) {
    ColorMask seen = 0;
    for (int v : inst.edges[static_cast<std::size_t>(e)]) {
        if (cls.v0.test(static_cast<std::size_t>(v)) && s.test(static_cast<std::size_t>(v)))
            continue;
        seen |= mask_bit(hat[v]);
    }
    if (mask_size(seen) != 1) return 0;
    return mask_min(seen);
}

bool yield_followup(const Instance& inst, const Classification& cls, const PartialColoring& chi,
                    int e, int color, const Bitset& s,
                    const std::function<bool(const PartialColoring&, int)>& cb,
                    std::uint64_t* skip_warnings) {
    Bitset inside = cls.trace(inst, e) & s;
    if (inside.empty()) {
        if (skip_warnings) ++(*skip_warnings);
        return false;
    }
    PartialColoring cand = chi;
    bool listable = true;
    inside.for_each([&](std::size_t v) {
        if (!inst.list_has(static_cast<int>(v), color)) listable = false;
    });
    if (!listable) return false;
    inside.for_each([&](std::size_t v) { cand.assign(static_cast<int>(v), color); });
    if (classify(inst, cand).improper()) return false;
    return cb(cand, e);
}

} // namespace

bool probe_phase1(const Instance& inst, const Classification& cls, const PartialColoring& chi,
                  const BalancedSet& s,
                  const std::function<bool(const PartialColoring&, int)>& cb,
                  std::uint64_t* skip_warnings) {
    PartialColoring hat = probe_coloring(inst, cls, chi, s.s, 0);
    if (cb(hat, -1)) return true;
    for (int e : cls.active) {
        if (cls.part_of[static_cast<std::size_t>(e)] == 0 &&
            cls.trace(inst, e).is_subset_of(s.s))
            continue;  // induced fully uncolored edges carry no forced color
        int color = forced_color_outside(inst, cls, e, hat, s.s);
        if (color == 0) continue;
        if (yield_followup(inst, cls, chi, e, color, s.s, cb, skip_warnings)) return true;
    }
    return false;
}

bool probe_phase2(const Instance& inst, const Classification& cls, const PartialColoring& chi,
                  int i, const BalancedSet& s,
                  const std::function<bool(const PartialColoring&, int)>& cb,
                  std::uint64_t* skip_warnings) {
    if (!cls.parts[0].empty())
        throw Error(ErrorKind::PreconditionViolated,
                    "probe_phase2 requires no fully uncolored edges");
    PartialColoring hat = probe_coloring(inst, cls, chi, s.s, i);
    if (cb(hat, -1)) return true;
    for (int j = 1; j <= inst.k; ++j) {
        if (j == i) continue;
        for (int e : cls.parts[static_cast<std::size_t>(j)])
            if (yield_followup(inst, cls, chi, e, j, s.s, cb, skip_warnings)) return true;
    }
    return false;
}

namespace {

struct StepCheckB {
    bool present = false;
    double mu1_max = -1;
    double mu2_max = -1;
    int part_idx = -1;
    double part_max = -1;
    int part_must_be_empty = -1;
};

struct BCtx {
    const Instance& inst;
    Params params;
    SolveOptions opts;
    SolverBMode mode;
    double delta_phase1 = 0;   // delta(m), fixed from the original instance
    double delta_cleanup = 0;  // delta(m^k), likewise
    Stats stats;
    PartialColoring witness;
    std::uint64_t probe_skip_warnings = 0;
};

void complete_untouched(const BCtx& ctx, PartialColoring& chi) {
    for (int v = 0; v < ctx.inst.n; ++v)
        if (!chi.assigned(v)) chi.assign(v, mask_min(ctx.inst.lists[v]));
}

bool branch_makes_improper(const BCtx& ctx, const Classification& cls, int v, int c) {
    for (int e : cls.active) {
        if (!ctx.inst.edge_sets[static_cast<std::size_t>(e)].test(static_cast<std::size_t>(v)))
            continue;
        Bitset tr = cls.trace(ctx.inst, e);
        if (tr.count() != 1) continue;
        if (cls.part_of[static_cast<std::size_t>(e)] == c) return true;
    }
    return false;
}

bool recurse_b(BCtx& ctx, const PartialColoring& chi, std::uint64_t depth, const StepCheckB& check);

bool branch_vertex_b(BCtx& ctx, const Classification& cls, const PartialColoring& chi,
                     std::uint64_t depth, int v, const StepCheckB& child_check) {
    ++ctx.stats.branch_vertices;
    for (int c = 1; c <= ctx.inst.k; ++c) {
        if (!ctx.inst.list_has(v, c)) continue;
        if (branch_makes_improper(ctx, cls, v, c)) continue;
        PartialColoring child = chi;
        child.assign(v, c);
        if (recurse_b(ctx, child, depth + 1, child_check)) return true;
    }
    return false;
}

// Remark-1 stand-in for the balanced set: everything but one low-degree
// vertex. Returns false if some active edge's uncolored part is exactly {v},
// in which case the probe reduction would lose completeness and the caller
// branches on v directly.
bool simplified_set(const BCtx& ctx, const Classification& cls, int v, BalancedSet& out) {
    for (int e : cls.active) {
        Bitset tr = cls.trace(ctx.inst, e);
        if (tr.count() == 1 && tr.test(static_cast<std::size_t>(v))) return false;
    }
    out.s = cls.v0;
    out.s.reset(static_cast<std::size_t>(v));
    out.lower = 0;
    out.upper = static_cast<double>(ctx.inst.m());
    return true;
}

int min_degree_vertex(const Instance& inst, const Classification& cls,
                      const std::vector<int>& family) {
    std::vector<int> deg = part_degrees(inst, cls, family);
    int best = -1, best_deg = 0;
    cls.v0.for_each([&](std::size_t v) {
        if (best == -1 || deg[v] < best_deg) {
            best = static_cast<int>(v);
            best_deg = deg[v];
        }
    });
    return best;
}

bool recurse_b(BCtx& ctx, const PartialColoring& chi, std::uint64_t depth,
               const StepCheckB& check) {
    Classification cls = classify(ctx.inst, chi);
    VolumeMeasure vm = volumes(cls, ctx.inst.k);

    ++ctx.stats.nodes_total;
    ctx.stats.depth_max = std::max(ctx.stats.depth_max, depth);
    bool phase1 = static_cast<double>(vm.mu1) > ctx.delta_phase1;
    if (phase1)
        ++ctx.stats.nodes_phase1;
    else
        ++ctx.stats.nodes_phase2;

    if (ctx.opts.check_recurrences && check.present) {
        if (check.mu1_max >= 0 && static_cast<double>(vm.mu1) > check.mu1_max + kSlack)
            ++ctx.stats.recurrence_violations;
        if (check.mu2_max >= 0 && static_cast<double>(vm.mu2) > check.mu2_max + kSlack)
            ++ctx.stats.recurrence_violations;
        if (check.part_idx >= 0 &&
            static_cast<double>(cls.part_size(check.part_idx)) > check.part_max + kSlack)
            ++ctx.stats.recurrence_violations;
        if (check.part_must_be_empty >= 0 &&
            !cls.parts[static_cast<std::size_t>(check.part_must_be_empty)].empty())
            ++ctx.stats.recurrence_violations;
    }

    if (cls.improper()) return false;
    if (cls.active.empty()) {
        ctx.witness = chi;
        complete_untouched(ctx, ctx.witness);
        return true;
    }

    if (phase1) {
        double mu1 = static_cast<double>(vm.mu1);
        SolverBParams p = params_for(mu1, ctx.params.rho, ctx.inst.c_declared);
        std::vector<int> deg = part_degrees(ctx.inst, cls, cls.parts[0]);
        int best_v = -1, best_deg = -1;
        cls.v0.for_each([&](std::size_t v) {
            if (deg[v] > best_deg) {
                best_deg = deg[v];
                best_v = static_cast<int>(v);
            }
        });
        if (static_cast<double>(best_deg) >= p.eps1 * mu1 - kSlack) {
            StepCheckB child_check;
            child_check.present = true;
            child_check.mu1_max = (1.0 - p.eps1) * mu1;
            return branch_vertex_b(ctx, cls, chi, depth, best_v, child_check);
        }

        BalancedSet bs;
        StepCheckB probe_check, followup_check;
        probe_check.present = followup_check.present = true;
        if (ctx.mode == SolverBMode::Simplified) {
            int v = min_degree_vertex(ctx.inst, cls, cls.parts[0]);
            if (!simplified_set(ctx, cls, v, bs))
                return branch_vertex_b(ctx, cls, chi, depth, v, {});
            bs.target_part = 0;
            probe_check.mu1_max = mu1 - deg[static_cast<std::size_t>(v)];
            followup_check.mu1_max =
                static_cast<double>(deg[static_cast<std::size_t>(v)] + ctx.inst.c_declared);
        } else {
            bs = balanced_set_phase1(ctx.inst, cls, p.eps1, p.eps2);
            probe_check.mu1_max = (1.0 - (p.eps2 - (1.0 + ctx.inst.c_declared) * p.eps1)) * mu1;
            followup_check.mu1_max = p.eps2 * mu1 + ctx.inst.c_declared;
        }
        ++ctx.stats.probes;
        return probe_phase1(
            ctx.inst, cls, chi, bs,
            [&](const PartialColoring& cand, int followup_edge) {
                if (followup_edge >= 0) ++ctx.stats.probe_followups;
                return recurse_b(ctx, cand, depth + 1,
                                 followup_edge < 0 ? probe_check : followup_check);
            },
            &ctx.probe_skip_warnings);
    }

    // Phase II. Clean up the smallest part that fits below the threshold.
    int cleanup_part = -1;
    for (int i = 0; i <= ctx.inst.k; ++i) {
        int size = cls.part_size(i);
        if (size >= 1 && static_cast<double>(size) <= ctx.delta_cleanup + kSlack) {
            cleanup_part = i;
            break;
        }
    }
    if (cleanup_part >= 0) {
        ++ctx.stats.cleanups;
        StepCheckB child_check;
        child_check.present = true;
        child_check.part_must_be_empty = cleanup_part;
        return enumerate_simple(
            cls, ctx.inst, cleanup_part, chi,
            [&](const SimpleAssignment&, const PartialColoring& combined) {
                return recurse_b(ctx, combined, depth + 1, child_check);
            },
            /*prune_improper=*/true);
    }

    if (!cls.parts[0].empty())
        throw Error(ErrorKind::InternalInvariantViolation,
                    "phase II with a fully uncolored part above the clean-up threshold");

    int nonempty = 0, only_part = -1;
    for (int i = 1; i <= ctx.inst.k; ++i)
        if (cls.part_size(i) > 0) {
            ++nonempty;
            only_part = i;
        }
    if (nonempty == 1) {
        PartialColoring ext = avoid_color_extension(ctx.inst, chi, only_part);
        if (!is_proper_complete(ctx.inst, ext))
            throw Error(ErrorKind::InternalInvariantViolation,
                        "avoid-color extension is not proper");
        ctx.witness = ext;
        return true;
    }

    double mu2 = static_cast<double>(vm.mu2);
    SolverBParams p = params_for(mu2, ctx.params.rho, ctx.inst.c_declared);

    // Look for a vertex that is high degree in two different parts.
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(ctx.inst.k) + 1);
    for (int i = 1; i <= ctx.inst.k; ++i)
        if (cls.part_size(i) > 0)
            deg[static_cast<std::size_t>(i)] = part_degrees(ctx.inst, cls, cls.parts[static_cast<std::size_t>(i)]);
    int pick_v = -1, pick_i = -1, pick_j = -1;
    cls.v0.for_each([&](std::size_t v) {
        if (pick_v >= 0) return;
        int first = -1, second = -1;
        double first_r = 0, second_r = 0;
        for (int i = 1; i <= ctx.inst.k; ++i) {
            int size = cls.part_size(i);
            if (size == 0) continue;
            double d = static_cast<double>(deg[static_cast<std::size_t>(i)][v]);
            if (d < p.eps1 * static_cast<double>(size) - kSlack) continue;
            double r = d / static_cast<double>(size);
            if (first == -1 || r > first_r) {
                second = first;
                second_r = first_r;
                first = i;
                first_r = r;
            } else if (second == -1 || r > second_r) {
                second = i;
                second_r = r;
            }
        }
        if (second != -1) {
            pick_v = static_cast<int>(v);
            pick_i = first;
            pick_j = second;
        }
    });
    if (pick_v >= 0) {
        StepCheckB child_check;
        child_check.present = true;
        child_check.mu2_max = (1.0 - p.eps1) * mu2;
        return branch_vertex_b(ctx, cls, chi, depth, pick_v, child_check);
    }

    BalancedSet bs;
    int target;
    StepCheckB probe_check, followup_check;
    probe_check.present = followup_check.present = true;
    if (ctx.mode == SolverBMode::Simplified) {
        int v = min_degree_vertex(ctx.inst, cls, cls.active);
        if (!simplified_set(ctx, cls, v, bs))
            return branch_vertex_b(ctx, cls, chi, depth, v, {});
        // balance the largest part, ties to the smaller index
        target = 1;
        for (int i = 2; i <= ctx.inst.k; ++i)
            if (cls.part_size(i) > cls.part_size(target)) target = i;
        bs.target_part = target;
        int dv = deg[static_cast<std::size_t>(target)].empty()
                     ? 0
                     : deg[static_cast<std::size_t>(target)][static_cast<std::size_t>(v)];
        probe_check.part_idx = target;
        probe_check.part_max = static_cast<double>(cls.part_size(target) - dv);
        followup_check.part_idx = target;
        followup_check.part_max = static_cast<double>(dv + ctx.inst.c_declared);
    } else {
        Phase2BalanceResult r = balanced_set_phase2(ctx.inst, cls, p.eps1, p.eps2);
        if (r.is_vertex)
            throw Error(ErrorKind::InternalInvariantViolation,
                        "common high-degree vertex found although the threshold test failed");
        bs = std::move(r.set);
        target = r.i;
        probe_check.mu2_max = (1.0 - (p.eps2 - (1.0 + ctx.inst.c_declared) * p.eps1)) * mu2;
        followup_check.part_idx = target;
        followup_check.part_max =
            p.eps2 * static_cast<double>(cls.part_size(target)) + ctx.inst.c_declared;
    }
    ++ctx.stats.probes;
    return probe_phase2(
        ctx.inst, cls, chi, target, bs,
        [&](const PartialColoring& cand, int followup_edge) {
            if (followup_edge >= 0) ++ctx.stats.probe_followups;
            return recurse_b(ctx, cand, depth + 1,
                             followup_edge < 0 ? probe_check : followup_check);
        },
        &ctx.probe_skip_warnings);
}

} // namespace

SolveResult solve_b(const Instance& inst, SolverBMode mode, const SolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Params params = validate(inst);
    if (opts.strict_c && compute_c(inst) > inst.c_declared)
        throw Error(ErrorKind::CNotRespected,
                    "instance intersection deficiency exceeds the declared c");

    BCtx ctx{inst, params, opts, mode, 0, 0, {}, {}, 0};
    if (inst.m() >= 1) {
        ctx.delta_phase1 = params_for(static_cast<double>(inst.m()), params.rho, inst.c_declared).delta;
        double mu_k = std::pow(static_cast<double>(inst.m()), static_cast<double>(inst.k));
        if (!std::isfinite(mu_k)) mu_k = std::numeric_limits<double>::max() / 4;
        ctx.delta_cleanup = params_for(mu_k, params.rho, inst.c_declared).delta;
    }

    bool tiny_edge = false;
    for (const auto& e : inst.edges)
        if (e.size() <= 1) tiny_edge = true;

    bool ok = false;
    if (!tiny_edge) ok = recurse_b(ctx, PartialColoring(inst.n), 1, {});

    SolveResult res;
    if (ok) {
        if (!is_proper_complete(inst, ctx.witness))
            throw Error(ErrorKind::InternalInvariantViolation, "solver B produced a bad witness");
        res.decision = Decision::Colorable;
        res.coloring = ctx.witness;
    } else {
        res.decision = Decision::Uncolorable;
    }
    res.stats = ctx.stats;
    res.stats.runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
    return res;
}

} // namespace hlc
