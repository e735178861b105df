#include "hlc/derandomize.hpp"

namespace hlc {

namespace {

// Probability that edge e ends monochromatic, given the trace information in
// cls. For a fully uncolored edge every common list color counts; for an edge
// already carrying color i only i can complete the monochrome.
mpq_class edge_probability(const Instance& inst, const Classification& cls, int e, int part) {
    ColorMask common = ~ColorMask{0};
    mpz_class denom = 1;
    for (int v : inst.edges[e]) {
        if (!cls.v0.test(static_cast<std::size_t>(v))) continue;
        common &= inst.lists[v];
        denom *= inst.list_size(v);
    }
    int favorable;
    if (part == 0) {
        favorable = mask_size(common);
    } else {
        favorable = mask_has(common, part) ? 1 : 0;
    }
    if (favorable == 0) return mpq_class(0);
    mpq_class p(mpz_class(favorable), denom);
    p.canonicalize();
    return p;
}

mpq_class expectation_from(const Instance& inst, const Classification& cls) {
    mpq_class total = cls.improper_edges;
    for (int e : cls.active)
        total += edge_probability(inst, cls, e, cls.part_of[static_cast<std::size_t>(e)]);
    return total;
}

} // namespace

mpq_class expected_monochromatic(const Instance& inst, const PartialColoring& chi) {
    Classification cls = classify(inst, chi);
    if (cls.improper())
        throw Error(ErrorKind::ImproperInput,
                    "expected_monochromatic requires a proper partial coloring");
    return expectation_from(inst, cls);
}

mpq_class expectation_with_penalty(const Instance& inst, const PartialColoring& chi) {
    Classification cls = classify(inst, chi);
    return expectation_from(inst, cls);
}

PartialColoring derandomize(const Instance& inst, const PartialColoring& chi) {
    PartialColoring out = chi;
    for (int v = 0; v < inst.n; ++v) {
        if (out.assigned(v)) continue;
        int best_color = 0;
        mpq_class best_value;
        ColorMask l = inst.lists[v];
        for (int c = 1; c <= inst.k; ++c) {
            if (!mask_has(l, c)) continue;
            out.assign(v, c);
            mpq_class val = expectation_with_penalty(inst, out);
            if (best_color == 0 || val < best_value) {
                best_color = c;
                best_value = val;
            }
        }
        out.assign(v, best_color);
    }
    return out;
}

PartialColoring avoid_color_extension(const Instance& inst, const PartialColoring& chi, int i) {
    Classification cls = classify(inst, chi);
    if (!cls.parts[0].empty())
        throw Error(ErrorKind::PreconditionViolated,
                    "avoid_color_extension requires no fully uncolored edges");
    for (int j = 1; j <= inst.k; ++j) {
        if (j == i) continue;
        if (!cls.parts[static_cast<std::size_t>(j)].empty())
            throw Error(ErrorKind::PreconditionViolated,
                        "avoid_color_extension: part " + std::to_string(j) + " is non-empty");
    }
    PartialColoring out = chi;
    for (int v = 0; v < inst.n; ++v) {
        if (out.assigned(v)) continue;
        ColorMask usable = inst.lists[v] & ~((i >= 1) ? mask_bit(i) : ColorMask{0});
        int c = mask_min(usable);
        if (c == 0)
            throw Error(ErrorKind::PreconditionViolated,
                        "avoid_color_extension: vertex " + std::to_string(v) +
                            " has no color other than " + std::to_string(i));
        out.assign(v, c);
    }
    return out;
}

} // namespace hlc
