#ifndef HLC_TEST_SUPPORT_HPP
#define HLC_TEST_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "hlc/types.hpp"

namespace hlc::testing {

// Lines of the projective plane PG(2, q) for prime q: q^2+q+1 pairwise
// intersecting (q+1)-sets in which every point has degree q+1. The stock
// low-degree intersecting family for balanced-set tests.
inline std::vector<std::vector<int>> pg_lines(int q) {
    auto normalized = [&](std::array<int, 3> v) {
        for (int i = 0; i < 3; ++i) {
            if (v[i] % q == 0) continue;
            int inv = 1;
            for (int t = 1; t < q; ++t)
                if (v[i] * t % q == 1) inv = t;
            for (int j = 0; j < 3; ++j) v[j] = v[j] * inv % q;
            return v;
        }
        return v;
    };
    std::vector<std::array<int, 3>> points;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            for (int z = 0; z < q; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                auto p = normalized({x, y, z});
                if (std::find(points.begin(), points.end(), p) == points.end())
                    points.push_back(p);
            }
    std::vector<std::vector<int>> lines;
    for (const auto& l : points) {
        std::vector<int> line;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            if ((l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0)
                line.push_back(static_cast<int>(i));
        }
        std::sort(line.begin(), line.end());
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

inline ColorMask list_of(std::initializer_list<int> colors) {
    ColorMask m = 0;
    for (int c : colors) m |= mask_bit(c);
    return m;
}

inline ColorMask full_list(int k) {
    return (k == 64) ? ~ColorMask{0} : (mask_bit(k + 1) - 1);
}

inline Instance make_instance(int n, int k, int c, std::vector<std::vector<int>> edges,
                              std::vector<ColorMask> lists) {
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.c_declared = c;
    inst.edges = std::move(edges);
    inst.lists = std::move(lists);
    inst.finalize();
    return inst;
}

inline Instance make_uniform(int n, int k, int c, std::vector<std::vector<int>> edges,
                             ColorMask list) {
    return make_instance(n, k, c, std::move(edges),
                         std::vector<ColorMask>(static_cast<std::size_t>(n), list));
}

// PG(2,3) lines relabeled so the points of one line are 9..12: removing
// vertices in ascending order then stalls with exactly that line induced.
inline std::vector<std::vector<int>> relabeled_pg3_lines() {
    auto lines = pg_lines(3);
    const std::vector<int>& last = lines.front();
    std::vector<int> perm(13, -1);
    int hi = 9, lo = 0;
    for (int v : last) perm[static_cast<std::size_t>(v)] = hi++;
    for (int v = 0; v < 13; ++v)
        if (perm[static_cast<std::size_t>(v)] == -1) perm[static_cast<std::size_t>(v)] = lo++;
    for (auto& line : lines) {
        for (auto& v : line) v = perm[static_cast<std::size_t>(v)];
        std::sort(line.begin(), line.end());
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

// Arbitrary small hypergraph with random lists of size >= 2; c_declared is
// the true deficiency, so the recurrence checks apply.
inline Instance random_instance(std::mt19937_64& rng, int max_n = 10, int max_m = 8,
                                int max_k = 4, int min_edge = 2) {
    std::uniform_int_distribution<int> nd(3, max_n), md(0, max_m), kd(2, max_k);
    int n = nd(rng), m = md(rng), k = kd(rng);
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < m; ++e) {
        std::uniform_int_distribution<int> sz(min_edge, n);
        int size = sz(rng);
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> edge(pool.begin(), pool.begin() + size);
        std::sort(edge.begin(), edge.end());
        edges.push_back(std::move(edge));
    }
    std::vector<ColorMask> lists;
    for (int v = 0; v < n; ++v) {
        std::uniform_int_distribution<int> sd(2, k);
        int size = sd(rng);
        std::vector<int> colors(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) colors[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(colors.begin(), colors.end(), rng);
        ColorMask mask = 0;
        for (int i = 0; i < size; ++i) mask |= mask_bit(colors[static_cast<std::size_t>(i)]);
        lists.push_back(mask);
    }
    Instance inst = make_instance(n, k, 0, std::move(edges), std::move(lists));
    inst.c_declared = compute_c(inst);
    return inst;
}

// Random proper partial coloring: colors a random subset of vertices from
// their lists, rejecting monochromatic completions.
inline PartialColoring random_proper_partial(std::mt19937_64& rng, const Instance& inst,
                                             double color_prob = 0.4) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 200; ++attempt) {
        PartialColoring chi(inst.n);
        for (int v = 0; v < inst.n; ++v) {
            if (coin(rng) >= color_prob) continue;
            std::vector<int> colors;
            for (int c = 1; c <= inst.k; ++c)
                if (inst.list_has(v, c)) colors.push_back(c);
            std::uniform_int_distribution<std::size_t> pick(0, colors.size() - 1);
            chi.assign(v, colors[pick(rng)]);
        }
        if (!classify(inst, chi).improper()) return chi;
    }
    return PartialColoring(inst.n);  // all uncolored is always proper
}

} // namespace hlc::testing

#endif
