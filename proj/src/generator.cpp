#include "hlc/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace hlc {

namespace {

using Rng = std::mt19937_64;

// Uniform integer in [0, n) from raw engine output; avoids the
// implementation-defined std::uniform_int_distribution.
std::uint64_t below(Rng& rng, std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// C(n, r) saturating at UINT64_MAX.
std::uint64_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
        if (acc > UINT64_MAX / num) return UINT64_MAX;
        acc = acc * num / static_cast<std::uint64_t>(i);
    }
    return acc;
}

std::vector<int> sample_subset(Rng& rng, const std::vector<int>& pool, int size) {
    std::vector<int> items = pool;
    for (int i = 0; i < size; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(below(rng, items.size() - static_cast<std::size_t>(i)));
        std::swap(items[static_cast<std::size_t>(i)], items[j]);
    }
    items.resize(static_cast<std::size_t>(size));
    std::sort(items.begin(), items.end());
    return items;
}

ColorMask random_list(Rng& rng, int k) {
    int size = 2 + static_cast<int>(below(rng, static_cast<std::uint64_t>(k - 1)));
    std::vector<int> colors(static_cast<std::size_t>(k));
    std::iota(colors.begin(), colors.end(), 1);
    ColorMask mask = 0;
    for (int c : sample_subset(rng, colors, size)) mask |= mask_bit(c);
    return mask;
}

// One edge of size >= floor(n/2)+1 over `pool`, size weighted by the number
// of sets of that size so the draw is uniform over all majority subsets.
std::vector<int> sample_majority_edge(Rng& rng, const std::vector<int>& pool) {
    int n = static_cast<int>(pool.size());
    int min_size = n / 2 + 1;
    std::uint64_t total = 0;
    for (int s = min_size; s <= n; ++s) total += binom(n, s);
    std::uint64_t pick = below(rng, total);
    int size = min_size;
    for (int s = min_size; s <= n; ++s) {
        std::uint64_t w = binom(n, s);
        if (pick < w) {
            size = s;
            break;
        }
        pick -= w;
    }
    return sample_subset(rng, pool, size);
}

std::uint64_t majority_count(int n) {
    std::uint64_t total = 0;
    for (int s = n / 2 + 1; s <= n; ++s) {
        std::uint64_t w = binom(n, s);
        if (total > UINT64_MAX - w) return UINT64_MAX;
        total += w;
    }
    return total;
}

Instance assemble(int n, int k, int c_declared, std::vector<std::vector<int>> edges,
                  std::vector<ColorMask> lists) {
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.c_declared = c_declared;
    inst.edges = std::move(edges);
    inst.lists = std::move(lists);
    inst.finalize();
    return inst;
}

} // namespace

Instance gen_intersecting(int n, int m, int k, std::uint64_t seed) {
    if (n < 3 || m < 1 || k < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    "gen_intersecting requires n >= 3, m >= 1, k >= 2");
    if (static_cast<std::uint64_t>(m) > majority_count(n))
        throw Error(ErrorKind::TooManyEdges,
                    "fewer than m distinct majority-size edges exist");
    Rng rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::set<std::vector<int>> chosen;
    while (static_cast<int>(chosen.size()) < m) chosen.insert(sample_majority_edge(rng, pool));
    std::vector<std::vector<int>> edges(chosen.begin(), chosen.end());
    std::vector<ColorMask> lists;
    lists.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) lists.push_back(random_list(rng, k));
    return assemble(n, k, 0, std::move(edges), std::move(lists));
}

Instance gen_c_intersecting(int n, int m, int k, int c_target, std::uint64_t seed) {
    if (c_target < 0)
        throw Error(ErrorKind::PreconditionViolated, "gen_c_intersecting requires c_target >= 0");
    if (c_target == 0) {
        Instance inst = gen_intersecting(n, m, k, seed);
        return inst;
    }
    // Core block A (even size) plus a reserved block of c_target + 1 tag
    // vertices. Planted edges pair the two halves of A with tags: one edge on
    // the first half misses exactly the c_target edges on the second half,
    // and everything touches every core edge.
    int tags = c_target + 1;
    int planted = c_target + 1;
    int core_m = m - planted;
    int a = n - tags;
    if (a % 2 == 1) --a;
    if (a < 4 || core_m < 1)
        throw Error(ErrorKind::Infeasible,
                    "gen_c_intersecting: n or m too small for the requested c");
    if (static_cast<std::uint64_t>(core_m) > majority_count(a))
        throw Error(ErrorKind::TooManyEdges,
                    "fewer than m - c - 1 distinct majority-size core edges exist");

    Rng rng(seed);
    // random labelling so the blocks are not positional
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[static_cast<std::size_t>(i)],
                  label[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i) + 1))]);

    std::vector<int> block_a(label.begin(), label.begin() + a);
    std::vector<int> half1(block_a.begin(), block_a.begin() + a / 2);
    std::vector<int> half2(block_a.begin() + a / 2, block_a.end());
    std::vector<int> tag(label.begin() + a, label.begin() + a + tags);

    std::set<std::vector<int>> core;
    while (static_cast<int>(core.size()) < core_m) {
        std::vector<int> e = sample_majority_edge(rng, block_a);
        core.insert(std::move(e));
    }

    std::vector<std::vector<int>> edges(core.begin(), core.end());
    auto plant = [&](const std::vector<int>& half, int tag_vertex) {
        std::vector<int> e = half;
        e.push_back(tag_vertex);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    };
    plant(half1, tag[0]);
    for (int i = 1; i <= c_target; ++i) plant(half2, tag[static_cast<std::size_t>(i)]);

    std::vector<ColorMask> lists;
    lists.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) lists.push_back(random_list(rng, k));
    Instance inst = assemble(n, k, c_target, std::move(edges), std::move(lists));
    if (compute_c(inst) != c_target)
        throw Error(ErrorKind::Infeasible,
                    "gen_c_intersecting: construction missed the target deficiency");
    return inst;
}

Instance gen_uncolorable(int k, std::uint64_t seed) {
    if (k < 2)
        throw Error(ErrorKind::PreconditionViolated, "gen_uncolorable requires k >= 2");
    int n = k + 1;
    Rng rng(seed);
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(label[static_cast<std::size_t>(i)],
                  label[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i) + 1))]);

    std::vector<std::vector<int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<int> e{label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]};
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
    std::sort(edges.begin(), edges.end());

    ColorMask full = (k == 64) ? ~ColorMask{0} : (mask_bit(k + 1) - 1);
    std::vector<ColorMask> lists(static_cast<std::size_t>(n), full);
    int c = static_cast<int>(binom(k - 1, 2));
    return assemble(n, k, c, std::move(edges), std::move(lists));
}

} // namespace hlc
