#include <doctest.h>

#include <random>

#include "hlc/derandomize.hpp"
#include "test_support.hpp"

using namespace hlc;
using namespace hlc::testing;

namespace {

// Brute-force average of the monochromatic-active-edge count over all
// completions of the uncolored vertices.
mpq_class brute_expectation(const Instance& inst, const PartialColoring& chi) {
    Classification cls = classify(inst, chi);
    std::vector<int> free_vertices = cls.v0.to_vector();
    mpz_class completions = 1;
    for (int v : free_vertices) completions *= inst.list_size(v);

    mpz_class total = 0;
    PartialColoring full = chi;
    std::vector<std::vector<int>> choices;
    for (int v : free_vertices) {
        std::vector<int> cs;
        for (int c = 1; c <= inst.k; ++c)
            if (inst.list_has(v, c)) cs.push_back(c);
        choices.push_back(cs);
    }
    std::vector<std::size_t> idx(free_vertices.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_vertices.size(); ++i)
            full.assign(free_vertices[i], choices[i][idx[i]]);
        for (int e : cls.active) {
            ColorMask seen = 0;
            for (int v : inst.edges[static_cast<std::size_t>(e)]) seen |= mask_bit(full[v]);
            if (mask_size(seen) < 2) ++total;
        }
        std::size_t i = free_vertices.size();
        while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) {
            idx[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
    }
    if (completions == 0) return mpq_class(0);
    mpq_class avg(total, completions);
    avg.canonicalize();
    return avg;
}

} // namespace

TEST_SUITE("derandomizer") {

TEST_CASE("expected_monochromatic on frozen examples") {
    SUBCASE("one triple edge, all lists {1,2}") {
        Instance inst = make_uniform(3, 2, 0, {{0, 1, 2}}, list_of({1, 2}));
        PartialColoring chi(3);
        CHECK(expected_monochromatic(inst, chi) == mpq_class(1, 4));
        CHECK(brute_expectation(inst, chi) == mpq_class(1, 4));
    }
    SUBCASE("triangle") {
        Instance inst = make_uniform(3, 2, 0, {{0, 1}, {1, 2}, {0, 2}}, list_of({1, 2}));
        PartialColoring chi(3);
        CHECK(expected_monochromatic(inst, chi) == mpq_class(3, 2));
        CHECK(brute_expectation(inst, chi) == mpq_class(3, 2));
    }
    SUBCASE("partially colored triple edge") {
        Instance inst = make_uniform(3, 2, 0, {{0, 1, 2}}, list_of({1, 2}));
        PartialColoring chi(3);
        chi.assign(0, 1);
        CHECK(expected_monochromatic(inst, chi) == mpq_class(1, 4));
    }
}

TEST_CASE("expected_monochromatic rejects improper colorings") {
    Instance inst = make_uniform(2, 2, 0, {{0, 1}}, list_of({1, 2}));
    PartialColoring chi{{1, 1}};
    try {
        expected_monochromatic(inst, chi);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ImproperInput);
    }
}

TEST_CASE("expectation equals the brute-force average exactly") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 150; ++round) {
        Instance inst = random_instance(rng, 8, 6, 4);
        PartialColoring chi = random_proper_partial(rng, inst);
        CHECK(expected_monochromatic(inst, chi) == brute_expectation(inst, chi));
    }
}

TEST_CASE("conditional expectation is the average over one vertex's colors") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 100; ++round) {
        Instance inst = random_instance(rng, 8, 6, 4);
        PartialColoring chi = random_proper_partial(rng, inst);
        Classification cls = classify(inst, chi);
        if (cls.v0.empty()) continue;
        int v = cls.v0.to_vector().front();
        mpq_class sum = 0;
        mpq_class before = expectation_with_penalty(inst, chi);
        mpq_class best;
        bool have_best = false;
        for (int c = 1; c <= inst.k; ++c) {
            if (!inst.list_has(v, c)) continue;
            PartialColoring next = chi;
            next.assign(v, c);
            mpq_class val = expectation_with_penalty(inst, next);
            sum += val;
            if (!have_best || val < best) {
                best = val;
                have_best = true;
            }
        }
        CHECK(sum == before * inst.list_size(v));  // martingale identity
        CHECK(best <= before);                     // the greedy step never increases it
    }
}

TEST_CASE("derandomize returns a proper extension whenever the expectation is below 1") {
    SUBCASE("frozen examples") {
        Instance tri = make_uniform(3, 2, 0, {{0, 1, 2}}, list_of({1, 2}));
        PartialColoring chi(3);
        REQUIRE(expected_monochromatic(tri, chi) < 1);
        PartialColoring ext = derandomize(tri, chi);
        CHECK(is_proper_complete(tri, ext));

        Instance pairs = make_uniform(4, 3, 1, {{0, 1}, {2, 3}}, list_of({1, 2, 3}));
        REQUIRE(expected_monochromatic(pairs, PartialColoring(4)) == mpq_class(2, 3));
        CHECK(is_proper_complete(pairs, derandomize(pairs, PartialColoring(4))));
    }
    SUBCASE("random instances") {
        std::mt19937_64 rng(37);
        int below_one = 0;
        for (int round = 0; round < 200; ++round) {
            Instance inst = random_instance(rng, 9, 7, 4);
            PartialColoring chi = random_proper_partial(rng, inst);
            if (expected_monochromatic(inst, chi) < 1) {
                ++below_one;
                PartialColoring ext = derandomize(inst, chi);
                CHECK(is_proper_complete(inst, ext));
            }
        }
        CHECK(below_one > 20);
    }
}

TEST_CASE("derandomize leaves fully colored inputs unchanged") {
    Instance inst = make_uniform(2, 2, 0, {{0, 1}}, list_of({1, 2}));
    PartialColoring chi{{1, 2}};
    CHECK(derandomize(inst, chi) == chi);
}

TEST_CASE("avoid_color_extension") {
    SUBCASE("forced choice on a part-1 edge") {
        Instance inst = make_uniform(3, 2, 0, {{0, 1, 2}}, list_of({1, 2}));
        PartialColoring chi(3);
        chi.assign(0, 1);
        PartialColoring ext = avoid_color_extension(inst, chi, 1);
        CHECK(ext[1] == 2);
        CHECK(ext[2] == 2);
        CHECK(is_proper_complete(inst, ext));
    }
    SUBCASE("no active parts still fills with non-i colors") {
        Instance inst = make_uniform(3, 2, 0, {}, list_of({1, 2}));
        PartialColoring ext = avoid_color_extension(inst, PartialColoring(3), 1);
        for (int v = 0; v < 3; ++v) CHECK(ext[v] == 2);
    }
    SUBCASE("smallest color different from i per list") {
        Instance inst = make_instance(2, 3, 0, {}, {list_of({1, 2}), list_of({1, 3})});
        PartialColoring ext = avoid_color_extension(inst, PartialColoring(2), 1);
        CHECK(ext[0] == 2);
        CHECK(ext[1] == 3);
    }
    SUBCASE("rejects a second non-empty part") {
        Instance inst = make_uniform(4, 2, 99, {{0, 1}, {2, 3}}, list_of({1, 2}));
        PartialColoring chi(4);
        chi.assign(0, 1);
        chi.assign(2, 2);
        try {
            avoid_color_extension(inst, chi, 1);
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PreconditionViolated);
        }
    }
    SUBCASE("never assigns the avoided color") {
        std::mt19937_64 rng(41);
        for (int round = 0; round < 100; ++round) {
            Instance inst = random_instance(rng, 7, 0, 4);
            int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(inst.k));
            PartialColoring ext = avoid_color_extension(inst, PartialColoring(inst.n), i);
            for (int v = 0; v < inst.n; ++v) CHECK(ext[v] != i);
        }
    }
}

} // TEST_SUITE
