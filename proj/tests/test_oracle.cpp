#include <doctest.h>

#include <random>

#include "hlc/derandomize.hpp"
#include "hlc/oracle.hpp"
#include "test_support.hpp"

using namespace hlc;
using namespace hlc::testing;

TEST_SUITE("oracle") {

TEST_CASE("triangle with two colors is uncolorable") {
    Instance inst = make_uniform(3, 2, 0, {{0, 1}, {1, 2}, {0, 2}}, list_of({1, 2}));
    CHECK(solve_brute(inst).decision == Decision::Uncolorable);
    CHECK(count_proper(inst) == 0);
}

TEST_CASE("disjoint pairs find the lexicographically first coloring") {
    Instance inst = make_uniform(4, 2, 1, {{0, 1}, {2, 3}}, list_of({1, 2}));
    SolveResult res = solve_brute(inst);
    REQUIRE(res.decision == Decision::Colorable);
    CHECK(res.coloring == PartialColoring{{1, 2, 1, 2}});
}

TEST_CASE("empty hypergraph is colorable") {
    Instance inst = make_uniform(2, 2, 0, {}, list_of({1, 2}));
    CHECK(solve_brute(inst).decision == Decision::Colorable);
    CHECK(count_proper(inst) == 4);
}

TEST_CASE("count_proper") {
    CHECK(count_proper(make_uniform(2, 2, 0, {{0, 1}}, list_of({1, 2}))) == 2);
    CHECK(count_proper(make_uniform(1, 2, 0, {{0}}, list_of({1, 2}))) == 0);
}

TEST_CASE("count positive exactly when colorable") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_instance(rng, 7, 6, 3, 1);
        CHECK((count_proper(inst) > 0) ==
              (solve_brute(inst).decision == Decision::Colorable));
    }
}

TEST_CASE("witnesses are proper") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_instance(rng, 8, 6, 4, 1);
        SolveResult res = solve_brute(inst);
        if (res.decision == Decision::Colorable) CHECK(is_proper_complete(inst, res.coloring));
    }
}

TEST_CASE("budget is enforced") {
    Instance inst = make_uniform(40, 4, 0, {{0, 1, 2}}, list_of({1, 2, 3, 4}));
    try {
        solve_brute(inst, 1000);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    CHECK_THROWS_AS(count_proper(inst, 1000), Error);
}

TEST_CASE("expectation times list product equals the total monochromatic count") {
    // cross-module exact identity on the all-zero coloring
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        Instance inst = random_instance(rng, 6, 5, 3);
        PartialColoring chi(inst.n);
        mpq_class expectation = expected_monochromatic(inst, chi);

        mpz_class completions = 1;
        for (int v = 0; v < inst.n; ++v) completions *= inst.list_size(v);

        // enumerate every total list coloring, counting monochromatic edges
        mpz_class total = 0;
        std::vector<std::vector<int>> choices;
        for (int v = 0; v < inst.n; ++v) {
            std::vector<int> cs;
            for (int c = 1; c <= inst.k; ++c)
                if (inst.list_has(v, c)) cs.push_back(c);
            choices.push_back(cs);
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(inst.n), 0);
        PartialColoring full(inst.n);
        while (true) {
            for (int v = 0; v < inst.n; ++v)
                full.assign(v, choices[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]]);
            for (const auto& edge : inst.edges) {
                ColorMask seen = 0;
                for (int v : edge) seen |= mask_bit(full[v]);
                if (mask_size(seen) < 2) ++total;
            }
            int v = inst.n - 1;
            while (v >= 0 && ++idx[static_cast<std::size_t>(v)] ==
                                 choices[static_cast<std::size_t>(v)].size()) {
                idx[static_cast<std::size_t>(v)] = 0;
                --v;
            }
            if (v < 0) break;
        }
        CHECK(expectation * completions == total);
    }
}

} // TEST_SUITE
