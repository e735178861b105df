#include <doctest.h>

#include "hlc/generator.hpp"
#include "hlc/oracle.hpp"
#include "hlc/solver_a.hpp"
#include "hlc/solver_b.hpp"
#include "test_support.hpp"

using namespace hlc;
using namespace hlc::testing;

TEST_SUITE("generator") {

TEST_CASE("gen_intersecting produces pairwise intersecting edges") {
    Instance inst = gen_intersecting(5, 3, 3, 42);
    validate(inst);
    CHECK(compute_c(inst) == 0);
    for (const auto& e : inst.edges) CHECK(static_cast<int>(e.size()) >= 5 / 2 + 1);
}

TEST_CASE("gen_intersecting rejects impossible edge counts") {
    // n=4 has C(4,3)+C(4,4) = 5 majority sets
    CHECK_NOTHROW(gen_intersecting(4, 5, 2, 1));
    try {
        gen_intersecting(4, 7, 2, 1);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooManyEdges);
    }
}

TEST_CASE("generators are deterministic in the seed") {
    Instance a = gen_intersecting(8, 6, 4, 123);
    Instance b = gen_intersecting(8, 6, 4, 123);
    CHECK(a.edges == b.edges);
    CHECK(a.lists == b.lists);
    Instance c = gen_intersecting(8, 6, 4, 124);
    CHECK((a.edges != c.edges || a.lists != c.lists));

    Instance d = gen_c_intersecting(12, 9, 3, 2, 5);
    Instance e = gen_c_intersecting(12, 9, 3, 2, 5);
    CHECK(d.edges == e.edges);
    CHECK(d.lists == e.lists);
}

TEST_CASE("gen_c_intersecting hits the target deficiency exactly") {
    for (int c : {0, 1, 2, 3}) {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            Instance inst = gen_c_intersecting(14, 10, 3, c, seed);
            validate(inst);
            CHECK(inst.c_declared == c);
            CHECK(compute_c(inst) == c);
        }
    }
}

TEST_CASE("gen_c_intersecting reports infeasible shapes") {
    try {
        gen_c_intersecting(5, 3, 3, 3, 1);  // no room for core + 4 planted edges
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK((e.kind() == ErrorKind::Infeasible || e.kind() == ErrorKind::TooManyEdges));
    }
}

TEST_CASE("gen_uncolorable") {
    SUBCASE("k = 2 gives a triangle with c = 0") {
        Instance inst = gen_uncolorable(2, 9);
        validate(inst);
        CHECK(inst.n == 3);
        CHECK(inst.m() == 3);
        CHECK(inst.c_declared == 0);
        CHECK(compute_c(inst) == 0);
        CHECK(solve_brute(inst).decision == Decision::Uncolorable);
    }
    SUBCASE("k = 3 gives K4 with c = 1") {
        Instance inst = gen_uncolorable(3, 9);
        CHECK(inst.n == 4);
        CHECK(inst.m() == 6);
        CHECK(inst.c_declared == 1);
        CHECK(compute_c(inst) == 1);
        CHECK(solve_brute(inst).decision == Decision::Uncolorable);
    }
    SUBCASE("widening the lists to three colors makes the triangle colorable") {
        Instance inst = gen_uncolorable(2, 9);
        inst.k = 3;
        for (auto& l : inst.lists) l = full_list(3);
        inst.finalize();
        CHECK(solve_brute(inst).decision == Decision::Colorable);
    }
}

TEST_CASE("generated instances validate and declare their true c") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 30; ++round) {
        std::uint64_t seed = rng();
        Instance a = gen_intersecting(7 + static_cast<int>(seed % 5), 5, 3, seed);
        validate(a);
        CHECK(compute_c(a) == a.c_declared);
        Instance b = gen_c_intersecting(13, 8, 4, static_cast<int>(seed % 4), seed);
        validate(b);
        CHECK(compute_c(b) == b.c_declared);
    }
}

TEST_CASE("intersecting instances with three full colors are always colorable") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 25; ++round) {
        std::uint64_t seed = rng();
        Instance inst = gen_intersecting(9, 6, 3, seed);
        for (auto& l : inst.lists) l = full_list(3);
        inst.finalize();
        CHECK(solve_a(inst).decision == Decision::Colorable);
        CHECK(solve_b(inst).decision == Decision::Colorable);
    }
}

} // TEST_SUITE
