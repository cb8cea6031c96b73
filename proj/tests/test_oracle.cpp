#include <doctest.h>

#include "arrcoh/errors.hpp"
#include "arrcoh/oracle.hpp"
#include "support.hpp"

using namespace arrcoh;
using namespace arrcoh::testing;

TEST_CASE("order complex of an atom's interval is empty") {
    SubspaceFamily single(3);
    single.add(coordinate_subspace(3, {0, 1}, "x"));
    const IntersectionLattice lat = build_lattice(single);
    const SimplicialComplex sc = order_complex(lat, lat.top());
    CHECK(sc.vertex_count == 0);
    CHECK(sc.simplices.empty());
    const auto rb = reduced_betti(sc);
    CHECK(rb == std::map<int, std::size_t>{{-1, 1}});
}

TEST_CASE("order complex below the top of example 2 is three isolated points") {
    const IntersectionLattice lat = build_lattice(example2().family());
    const SimplicialComplex sc = order_complex(lat, lat.top());
    CHECK(sc.vertex_count == 3);
    CHECK(sc.simplices.at(0).size() == 3);
    CHECK_FALSE(sc.simplices.contains(1));
    CHECK(reduced_betti(sc) == std::map<int, std::size_t>{{0, 2}});
}

TEST_CASE("order complex of (bottom, h0 n h1) in example 1: two incomparable points") {
    const IntersectionLattice lat = build_lattice(example1().family());
    // find h0 n h1 among the elements
    const Subspace target = intersect(example1().member(0), example1().member(1));
    std::size_t found = lat.size();
    for (std::size_t i = 0; i < lat.size(); ++i)
        if (lat.element(i).same_space(target)) found = i;
    REQUIRE(found < lat.size());
    const SimplicialComplex sc = order_complex(lat, found);
    CHECK(sc.vertex_count == 2);
    CHECK_FALSE(sc.simplices.contains(1));
    CHECK(reduced_betti(sc) == std::map<int, std::size_t>{{0, 1}});
}

TEST_CASE("reduced homology of a triangle boundary") {
    SimplicialComplex sc;
    sc.vertex_count = 3;
    sc.simplices[0] = {{0}, {1}, {2}};
    sc.simplices[1] = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(reduced_betti(sc) == std::map<int, std::size_t>{{1, 1}});
}

TEST_CASE("oracle reproduces the sphere for a single subspace") {
    for (std::size_t c = 1; c <= 3; ++c) {
        SubspaceFamily f(4);
        std::vector<std::size_t> coords;
        for (std::size_t i = 0; i < c; ++i) coords.push_back(i);
        f.add(coordinate_subspace(4, coords, "x"));
        CHECK(gm_poincare(f) == PoincarePoly{{0, 1}, {2 * static_cast<int>(c) - 1, 1}});
    }
}

TEST_CASE("oracle reproduces the example fixtures") {
    CHECK(gm_poincare(example1().family()) == PoincarePoly{{0, 1}, {3, 1}, {5, 2}, {6, 2}});
    CHECK(gm_poincare(example2().family()) == PoincarePoly{{0, 1}, {3, 3}, {4, 2}});
}

TEST_CASE("oracle is gated") {
    CHECK_THROWS_AS(gm_poincare(boolean_arrangement(4, 5).family(), 3), LimitError);
    CHECK_THROWS_AS(gm_poincare(SubspaceFamily(3)), PreconditionError);
}

TEST_CASE("oracle agrees with the model on the random corpus") {
    Rng rng(987654);
    for (int trial = 0; trial < 40; ++trial) {
        const Arrangement arr = random_arrangement(rng, 6, 6);
        CHECK(gm_poincare(arr.family()) == poincare(arr.family()));
    }
}

TEST_CASE("oracle agrees with the model on hyperplane arrangements") {
    Rng rng(24601);
    for (int trial = 0; trial < 15; ++trial) {
        const Arrangement arr = random_hyperplane_arrangement(rng, 6, 4);
        CHECK(gm_poincare(arr.family()) == poincare(arr.family()));
    }
}
