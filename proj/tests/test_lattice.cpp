#include <doctest.h>

#include "arrcoh/lattice.hpp"
#include "support.hpp"

using namespace arrcoh;
using namespace arrcoh::testing;

TEST_CASE("lattice of example 2: ambient, three lines, origin") {
    const IntersectionLattice lat = build_lattice(example2().family());
    CHECK(lat.size() == 5);
    CHECK(lat.element(lat.bottom()).codim() == 0);
    CHECK(lat.element(lat.top()).codim() == 3);
    CHECK(lat.atoms().size() == 3);
}

TEST_CASE("lattice of the empty family is the ambient alone") {
    const IntersectionLattice lat = build_lattice(SubspaceFamily(3));
    CHECK(lat.size() == 1);
    CHECK(lat.bottom() == lat.top());
}

TEST_CASE("lattice of example 1 has seven distinct joins") {
    // 2^3 joins collapse: h1 n h2 and h0 n h1 n h2 are both the origin
    const IntersectionLattice lat = build_lattice(example1().family());
    CHECK(lat.size() == 7);
}

TEST_CASE("join and meet satisfy idempotence and absorption") {
    Rng rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        const Arrangement arr = random_arrangement(rng, 4, 5);
        const IntersectionLattice lat = build_lattice(arr.family());
        for (std::size_t x = 0; x < lat.size(); ++x) {
            CHECK(lat.join(x, x) == x);
            CHECK(lat.meet(x, x) == x);
            for (std::size_t y = 0; y < lat.size(); ++y) {
                CHECK(lat.join(x, lat.meet(x, y)) == x);
                CHECK(lat.meet(x, lat.join(x, y)) == x);
                CHECK(lat.join(x, y) == lat.join(y, x));
                CHECK(lat.meet(x, y) == lat.meet(y, x));
            }
        }
    }
}

TEST_CASE("meet agrees with its definition as the least common coarsening") {
    Rng rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const Arrangement arr = random_arrangement(rng, 4, 4);
        const IntersectionLattice lat = build_lattice(arr.family());
        for (std::size_t x = 0; x < lat.size(); ++x)
            for (std::size_t y = 0; y < lat.size(); ++y) {
                // intersection (as subspaces) of every element containing both
                Subspace acc(arr.ambient_dim());
                for (std::size_t z = 0; z < lat.size(); ++z)
                    if (lat.leq(z, x) && lat.leq(z, y)) acc = intersect(acc, lat.element(z));
                CHECK(lat.element(lat.meet(x, y)).same_space(acc));
            }
    }
}

TEST_CASE("boolean lattices are geometric") {
    CHECK(is_geometric(build_lattice(boolean_arrangement(3, 3).family())));
    CHECK(is_geometric(build_lattice(block_arrangement(3, 2, 6).family())));
}

TEST_CASE("example 1 does not have a geometric lattice") {
    CHECK_FALSE(is_geometric(build_lattice(example1().family())));
}

TEST_CASE("example 2 has a geometric lattice") {
    CHECK(is_geometric(build_lattice(example2().family())));
}

TEST_CASE("a single subspace gives a two-element chain, geometric") {
    SubspaceFamily family(4);
    family.add(coordinate_subspace(4, {0, 1}, "x"));
    const IntersectionLattice lat = build_lattice(family);
    CHECK(lat.size() == 2);
    CHECK(is_geometric(lat));
}

TEST_CASE("gradedness detects unequal maximal chains") {
    // example 1: ambient < h1 < origin is refinable through h0 n h1 while
    // ambient < h0 n h1 jumps; ranks stay consistent because covers do
    const IntersectionLattice lat = build_lattice(example1().family());
    CHECK(lat.is_graded());
    // two coordinate axes in C^3 with the plane spanned: rank function exists
    const IntersectionLattice axes = build_lattice(
        [] {
            SubspaceFamily f(3);
            f.add(coordinate_subspace(3, {1, 2}, "zx"));
            f.add(coordinate_subspace(3, {0, 2}, "zy"));
            return f;
        }());
    CHECK(axes.is_graded());
    CHECK(is_geometric(axes));
}
