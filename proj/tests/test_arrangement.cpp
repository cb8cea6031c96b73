#include <doctest.h>

#include "arrcoh/errors.hpp"
#include "arrcoh/lattice.hpp"
#include "support.hpp"

using namespace arrcoh;
using namespace arrcoh::testing;

TEST_CASE("subspace construction canonicalizes equations") {
    // h0 of the C^5 fixture: z1 = z5 = 0
    const Subspace h0 = coordinate_subspace(5, {0, 4}, "h0");
    CHECK(h0.codim() == 2);

    const Subspace ambient = Subspace::from_equations(QMatrix(0, 0), 3);
    CHECK(ambient.codim() == 0);

    // dependent rows collapse
    const QMatrix rows{{1, 0, 0}, {2, 0, 0}};
    CHECK(Subspace::from_equations(rows, 3).codim() == 1);

    CHECK_THROWS_AS(Subspace::from_equations(QMatrix{{1, 0}}, 3), InputError);
}

TEST_CASE("intersect matches the fixture codimensions") {
    const Arrangement a = example1();
    CHECK(intersect(a.member(1), a.member(2)).codim() == 5); // h1 n h2 = origin
    CHECK(intersect(a.member(0), a.member(1)).codim() == 4); // h0 n h1
    const Subspace ambient(5);
    CHECK(intersect(a.member(0), ambient).same_space(a.member(0)));
}

TEST_CASE("contains") {
    const Subspace ambient(3);
    const Subspace line = coordinate_subspace(3, {1, 2}, "line");
    const Subspace origin = coordinate_subspace(3, {0, 1, 2}, "origin");
    CHECK(contains(ambient, line));
    CHECK(contains(ambient, origin));
    CHECK(contains(line, origin));
    CHECK_FALSE(contains(origin, line));

    const Arrangement a = example1();
    CHECK_FALSE(contains(a.member(1), a.member(2)));
}

TEST_CASE("join over index sets") {
    const Arrangement a = example1();
    CHECK(a.family().join({}).codim() == 0);
    CHECK(a.family().join({0, 1, 2}).codim() == 5);
    CHECK(a.family().join({1}).same_space(a.member(1)));
}

TEST_CASE("deleted arrangement preserves order") {
    const Arrangement a = example1();
    const Arrangement del = deleted_arrangement(a, 0);
    REQUIRE(del.size() == 2);
    CHECK(del.member(0).name() == "h1");
    CHECK(del.member(1).name() == "h2");

    SubspaceFamily single(3);
    single.add(coordinate_subspace(3, {0}, "x"));
    const Arrangement one(std::move(single));
    CHECK(deleted_arrangement(one, 0).size() == 0);
}

TEST_CASE("restriction of example 1 at h0 keeps two incomparable pieces") {
    const Arrangement a = example1();
    const SubspaceFamily tilde = restrict_tilde(a, 0);
    REQUIRE(tilde.size() == 2);
    CHECK(tilde.ambient_offset() == 2);
    CHECK(tilde.member(0).codim() == 4);
    CHECK(tilde.member(1).codim() == 4);

    const Arrangement restricted = restricted_arrangement(a, 0);
    CHECK(restricted.size() == 2); // neither contains the other
}

TEST_CASE("restriction of example 2 at h0 is a single point") {
    const Arrangement b = example2();
    const SubspaceFamily tilde = restrict_tilde(b, 0);
    CHECK(tilde.size() == 1); // equal intersections identified
    CHECK(tilde.ambient_offset() == 2);
    CHECK(restricted_arrangement(b, 0).size() == 1);
}

TEST_CASE("restriction prunes strictly contained members") {
    // at h1 of example 1: h1 n h2 = origin sits inside h1 n h0
    const Arrangement a = example1();
    const SubspaceFamily tilde = restrict_tilde(a, 1);
    CHECK(tilde.size() == 2);
    const Arrangement restricted = restricted_arrangement(a, 1);
    REQUIRE(restricted.size() == 1);
    CHECK(restricted.member(0).codim() == 4);
}

TEST_CASE("restriction needs at least two members") {
    SubspaceFamily single(3);
    single.add(coordinate_subspace(3, {0}, "x"));
    const Arrangement one(std::move(single));
    CHECK_THROWS_AS(restrict_tilde(one, 0), PreconditionError);
}

TEST_CASE("two transverse hyperplanes restrict to a point") {
    const Arrangement two = boolean_arrangement(2, 2);
    const Arrangement restricted = restricted_arrangement(two, 0);
    REQUIRE(restricted.size() == 1);
    CHECK(restricted.family().relative_codim(restricted.member(0)) == 1);
}

TEST_CASE("equivalence classes at the pivot") {
    const Arrangement b = example2();
    const EquivalenceClasses one_class = equivalence_classes(b, 0);
    REQUIRE(one_class.blocks.size() == 1);
    CHECK(one_class.blocks[0] == std::vector<std::size_t>{1, 2});
    CHECK(one_class.reordered.member(0).name() == "h0");
    CHECK(one_class.permutation == std::vector<std::size_t>{0, 1, 2});

    const Arrangement a = example1();
    const EquivalenceClasses singletons = equivalence_classes(a, 0);
    CHECK(singletons.blocks.size() == 2);

    // distinct intersections: all singletons, order unchanged
    const EquivalenceClasses at_h1 = equivalence_classes(a, 1);
    CHECK(at_h1.blocks.size() == 2);
    CHECK(at_h1.reordered.member(0).name() == "h1");
    CHECK(at_h1.reordered.member(1).name() == "h0");
    CHECK(at_h1.reordered.member(2).name() == "h2");
}

TEST_CASE("separators of the example fixtures") {
    const Arrangement a = example1();
    CHECK_FALSE(is_separator(a, 0));
    CHECK(is_separator(a, 1));
    CHECK(is_separator(a, 2));

    const Arrangement b = example2();
    CHECK_FALSE(is_separator(b, 0));
}

TEST_CASE("arrangement rejects containment pairs") {
    SubspaceFamily family(3);
    family.add(coordinate_subspace(3, {0}, "plane"));
    family.add(coordinate_subspace(3, {0, 1}, "line"));
    CHECK_THROWS_AS(Arrangement(std::move(family)), InputError);
}

TEST_CASE("restricted arrangements never keep a containment pair") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Arrangement arr = random_arrangement(rng, 5, 5);
        if (arr.size() < 2) continue;
        for (std::size_t pivot = 0; pivot < arr.size(); ++pivot) {
            const Arrangement restricted = restricted_arrangement(arr, pivot);
            CHECK_FALSE(restricted.family().has_containment_pair());
        }
    }
}

TEST_CASE("join codimension is monotone in the subset") {
    Rng rng(1234);
    for (int trial = 0; trial < 25; ++trial) {
        const Arrangement arr = random_arrangement(rng, 5, 5);
        const std::uint32_t total = std::uint32_t{1} << arr.size();
        std::vector<std::size_t> codims(total);
        for (std::uint32_t bits = 0; bits < total; ++bits)
            codims[bits] = arr.family().join_bits(bits).codim();
        for (std::uint32_t bits = 1; bits < total; ++bits)
            for (std::size_t i = 0; i < arr.size(); ++i)
                if (bits & (std::uint32_t{1} << i))
                    CHECK(codims[bits ^ (std::uint32_t{1} << i)] <= codims[bits]);
    }
}

TEST_CASE("geometric separator lemma: the removal biconditional over all subsets") {
    // for every I and i not in I: x0 n x_I = x0 n x_{I+i}  iff  x_I = x_{I+i}
    auto check_lemma = [](const Arrangement& arr, std::size_t pivot) {
        const Subspace& x0 = arr.member(pivot);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (i != pivot) rest.push_back(i);
        const std::uint32_t total = std::uint32_t{1} << rest.size();
        for (std::uint32_t bits = 0; bits < total; ++bits) {
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < rest.size(); ++k)
                if (bits & (std::uint32_t{1} << k)) idx.push_back(rest[k]);
            const Subspace x_I = arr.family().join(idx);
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (bits & (std::uint32_t{1} << k)) continue;
                auto bigger = idx;
                bigger.push_back(rest[k]);
                const Subspace x_Ii = arr.family().join(bigger);
                const bool lhs = intersect(x0, x_I).same_space(intersect(x0, x_Ii));
                const bool rhs = x_I.same_space(x_Ii);
                CHECK(lhs == rhs);
            }
        }
    };

    for (const Arrangement& arr :
         {boolean_arrangement(3, 3), boolean_arrangement(4, 4), block_arrangement(3, 2, 6)}) {
        REQUIRE(is_geometric(build_lattice(arr.family())));
        for (std::size_t pivot = 0; pivot < arr.size(); ++pivot) {
            REQUIRE(is_separator(arr, pivot));
            check_lemma(arr, pivot);
        }
    }
}
