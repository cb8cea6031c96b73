#ifndef ARRCOH_TESTS_SUPPORT_HPP
#define ARRCOH_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int magnitude = 3) {
    std::uniform_int_distribution<int> num(-magnitude, magnitude);
    return make_rational(num(rng));
}

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int magnitude = 3) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_rational(rng, magnitude);
    return m;
}

inline std::optional<Subspace> random_subspace(Rng& rng, std::size_t ambient, std::string name) {
    std::uniform_int_distribution<std::size_t> codim_pick(1, ambient);
    const std::size_t target = codim_pick(rng);
    const Subspace s =
        Subspace::from_equations(random_matrix(rng, target, ambient), ambient, std::move(name));
    if (s.codim() == 0) return std::nullopt; // all-zero rows happen at small magnitudes
    return s;
}

/// Random nonempty arrangement with at most max_members members in C^l,
/// l <= max_ambient. Containment pairs are skipped (kept maximal).
inline Arrangement random_arrangement(Rng& rng, std::size_t max_members,
                                      std::size_t max_ambient) {
    std::uniform_int_distribution<std::size_t> ambient_pick(1, max_ambient);
    const std::size_t ambient = ambient_pick(rng);
    std::uniform_int_distribution<std::size_t> count_pick(1, max_members);
    const std::size_t want = count_pick(rng);

    SubspaceFamily family(ambient);
    for (int attempt = 0; attempt < 80 && family.size() < want; ++attempt) {
        auto s = random_subspace(rng, ambient, "s" + std::to_string(family.size()));
        if (!s) continue;
        if (family.find(*s) != SubspaceFamily::npos) continue;
        bool comparable = false;
        for (const Subspace& m : family.members())
            if (contains(m, *s) || contains(*s, m)) {
                comparable = true;
                break;
            }
        if (comparable) continue;
        family.add(std::move(*s));
    }
    if (family.empty()) {
        // the origin always works
        family.add(Subspace::from_equations(QMatrix::identity(ambient), ambient, "s0"));
    }
    return Arrangement(std::move(family));
}

/// Random hyperplane arrangement (all members of codimension one).
inline Arrangement random_hyperplane_arrangement(Rng& rng, std::size_t max_members,
                                                 std::size_t max_ambient) {
    std::uniform_int_distribution<std::size_t> ambient_pick(1, max_ambient);
    const std::size_t ambient = ambient_pick(rng);
    std::uniform_int_distribution<std::size_t> count_pick(1, max_members);
    const std::size_t want = count_pick(rng);

    SubspaceFamily family(ambient);
    for (int attempt = 0; attempt < 80 && family.size() < want; ++attempt) {
        const Subspace s = Subspace::from_equations(random_matrix(rng, 1, ambient), ambient,
                                                    "h" + std::to_string(family.size()));
        if (s.codim() != 1) continue;
        if (family.find(s) != SubspaceFamily::npos) continue;
        family.add(s);
    }
    if (family.empty()) {
        QMatrix e1(1, ambient);
        e1.at(0, 0) = 1;
        family.add(Subspace::from_equations(e1, ambient, "h0"));
    }
    return Arrangement(std::move(family));
}

/// Coordinate subspace killing the given coordinates.
inline Subspace coordinate_subspace(std::size_t ambient, const std::vector<std::size_t>& coords,
                                    std::string name) {
    QMatrix rows(coords.size(), ambient);
    for (std::size_t r = 0; r < coords.size(); ++r) rows.at(r, coords[r]) = 1;
    return Subspace::from_equations(rows, ambient, std::move(name));
}

/// The Boolean arrangement of the first n coordinate hyperplanes in C^l.
inline Arrangement boolean_arrangement(std::size_t n, std::size_t ambient) {
    SubspaceFamily family(ambient);
    for (std::size_t i = 0; i < n; ++i)
        family.add(coordinate_subspace(ambient, {i}, "x" + std::to_string(i)));
    return Arrangement(std::move(family));
}

/// Transverse coordinate-block arrangement: member i kills a block of `block`
/// consecutive coordinates. Boolean lattice, every pivot a separator.
inline Arrangement block_arrangement(std::size_t members, std::size_t block,
                                     std::size_t ambient) {
    SubspaceFamily family(ambient);
    for (std::size_t i = 0; i < members; ++i) {
        std::vector<std::size_t> coords;
        for (std::size_t b = 0; b < block; ++b) coords.push_back(i * block + b);
        family.add(coordinate_subspace(ambient, coords, "x" + std::to_string(i)));
    }
    return Arrangement(std::move(family));
}

/// The two worked example arrangements shipped as fixtures.
inline Arrangement example1() {
    SubspaceFamily family(5);
    family.add(coordinate_subspace(5, {0, 4}, "h0"));
    family.add(coordinate_subspace(5, {0, 1, 2}, "h1"));
    family.add(coordinate_subspace(5, {2, 3, 4}, "h2"));
    return Arrangement(std::move(family));
}

inline Arrangement example2() {
    SubspaceFamily family(3);
    family.add(coordinate_subspace(3, {1, 2}, "h0"));
    family.add(coordinate_subspace(3, {0, 2}, "h1"));
    family.add(coordinate_subspace(3, {0, 1}, "h2"));
    return Arrangement(std::move(family));
}

} // namespace arrcoh::testing

#endif
