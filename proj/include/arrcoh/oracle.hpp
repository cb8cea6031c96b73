#ifndef ARRCOH_ORACLE_HPP
#define ARRCOH_ORACLE_HPP

#include <map>
#include <vector>

#include "arrcoh/cohomology.hpp"
#include "arrcoh/lattice.hpp"

namespace arrcoh {

inline constexpr std::size_t kDefaultOracleGate = 8;

/// Chains of a finite poset interval, closed under subsets by construction.
struct SimplicialComplex {
    std::size_t vertex_count = 0;
    // simplices grouped by dimension; a simplex is a sorted vertex list.
    // The empty simplex (dimension -1) is implicit in the homology routine.
    std::map<int, std::vector<std::vector<std::size_t>>> simplices;
};

/// Order complex of the open interval (bottom, x) in the lattice.
SimplicialComplex order_complex(const IntersectionLattice& lattice, std::size_t element);

/// Reduced simplicial Betti numbers over Q, by exact boundary ranks.
/// The empty complex has b~_{-1} = 1 (augmentation convention).
std::map<int, std::size_t> reduced_betti(const SimplicialComplex& sc);

/// Betti numbers of the complement by the lattice-homology route:
/// b_q = sum over lattice elements x > bottom of
///       b~_{2 codim(x) - 2 - q}(order complex of (bottom, x)), plus b_0 = 1.
/// Codimension is relative to the family ambient. Entirely independent of the
/// cochain model; used to cross-validate it.
PoincarePoly gm_poincare(const SubspaceFamily& family,
                         std::size_t gate = kDefaultOracleGate);

} // namespace arrcoh

#endif
