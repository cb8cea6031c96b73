#ifndef ARRCOH_LATTICE_HPP
#define ARRCOH_LATTICE_HPP

#include <cstddef>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

/// All intersections of family members ordered by reverse inclusion.
/// Element 0 is the bottom (the family ambient); elements are sorted by
/// (codim, equations) so indices are deterministic. Join (= subspace
/// intersection) and meet tables are precomputed.
class IntersectionLattice {
public:
    std::size_t size() const { return elements_.size(); }
    const Subspace& element(std::size_t i) const { return elements_.at(i); }

    /// a <= b in the lattice order (reverse inclusion: a contains b pointwise).
    bool leq(std::size_t a, std::size_t b) const { return leq_.at(a).at(b); }

    std::size_t join(std::size_t a, std::size_t b) const { return join_.at(a).at(b); }
    std::size_t meet(std::size_t a, std::size_t b) const { return meet_.at(a).at(b); }

    std::size_t bottom() const { return 0; }
    std::size_t top() const;

    /// Indices of the atoms (covers of the bottom element).
    const std::vector<std::size_t>& atoms() const { return atoms_; }

    /// Cover pairs (a, b) with a covered by b.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

    /// Longest-chain-from-bottom rank per element; this is the grading when
    /// the lattice is graded (chain-length rank, not codimension).
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    /// All maximal chains between comparable elements have equal length.
    bool is_graded() const { return graded_; }

    friend IntersectionLattice build_lattice(const SubspaceFamily& family);

private:
    std::vector<Subspace> elements_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<std::size_t>> join_;
    std::vector<std::vector<std::size_t>> meet_;
    std::vector<std::size_t> atoms_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::size_t> ranks_;
    bool graded_ = false;
};

IntersectionLattice build_lattice(const SubspaceFamily& family);

/// Graded + atomic + semimodular for the chain-length rank.
bool is_geometric(const IntersectionLattice& lattice);

} // namespace arrcoh

#endif
