#ifndef ARRCOH_ARRANGEMENT_HPP
#define ARRCOH_ARRANGEMENT_HPP

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "arrcoh/subspace.hpp"

namespace arrcoh {

/// Ordered, named list of pairwise distinct subspaces, possibly living inside a
/// proper subspace of C^l (restricted families). The family's effective ambient
/// space is `ambient()`; for restricted families that is the pivot x0 and
/// codimensions are measured relative to it (`ambient_offset()`).
class SubspaceFamily {
public:
    /// Family in the full space C^l.
    explicit SubspaceFamily(std::size_t ambient_dim);

    /// Family living inside `ambient` (all members must be contained in it).
    explicit SubspaceFamily(Subspace ambient);

    void add(Subspace member);

    std::size_t ambient_dim() const { return ambient_.ambient_dim(); }
    std::size_t ambient_offset() const { return ambient_.codim(); }
    const Subspace& ambient() const { return ambient_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const Subspace& member(std::size_t i) const { return members_.at(i); }
    const std::vector<Subspace>& members() const { return members_; }

    /// Index of an equal subspace, or npos.
    std::size_t find(const Subspace& s) const;
    std::size_t find_name(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Join of the selected members (the empty join is the family ambient).
    Subspace join(const std::vector<std::size_t>& indices) const;
    Subspace join_bits(std::uint32_t bits) const;

    /// codim relative to the family ambient.
    std::size_t relative_codim(const Subspace& s) const { return s.codim() - ambient_offset(); }

    bool has_containment_pair(std::size_t* bigger = nullptr, std::size_t* smaller = nullptr) const;

private:
    Subspace ambient_;
    std::vector<Subspace> members_;
};

/// A subspace family with the no-containment invariant: no member contains another.
class Arrangement {
public:
    /// Validates the invariant; throws InputError naming the offending pair.
    explicit Arrangement(SubspaceFamily family);

    const SubspaceFamily& family() const { return family_; }
    std::size_t ambient_dim() const { return family_.ambient_dim(); }
    std::size_t size() const { return family_.size(); }
    const Subspace& member(std::size_t i) const { return family_.member(i); }

private:
    SubspaceFamily family_;
};

/// A' = A \ {member i}; order preserved.
Arrangement deleted_arrangement(const Arrangement& arr, std::size_t pivot);

/// The family {x0 n y | y in A'} with equal intersections identified, order
/// induced from A' (first occurrence), living inside x0. Throws
/// PreconditionError on singleton arrangements.
SubspaceFamily restrict_tilde(const Arrangement& arr, std::size_t pivot);

/// The restricted arrangement A'': maximal members of the tilde family.
Arrangement restricted_arrangement(const Arrangement& arr, std::size_t pivot);

/// Partition of A' by x0 n y, plus the pivot-first, class-contiguous reordering
/// used by the deletion-restriction maps.
struct EquivalenceClasses {
    std::size_t pivot = 0;                          // pivot index in the input arrangement
    std::vector<std::vector<std::size_t>> blocks;   // original indices, grouped, block order = first occurrence
    Arrangement reordered;                          // pivot first, then blocks (stable within blocks)
    std::vector<std::size_t> permutation;           // reordered index -> original index
};
EquivalenceClasses equivalence_classes(const Arrangement& arr, std::size_t pivot);

/// x0 is a separator iff the intersection of all other members is not contained in x0.
bool is_separator(const Arrangement& arr, std::size_t pivot);

} // namespace arrcoh

#endif
