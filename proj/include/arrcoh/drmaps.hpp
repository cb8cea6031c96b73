#ifndef ARRCOH_DRMAPS_HPP
#define ARRCOH_DRMAPS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "arrcoh/cohomology.hpp"
#include "arrcoh/lattice.hpp"

namespace arrcoh {

/// Workspace for a triple (A, A', A'') at a pivot: the pivot-first
/// class-contiguous reordering, the five complexes and the structural chain
/// maps between them. Everything is verified at construction (chain-map
/// identities are checked, not assumed).
class DeletionRestriction {
public:
    DeletionRestriction(const Arrangement& arr, std::size_t pivot,
                        std::size_t max_size = kDefaultComplexCap);

    std::size_t pivot() const { return classes_.pivot; }
    const EquivalenceClasses& classes() const { return classes_; }
    const Arrangement& reordered() const { return classes_.reordered; }
    const Subspace& pivot_subspace() const { return reordered().member(0); }

    /// deg(x0) = 2 codim(x0) - 1, the degree shift of the long exact sequence.
    int pivot_degree() const { return pivot_degree_; }

    ComplexPtr full() const { return full_; }          // D(A)
    ComplexPtr deleted_part() const { return deleted_; } // D(A')
    ComplexPtr quotient() const { return quotient_; }  // D(A)/D(A')
    ComplexPtr tilde() const { return tilde_; }        // D(A~'')
    ComplexPtr restricted() const { return restricted_; } // D(A'')

    const ChainMap& inclusion() const { return *inclusion_; }     // j
    const ChainMap& projection() const { return *projection_; }   // p
    const ChainMap& phi() const { return *phi_; }                 // D(A) -> D(A~'')
    const ChainMap& phi_bar() const { return *phi_bar_; }         // quotient -> D(A~'')
    const ChainMap& tilde_inclusion() const { return *tilde_inclusion_; } // D(A'') -> D(A~'')

    bool separator() const { return separator_; }

    /// k(sigma) = sigma if x0 not in sigma, 0 otherwise. Only a chain map when
    /// the pivot is a separator; refused otherwise.
    ChainMap k_map() const;

    /// Cohomology bases are built on first use and cached.
    const CohomologyBasis& full_cohomology() const;
    const CohomologyBasis& deleted_cohomology() const;
    const CohomologyBasis& quotient_cohomology() const;
    const CohomologyBasis& tilde_cohomology() const;
    const CohomologyBasis& restricted_cohomology() const;

    /// Image in D(A')^{q+1} of the connecting zigzag applied to a degree-q
    /// quotient cochain: lift to D(A) (optionally perturbed by a D(A')
    /// cochain of the same degree), differentiate, read off the x0-free part.
    std::vector<Rational> connecting_image(int quotient_degree,
                                           const std::vector<Rational>& quotient_coeffs,
                                           const std::vector<Rational>* lift_perturbation = nullptr) const;

private:
    std::size_t max_size_;
    EquivalenceClasses classes_;
    std::vector<std::size_t> class_of_; // reordered member index (>= 1) -> class index
    int pivot_degree_ = 0;
    bool separator_ = false;

    ComplexPtr full_;
    ComplexPtr deleted_;
    ComplexPtr quotient_;
    ComplexPtr tilde_;
    ComplexPtr restricted_;

    std::optional<ChainMap> inclusion_;
    std::optional<ChainMap> projection_;
    std::optional<ChainMap> phi_;
    std::optional<ChainMap> phi_bar_;
    std::optional<ChainMap> tilde_inclusion_;

    mutable std::optional<CohomologyBasis> h_full_, h_deleted_, h_quotient_, h_tilde_, h_restricted_;
};

/// One node-by-node exactness audit of the long exact sequence
///   ... -> H^q(A') -> H^q(A) -> H^{q-deg(x0)}(A'') -> H^{q+1}(A') -> ...
/// with the restricted cohomology identified through phi-bar and the tilde
/// inclusion (both verified quasi-isomorphisms, never assumed).
struct TripleReport {
    std::size_t pivot = 0;
    std::string pivot_name;
    std::vector<std::size_t> permutation;            // reordered index -> original index
    std::vector<std::vector<std::size_t>> classes;   // equivalence classes (original indices)
    int pivot_degree = 0;

    PoincarePoly poincare_full;
    PoincarePoly poincare_deleted;
    PoincarePoly poincare_restricted;

    bool separator = false;
    bool pp_holds = false;
    PoincarePoly deficit;            // Poin(A') + t^deg Poin(A'') - Poin(A), always >= 0

    bool phi_bar_quasi_iso = false;
    bool tilde_inclusion_quasi_iso = false;
    bool les_exact = false;
    std::map<int, std::size_t> connecting_ranks;     // restricted degree -> rank of delta
};

TripleReport les_report(const Arrangement& arr, std::size_t pivot,
                        std::size_t max_size = kDefaultComplexCap);
TripleReport les_report(const DeletionRestriction& dr, const std::string& pivot_name = "");

/// Poin(A) = Poin(A') + t^{deg(x0)} Poin(A''), coefficientwise.
bool pp_check(const Arrangement& arr, std::size_t pivot,
              std::size_t max_size = kDefaultComplexCap);

/// theta : D(A') -> D(A~''), bijective on generators, commuting with d, with
/// even per-generator degree drops. Defined only for geometric-lattice
/// arrangements with a separator pivot.
struct ThetaMap {
    ComplexPtr source;  // D(A')
    ComplexPtr target;  // D(A~'')
    bool commutes = false;
    std::map<std::uint32_t, int> degree_drops; // generator bits -> even drop
};
ThetaMap theta(const Arrangement& arr, std::size_t pivot,
               std::size_t max_size = kDefaultComplexCap);

/// The four Betti-sum relations between A' and A'' under the theta hypotheses.
struct BettiSumRelations {
    PoincarePoly poincare_deleted;
    PoincarePoly poincare_restricted;
    bool even_sums_equal = false;
    bool odd_sums_equal = false;
    bool total_sums_equal = false;
    bool partial_sums_dominated = false; // every prefix sum of A' <= same prefix of A''
    bool all() const {
        return even_sums_equal && odd_sums_equal && total_sums_equal && partial_sums_dominated;
    }
};
BettiSumRelations betti_sum_relations(const Arrangement& arr, std::size_t pivot,
                                      std::size_t max_size = kDefaultComplexCap);

/// Hyperplane separator pivot on a geometric lattice:
/// Poin(A') = Poin(A'') and Poin(A) = (1+t) Poin(A'').
struct HyperplaneSeparatorCheck {
    PoincarePoly poincare_full;
    PoincarePoly poincare_deleted;
    PoincarePoly poincare_restricted;
    bool deleted_equals_restricted = false;
    bool product_formula = false;
    bool all() const { return deleted_equals_restricted && product_formula; }
};
HyperplaneSeparatorCheck hyperplane_separator_check(const Arrangement& arr, std::size_t pivot,
                                                    std::size_t max_size = kDefaultComplexCap);

/// U + V as a subspace (used to cross-check theta's degree drops).
Subspace subspace_sum(const Subspace& a, const Subspace& b);

} // namespace arrcoh

#endif
