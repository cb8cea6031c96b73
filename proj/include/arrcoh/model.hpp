#ifndef ARRCOH_MODEL_HPP
#define ARRCOH_MODEL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "arrcoh/arrangement.hpp"

namespace arrcoh {

inline constexpr std::size_t kDefaultComplexCap = 16;

/// A basis element of the model: a subset of the family (bitset over member
/// indices) with degree 2*codim(join) - |subset|, codim relative to the
/// family ambient.
struct Generator {
    std::uint32_t bits = 0;
    int degree = 0;
    bool operator==(const Generator&) const = default;
};

/// One signed term of a differential or product.
struct SignedSubset {
    int sign = 0; // 0 encodes the zero element
    std::uint32_t bits = 0;
};

class CochainComplex;
struct QuotientComplex;
QuotientComplex quotient_complex(std::shared_ptr<const CochainComplex> full,
                                 std::size_t pivot_member);

/// The rational cochain model of the family complement: basis all subsets,
/// graded by degree, with the join-preserving boundary rule. Immutable after
/// construction.
class CochainComplex {
public:
    const SubspaceFamily& family() const { return family_; }

    const std::vector<int>& degrees() const { return degrees_; }
    bool has_degree(int q) const { return generators_.contains(q); }
    std::size_t dim(int q) const;
    const std::vector<Generator>& generators(int q) const;

    /// Matrix of d from degree q to q+1: rows index degree-(q+1) generators,
    /// columns index degree-q generators. Zero-shaped when a side is empty.
    const QMatrix& differential(int q) const;

    /// (degree, position) of a subset in the graded basis.
    std::pair<int, std::size_t> locate(std::uint32_t bits) const;
    int degree_of_bits(std::uint32_t bits) const { return locate(bits).first; }

    /// codim of the join of the subset, relative to the family ambient.
    std::size_t join_codim(std::uint32_t bits) const { return join_codims_.at(bits); }

    int min_degree() const { return degrees_.front(); }
    int max_degree() const { return degrees_.back(); }
    std::size_t total_dim() const;

    friend CochainComplex build_complex(const SubspaceFamily& family, std::size_t max_size);
    friend QuotientComplex quotient_complex(std::shared_ptr<const CochainComplex> full,
                                            std::size_t pivot_member);

private:
    SubspaceFamily family_{0};
    std::vector<int> degrees_;                       // sorted, as present
    std::map<int, std::vector<Generator>> generators_; // per degree, sorted by bits
    std::map<int, QMatrix> differentials_;           // per degree q: d_q
    std::unordered_map<std::uint32_t, std::pair<int, std::size_t>> locate_;
    std::vector<std::size_t> join_codims_;           // indexed by bits
    QMatrix empty_{0, 0};
};

using ComplexPtr = std::shared_ptr<const CochainComplex>;

/// Throws LimitError when the family exceeds `max_size` (2^n basis).
CochainComplex build_complex(const SubspaceFamily& family, std::size_t max_size = kDefaultComplexCap);
ComplexPtr build_complex_ptr(const SubspaceFamily& family, std::size_t max_size = kDefaultComplexCap);

/// deg(sigma) = 2 codim(join sigma) - |sigma| (codim relative to the ambient).
int degree_of(const SubspaceFamily& family, std::uint32_t bits);

/// d(sigma) = sum over 1-based positions j with join(sigma minus j-th) =
/// join(sigma) of (-1)^j (sigma minus j-th element), positions in family order.
std::vector<SignedSubset> differential_of(const SubspaceFamily& family, std::uint32_t bits);

/// sigma . tau: zero unless the subsets are disjoint and codims add up to the
/// codim of the union's join; otherwise the union signed by the shuffle
/// permutation placing tau after sigma.
SignedSubset product(const SubspaceFamily& family, std::uint32_t sigma, std::uint32_t tau);

/// Degree-homogeneous linear map between complexes (target degree = source
/// degree + shift), stored as one block per source degree.
class ChainMap {
public:
    ChainMap(ComplexPtr source, ComplexPtr target, int shift);

    const CochainComplex& source() const { return *source_; }
    const CochainComplex& target() const { return *target_; }
    ComplexPtr source_ptr() const { return source_; }
    ComplexPtr target_ptr() const { return target_; }
    int shift() const { return shift_; }

    const QMatrix& block(int source_degree) const;
    QMatrix& mutable_block(int source_degree);

    /// Exact per-degree check of d(target) . f = f . d(source).
    bool commutes_with_differential() const;

    /// Apply to a coefficient vector in the degree-q source basis.
    std::vector<Rational> apply(int source_degree, const std::vector<Rational>& coeffs) const;

    static ChainMap identity(ComplexPtr complex);
    ChainMap composed_with(const ChainMap& inner) const; // this after inner

private:
    ComplexPtr source_;
    ComplexPtr target_;
    int shift_ = 0;
    std::map<int, QMatrix> blocks_; // source degree -> block
};

/// Inclusion of the model of a sub-family whose members all appear in the
/// larger family in the same relative order (D(A') into D(A), D(A'') into
/// D(A~'')). Signs vanish because positions agree.
ChainMap family_inclusion(ComplexPtr sub, ComplexPtr full);

/// The quotient D(A)/D(A') by the pivot member: basis = subsets containing the
/// pivot (kept in a complex of its own), plus the projection chain map.
struct QuotientComplex {
    ComplexPtr complex;
    ChainMap projection;
};

} // namespace arrcoh

#endif
