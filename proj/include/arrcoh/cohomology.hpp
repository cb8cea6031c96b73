#ifndef ARRCOH_COHOMOLOGY_HPP
#define ARRCOH_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>

#include "arrcoh/model.hpp"

namespace arrcoh {

/// Sparse polynomial in t with integer coefficients, degree -> coefficient.
/// Betti polynomials have nonnegative entries; differences may not.
using PoincarePoly = std::map<int, long long>;

std::map<int, std::size_t> betti(const CochainComplex& complex);
PoincarePoly poincare_of(const CochainComplex& complex);
PoincarePoly poincare(const SubspaceFamily& family, std::size_t max_size = kDefaultComplexCap);

long long euler(const PoincarePoly& poly);

PoincarePoly poly_add(const PoincarePoly& a, const PoincarePoly& b);
PoincarePoly poly_sub(const PoincarePoly& a, const PoincarePoly& b);
PoincarePoly poly_shift(const PoincarePoly& a, int exponent); // multiply by t^exponent
bool poly_is_zero(const PoincarePoly& a);

/// Ascending-degree rendering: "1 + 2t + t^3"; "0" for the zero polynomial.
std::string to_string(const PoincarePoly& poly);

/// Deterministic cocycle/coboundary/representative bases per degree. The
/// coboundary basis is the RREF row space of the incoming differential and
/// representatives extend it to the cocycle space by pivot-greedy selection,
/// so induced-map matrices are reproducible.
class CohomologyBasis {
public:
    explicit CohomologyBasis(ComplexPtr complex);

    const CochainComplex& complex() const { return *complex_; }
    ComplexPtr complex_ptr() const { return complex_; }

    std::size_t betti(int degree) const;
    std::map<int, std::size_t> betti_all() const;
    PoincarePoly poincare() const;

    /// Representatives of a degree's cohomology classes, as coefficient rows.
    const std::vector<std::vector<Rational>>& representatives(int degree) const;

    /// Coordinates of a cocycle's class in the representative basis, or
    /// nullopt when the vector is not a cocycle of that degree.
    std::optional<std::vector<Rational>> class_coordinates(int degree,
                                                           const std::vector<Rational>& cocycle) const;

    /// Batched form: columns of `cocycles` are vectors of the given degree;
    /// returns the betti(degree) x cols coordinate matrix, one elimination
    /// for the whole batch.
    std::optional<QMatrix> class_coordinates_many(int degree, const QMatrix& cocycles) const;

private:
    struct DegreeData {
        QMatrix cocycles{0, 0};      // rows: basis of ker d_q
        QMatrix coboundaries{0, 0};  // rows: basis of im d_{q-1}
        std::vector<std::vector<Rational>> reps;
        QMatrix express{0, 0};       // [reps; coboundaries] stacked rows
    };

    const DegreeData& data(int degree) const;

    ComplexPtr complex_;
    std::map<int, DegreeData> degrees_;
    DegreeData empty_;
};

/// Matrices of the map induced on cohomology, one block per source degree
/// carrying nonzero source cohomology. Throws CheckError if `f` is not a
/// chain map or maps some representative to a non-cocycle.
std::map<int, QMatrix> induced_maps(const ChainMap& f, const CohomologyBasis& source,
                                    const CohomologyBasis& target);

/// Every induced block is a square isomorphism.
bool is_quasi_isomorphism(const ChainMap& f, const CohomologyBasis& source,
                          const CohomologyBasis& target);

} // namespace arrcoh

#endif
