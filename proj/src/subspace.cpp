#include "arrcoh/subspace.hpp"

#include <utility>

#include "arrcoh/errors.hpp"

namespace arrcoh {

Subspace::Subspace(std::size_t ambient_dim, std::string name)
    : ambient_dim_(ambient_dim), equations_(0, ambient_dim), name_(std::move(name)) {}

Subspace Subspace::from_equations(const QMatrix& rows, std::size_t ambient_dim, std::string name) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
        throw InputError("equation row length " + std::to_string(rows.cols()) +
                         " does not match ambient dimension " + std::to_string(ambient_dim));
    Subspace s;
    s.ambient_dim_ = ambient_dim;
    QMatrix fixed = rows;
    if (fixed.rows() == 0) fixed = QMatrix(0, ambient_dim);
    s.equations_ = rref(fixed).matrix;
    s.name_ = std::move(name);
    return s;
}

bool Subspace::operator<(const Subspace& rhs) const {
    if (ambient_dim_ != rhs.ambient_dim_) return ambient_dim_ < rhs.ambient_dim_;
    if (codim() != rhs.codim()) return codim() < rhs.codim();
    return equations_.compare(rhs.equations_) < 0;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("intersect: ambient dimension mismatch");
    return Subspace::from_equations(QMatrix::vstack(a.equations(), b.equations()), a.ambient_dim());
}

bool contains(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("contains: ambient dimension mismatch");
    // b ⊆ a iff a's equations already vanish on b, i.e. stacking adds no rank.
    return rank(QMatrix::vstack(a.equations(), b.equations())) == b.codim();
}

} // namespace arrcoh
