#ifndef ARRCOH_SUBSPACE_HPP
#define ARRCOH_SUBSPACE_HPP

#include <cstddef>
#include <string>

#include "arrcoh/qmatrix.hpp"

namespace arrcoh {

/// A rational linear subspace of C^l in canonical equation form: each row of
/// `equations()` is a linear functional vanishing on the subspace, and the rows
/// are kept in RREF so equality is plain matrix comparison.
class Subspace {
public:
    /// The whole ambient space (no equations).
    explicit Subspace(std::size_t ambient_dim, std::string name = "");

    /// Canonicalizes the rows (RREF, dependent rows dropped). Rows of wrong
    /// length raise InputError.
    static Subspace from_equations(const QMatrix& rows, std::size_t ambient_dim,
                                   std::string name = "");

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t codim() const { return equations_.rows(); }
    const QMatrix& equations() const { return equations_; }
    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    bool same_space(const Subspace& rhs) const {
        return ambient_dim_ == rhs.ambient_dim_ && equations_ == rhs.equations_;
    }
    bool operator==(const Subspace& rhs) const { return same_space(rhs); }

    /// Total order on (ambient, codim, equations); names do not participate.
    bool operator<(const Subspace& rhs) const;

private:
    Subspace() = default;

    std::size_t ambient_dim_ = 0;
    QMatrix equations_; // RREF, rows independent
    std::string name_;
};

/// The join x v y = x n y: equations are the RREF of the stacked equations.
Subspace intersect(const Subspace& a, const Subspace& b);

/// True iff b is contained in a as point sets.
bool contains(const Subspace& a, const Subspace& b);

} // namespace arrcoh

#endif
