#ifndef ARRCOH_QMATRIX_HPP
#define ARRCOH_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "arrcoh/rational.hpp"

namespace arrcoh {

/// Dense matrix over Q. All arithmetic is exact; zero-row/zero-column
/// shapes are first-class citizens (graded pieces of a complex are often empty).
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(std::vector<std::vector<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void swap_rows(std::size_t a, std::size_t b);

    QMatrix transposed() const;
    QMatrix operator*(const QMatrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const; // matrix * column vector

    bool is_zero() const;
    bool operator==(const QMatrix& rhs) const;
    bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }

    /// Total order (shape, then entries); used for canonical lattice keys.
    int compare(const QMatrix& rhs) const;
    bool operator<(const QMatrix& rhs) const { return compare(rhs) < 0; }

    /// Rows of `top` followed by rows of `bottom`; column counts must agree.
    static QMatrix vstack(const QMatrix& top, const QMatrix& bottom);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    QMatrix matrix;                   // the unique reduced row echelon form, zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row echelon form with first-nonzero pivoting. Deterministic and canonical.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Rows form a basis of { x : m x = 0 }. Row count = cols - rank(m).
QMatrix nullspace(const QMatrix& m);

/// One exact solution of a x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);

/// Column-wise solutions of a X = B, or nullopt when any column is
/// inconsistent. One elimination for the whole batch.
std::optional<QMatrix> solve_many(const QMatrix& a, const QMatrix& b);

/// Incremental row-space builder: one echelon reduction per inserted row.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    /// True (and the reduced row is absorbed) when the row enlarges the span.
    bool insert(std::vector<Rational> row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_; // echelon, pivots normalized to 1
    std::vector<std::size_t> pivots_;         // pivot column per row
};

} // namespace arrcoh

#endif
