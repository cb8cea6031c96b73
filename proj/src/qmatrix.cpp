#include "arrcoh/qmatrix.hpp"

#include <algorithm>
#include <utility>

#include "arrcoh/errors.hpp"

namespace arrcoh {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged initializer for QMatrix");
        for (long v : r) entries_.emplace_back(v);
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    QMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.entries_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
        if (r.size() != m.cols_) throw InputError("ragged rows for QMatrix");
        for (auto& v : r) m.entries_.push_back(std::move(v));
    }
    return m;
}

std::vector<Rational> QMatrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void QMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("QMatrix product dimension mismatch");
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                if (rhs.at(k, c) == 0) continue;
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InputError("QMatrix apply dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (at(r, c) == 0 || v[c] == 0) continue;
            out[r] += at(r, c) * v[c];
        }
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

int QMatrix::compare(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_) return rows_ < rhs.rows_ ? -1 : 1;
    if (cols_ != rhs.cols_) return cols_ < rhs.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const int c = cmp(entries_[i], rhs.entries_[i]);
        if (c != 0) return c;
    }
    return 0;
}

QMatrix QMatrix::vstack(const QMatrix& top, const QMatrix& bottom) {
    if (top.rows_ == 0) {
        QMatrix out = bottom;
        return out;
    }
    if (bottom.rows_ == 0) return top;
    if (top.cols_ != bottom.cols_) throw InputError("vstack column mismatch");
    QMatrix out(top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.entries_.begin(), top.entries_.end(), out.entries_.begin());
    std::copy(bottom.entries_.begin(), bottom.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(top.entries_.size()));
    return out;
}

RrefResult rref(const QMatrix& m) {
    QMatrix work = m;
    const std::size_t nrows = work.rows();
    const std::size_t ncols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
        // first nonzero entry in column order
        std::size_t pivot_row = lead;
        while (pivot_row < nrows && work.at(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == nrows) continue;
        work.swap_rows(lead, pivot_row);
        const Rational inv = 1 / work.at(lead, col);
        for (std::size_t c = col; c < ncols; ++c) work.at(lead, c) *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == lead || work.at(r, col) == 0) continue;
            const Rational factor = work.at(r, col);
            for (std::size_t c = col; c < ncols; ++c) work.at(r, c) -= factor * work.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    const std::size_t rk = pivots.size();
    QMatrix reduced(rk, ncols);
    for (std::size_t r = 0; r < rk; ++r)
        for (std::size_t c = 0; c < ncols; ++c) reduced.at(r, c) = work.at(r, c);
    return {std::move(reduced), rk, std::move(pivots)};
}

std::size_t rank(const QMatrix& m) {
    return rref(m).rank;
}

QMatrix nullspace(const QMatrix& m) {
    const RrefResult red = rref(m);
    const std::size_t ncols = m.cols();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    QMatrix basis(ncols - red.rank, ncols);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(out, free_col) = 1;
        for (std::size_t r = 0; r < red.rank; ++r)
            basis.at(out, red.pivots[r]) = -red.matrix.at(r, free_col);
        ++out;
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
    QMatrix rhs(b.size(), 1);
    for (std::size_t r = 0; r < b.size(); ++r) rhs.at(r, 0) = b[r];
    const auto solved = solve_many(a, rhs);
    if (!solved) return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t r = 0; r < a.cols(); ++r) x[r] = solved->at(r, 0);
    return x;
}

std::optional<QMatrix> solve_many(const QMatrix& a, const QMatrix& b) {
    if (b.rows() != a.rows()) throw InputError("solve dimension mismatch");
    QMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) aug.at(r, a.cols() + c) = b.at(r, c);
    }
    const RrefResult red = rref(aug);
    QMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < red.rank; ++r) {
        if (red.pivots[r] >= a.cols()) return std::nullopt; // pivot escaped into the RHS
        for (std::size_t c = 0; c < b.cols(); ++c)
            x.at(red.pivots[r], c) = red.matrix.at(r, a.cols() + c);
    }
    return x;
}

bool RowSpace::insert(std::vector<Rational> row) {
    if (row.size() != cols_) throw InputError("RowSpace row length mismatch");
    // stored rows are kept mutually reduced (zero at every stored pivot), so
    // one pass eliminates the candidate completely
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational scale = row[pivots_[i]];
        if (scale == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (rows_[i][c] == 0) continue;
            row[c] -= scale * rows_[i][c];
        }
    }
    std::size_t pivot = cols_;
    for (std::size_t c = 0; c < cols_; ++c)
        if (row[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot == cols_) return false;
    const Rational inv = 1 / row[pivot];
    for (std::size_t c = pivot; c < cols_; ++c) row[c] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational scale = rows_[i][pivot];
        if (scale == 0) continue;
        for (std::size_t c = pivot; c < cols_; ++c) {
            if (row[c] == 0) continue;
            rows_[i][c] -= scale * row[c];
        }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

} // namespace arrcoh
