#include "rbjordan/matrix.hpp"

namespace rbjordan {
namespace {

// Reduces rows [0, rows) x cols(A) in place to row echelon form; returns the
// pivot columns. When rhs is nonnull it is carried along as an extra column.
std::vector<std::size_t> echelonize(std::vector<std::vector<Scalar>>& a,
                                    std::vector<Scalar>* rhs) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        if (rhs) std::swap((*rhs)[pivot], (*rhs)[row]);
        Scalar inv = a[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) a[row][c] = inv * a[row][c];
        if (rhs) (*rhs)[row] = inv * (*rhs)[row];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Scalar factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                a[r][c] = a[r][c] - factor * a[row][c];
            }
            if (rhs) (*rhs)[r] = (*rhs)[r] - factor * (*rhs)[row];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

ScalarMatrix::ScalarMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), cells_(rows * cols, Scalar::zero(f)) {
    if (!f.supports_arithmetic()) {
        throw UnsupportedField("matrices need Zp or Q arithmetic, have " + f.descriptor());
    }
}

ScalarMatrix ScalarMatrix::identity(const Field& f, std::size_t n) {
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Scalar& ScalarMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return cells_[r * cols_ + c];
}

const Scalar& ScalarMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return cells_[r * cols_ + c];
}

ScalarMatrix ScalarMatrix::mul(const ScalarMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
    ScalarMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) = out.at(r, c) + a * rhs.at(k, c);
            }
        }
    }
    return out;
}

bool ScalarMatrix::is_zero() const {
    for (const Scalar& s : cells_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!(cells_[i] == rhs.cells_[i])) return false;
    }
    return true;
}

std::size_t ScalarMatrix::rank() const {
    std::vector<std::vector<Scalar>> a(rows_, std::vector<Scalar>());
    for (std::size_t r = 0; r < rows_; ++r) {
        a[r].reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) a[r].push_back(at(r, c));
    }
    return echelonize(a, nullptr).size();
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve(const std::vector<Scalar>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("right-hand side length mismatch");
    std::vector<std::vector<Scalar>> a(rows_, std::vector<Scalar>());
    for (std::size_t r = 0; r < rows_; ++r) {
        a[r].reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) a[r].push_back(at(r, c));
    }
    std::vector<Scalar> rhs = b;
    std::vector<std::size_t> pivots = echelonize(a, &rhs);
    // rows beyond the last pivot are all-zero; a nonzero rhs there means "no solution"
    for (std::size_t r = pivots.size(); r < rows_; ++r) {
        if (!rhs[r].is_zero()) return std::nullopt;
    }
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    return x;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw DimensionMismatch("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero()) out[r] = out[r] + at(r, c) * x[c];
        }
    }
    return out;
}

} // namespace rbjordan
