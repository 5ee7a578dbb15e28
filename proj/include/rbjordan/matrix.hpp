#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rbjordan/scalar.hpp"

namespace rbjordan {

/// Dense matrix over an exact field (Z_p or Q). Just enough linear algebra
/// for operator checks: multiplication, rank, kernels, linear solve.
class ScalarMatrix {
public:
    /// Zero-filled rows x cols matrix.
    ScalarMatrix(const Field& f, std::size_t rows, std::size_t cols);
    static ScalarMatrix identity(const Field& f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c);
    const Scalar& at(std::size_t r, std::size_t c) const;

    ScalarMatrix mul(const ScalarMatrix& rhs) const;
    bool is_zero() const;
    bool operator==(const ScalarMatrix& rhs) const;

    std::size_t rank() const;
    std::size_t kernel_dim() const { return cols_ - rank(); }
    /// Some x with M x = b, or empty when the system is inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> cells_; // row-major
};

} // namespace rbjordan
