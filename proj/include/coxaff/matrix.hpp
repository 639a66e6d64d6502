#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "coxaff/golden.hpp"

namespace coxaff {

// Dense matrix over Q[tau], row-major.  All arithmetic is exact.
class GMatrix {
public:
    GMatrix() = default;
    GMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    GMatrix(std::initializer_list<std::initializer_list<Golden>> rows);

    static GMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Golden& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Golden& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    GMatrix operator*(const GMatrix& o) const;
    GMatrix operator+(const GMatrix& o) const;
    GMatrix operator-(const GMatrix& o) const;
    GMatrix scaled(const Golden& s) const;
    GMatrix transpose() const;

    bool operator==(const GMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const GMatrix& o) const { return !(*this == o); }

    bool is_symmetric() const;
    bool is_identity() const;

    // exact determinant (Gaussian elimination over the field)
    Golden det() const;
    // exact inverse; throws std::domain_error when singular
    GMatrix inverse() const;
    // dets of the k x k top-left blocks, k = 1..n
    std::vector<Golden> leading_minors() const;
    // delete one row and one column
    GMatrix minor_matrix(std::size_t row, std::size_t col) const;

    // matrix-vector product
    std::vector<Golden> apply(const std::vector<Golden>& v) const;

    // canonical serialization; equal matrices have equal keys, used for
    // exact dedup and for the deterministic element ordering
    std::string key() const;

    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Golden> e_;
};

}  // namespace coxaff
