#pragma once

#include <cstddef>
#include <vector>

#include "relattice/bigfloat.hpp"
#include "relattice/intmatrix.hpp"

namespace relattice {

// Dense matrix over arbitrary-precision reals with an explicit working
// precision that propagates to all derived quantities.
class BigMatrix {
  public:
    BigMatrix() = default;
    BigMatrix(size_t rows, size_t cols, mpfr_prec_t prec)
        : rows_(rows), cols_(cols), prec_(prec), d_(rows * cols, BigFloat(0L, prec)) {}

    static BigMatrix identity(size_t n, mpfr_prec_t prec) {
        BigMatrix m(n, n, prec);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = BigFloat(1L, prec);
        return m;
    }
    static BigMatrix from_int(const IntMatrix& a, mpfr_prec_t prec) {
        BigMatrix m(a.rows(), a.cols(), prec);
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = BigFloat(a.at(i, j), prec);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpfr_prec_t prec() const { return prec_; }
    BigFloat& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const BigFloat& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    BigMatrix block(size_t r0, size_t c0, size_t rows, size_t cols) const {
        BigMatrix m(rows, cols, prec_);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    BigMatrix round_to(mpfr_prec_t prec) const {
        BigMatrix m(rows_, cols_, prec);
        for (size_t i = 0; i < d_.size(); ++i) m.d_[i] = d_[i].round_to(prec);
        return m;
    }

    friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
    friend BigMatrix operator-(const BigMatrix& a, const BigMatrix& b);

    // Right-multiplication by an integer matrix, column-sparse aware.
    friend BigMatrix operator*(const BigMatrix& a, const IntMatrix& b);

    std::vector<BigFloat> matvec(const std::vector<BigFloat>& x) const;

    BigFloat frobenius_norm() const;
    BigFloat max_abs() const;

  private:
    size_t rows_ = 0, cols_ = 0;
    mpfr_prec_t prec_ = 53;
    std::vector<BigFloat> d_;
};

// Inverse via LU with partial pivoting at the matrix precision, followed by
// Newton residual refinement. `residual` is ||M*inv - I||_F at return.
struct InverseResult {
    BigMatrix inv;
    BigFloat residual;
};
InverseResult invert(const BigMatrix& m, int max_refine = 4);

}  // namespace relattice
