#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "relattice/bigfloat.hpp"

namespace relattice {

// Dense matrix over arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, 0) {}

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class& at(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const mpz_class& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    IntMatrix block(size_t r0, size_t c0, size_t rows, size_t cols) const {
        IntMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

    // Sum of squared entries, exact.
    mpz_class frobenius_sq() const {
        mpz_class s = 0;
        for (const mpz_class& v : d_) s += v * v;
        return s;
    }

    mpz_class max_abs() const {
        mpz_class s = 0;
        for (const mpz_class& v : d_) {
            mpz_class a = abs(v);
            if (a > s) s = a;
        }
        return s;
    }

  private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> d_;
};

// Determinant by fraction-free (Bareiss) elimination with row pivoting; exact.
mpz_class det_bareiss(const IntMatrix& m);

}  // namespace relattice
