#include "relattice/bigmatrix.hpp"

#include <algorithm>

namespace relattice {

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
    if (a.cols() != b.rows()) throw construction_error("matrix product shape mismatch");
    mpfr_prec_t prec = std::max(a.prec(), b.prec());
    BigMatrix c(a.rows(), b.cols(), prec);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            BigFloat acc(0L, prec);
            for (size_t k = 0; k < a.cols(); ++k) acc.add_mul(a.at(i, k), b.at(k, j));
            c.at(i, j) = std::move(acc);
        }
    return c;
}

BigMatrix operator-(const BigMatrix& a, const BigMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw construction_error("matrix difference shape mismatch");
    BigMatrix c(a.rows(), a.cols(), std::max(a.prec(), b.prec()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
    return c;
}

BigMatrix operator*(const BigMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw construction_error("matrix product shape mismatch");
    BigMatrix c(a.rows(), b.cols(), a.prec());
    for (size_t j = 0; j < b.cols(); ++j) {
        for (size_t k = 0; k < b.rows(); ++k) {
            const mpz_class& bkj = b.at(k, j);
            if (bkj == 0) continue;
            BigFloat w(bkj, a.prec());
            for (size_t i = 0; i < a.rows(); ++i) c.at(i, j).add_mul(a.at(i, k), w);
        }
    }
    return c;
}

std::vector<BigFloat> BigMatrix::matvec(const std::vector<BigFloat>& x) const {
    if (x.size() != cols_) throw construction_error("matvec dimension mismatch");
    std::vector<BigFloat> y(rows_, BigFloat(0L, prec_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) y[i].add_mul(at(i, j), x[j]);
    return y;
}

BigFloat BigMatrix::frobenius_norm() const {
    BigFloat acc(0L, prec_);
    for (const BigFloat& v : d_) acc.add_mul(v, v);
    return sqrt(acc);
}

BigFloat BigMatrix::max_abs() const {
    BigFloat best(0L, prec_);
    for (const BigFloat& v : d_) {
        BigFloat a = abs(v);
        if (a > best) best = std::move(a);
    }
    return best;
}

namespace {

// PLU factorization in place; perm holds the row permutation.
// Throws singular_matrix_error on an exactly-zero pivot column.
void lu_factor(BigMatrix& w, std::vector<size_t>& perm) {
    const size_t n = w.rows();
    perm.resize(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        BigFloat best = abs(w.at(k, k));
        for (size_t i = k + 1; i < n; ++i) {
            BigFloat v = abs(w.at(i, k));
            if (v > best) {
                best = std::move(v);
                piv = i;
            }
        }
        if (best.is_zero() || !best.is_finite())
            throw singular_matrix_error("zero pivot in LU factorization");
        if (piv != k) {
            std::swap(perm[k], perm[piv]);
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
        }
        for (size_t i = k + 1; i < n; ++i) {
            BigFloat f = w.at(i, k) / w.at(k, k);
            for (size_t j = k + 1; j < n; ++j) w.at(i, j).sub_mul(f, w.at(k, j));
            w.at(i, k) = std::move(f);
        }
    }
}

BigMatrix lu_inverse(const BigMatrix& m) {
    const size_t n = m.rows();
    BigMatrix w = m;
    std::vector<size_t> perm;
    lu_factor(w, perm);
    BigMatrix inv(n, n, m.prec());
    std::vector<BigFloat> col(n, BigFloat(0L, m.prec()));
    for (size_t c = 0; c < n; ++c) {
        for (size_t i = 0; i < n; ++i) col[i] = BigFloat(perm[i] == c ? 1L : 0L, m.prec());
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 0; j < i; ++j) col[i].sub_mul(w.at(i, j), col[j]);
        for (size_t ii = n; ii-- > 0;) {
            for (size_t j = ii + 1; j < n; ++j) col[ii].sub_mul(w.at(ii, j), col[j]);
            col[ii] /= w.at(ii, ii);
        }
        for (size_t i = 0; i < n; ++i) inv.at(i, c) = col[i];
    }
    return inv;
}

BigFloat identity_residual(const BigMatrix& m, const BigMatrix& x) {
    BigMatrix r = m * x;
    for (size_t i = 0; i < r.rows(); ++i) r.at(i, i) -= BigFloat(1L, r.prec());
    return r.frobenius_norm();
}

}  // namespace

InverseResult invert(const BigMatrix& m, int max_refine) {
    if (m.rows() != m.cols()) throw construction_error("inverse of non-square matrix");
    BigMatrix x = lu_inverse(m);
    BigFloat res = identity_residual(m, x);
    const BigFloat target = BigFloat::pow2(-static_cast<long>(m.prec() / 2), m.prec());
    for (int it = 0; it < max_refine && res > target; ++it) {
        // Newton step: x <- x(2I - m x)
        BigMatrix mx = m * x;
        BigMatrix two_minus(mx.rows(), mx.cols(), mx.prec());
        for (size_t i = 0; i < mx.rows(); ++i)
            for (size_t j = 0; j < mx.cols(); ++j) {
                BigFloat v = -mx.at(i, j);
                if (i == j) v += BigFloat(2L, mx.prec());
                two_minus.at(i, j) = std::move(v);
            }
        BigMatrix x2 = x * two_minus;
        BigFloat res2 = identity_residual(m, x2);
        if (!(res2 < res)) break;
        x = std::move(x2);
        res = std::move(res2);
    }
    return {std::move(x), std::move(res)};
}

}  // namespace relattice
