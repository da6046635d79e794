#include "relattice/intmatrix.hpp"

namespace relattice {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw construction_error("integer matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const mpz_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                const mpz_class& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

mpz_class det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw construction_error("determinant of non-square matrix");
    const size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw construction_error("Bareiss step division not exact");
                w.at(i, j) = q;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

}  // namespace relattice
