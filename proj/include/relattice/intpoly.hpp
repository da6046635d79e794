#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "relattice/bigfloat.hpp"

namespace relattice {

// Dense integer polynomial, canonical form (no trailing zero coefficient).
// coeff(i) is the coefficient of x^i; the zero polynomial has degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs) {
        for (long c : coeffs) c_.emplace_back(c);
        trim();
    }
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c) {
        IntPoly p;
        p.c_.push_back(c);
        p.trim();
        return p;
    }
    // x^k
    static IntPoly monomial(size_t k, const mpz_class& c = 1) {
        IntPoly p;
        p.c_.assign(k + 1, 0);
        p.c_[k] = c;
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    mpz_class coeff(size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    // True when only even or only odd powers appear (the zero polynomial is both).
    bool has_parity(int parity) const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0 && static_cast<int>(i % 2) != parity) return false;
        return true;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a);

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// Quotient and remainder; every intermediate leading-coefficient division
// must be exact over the integers (always the case for monic divisors).
// Throws construction_error otherwise or when b is zero.
struct DivRem {
    IntPoly quot;
    IntPoly rem;
};
DivRem divrem(const IntPoly& a, const IntPoly& b);

// Exact quotient; throws construction_error when the remainder is nonzero.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// outer(inner), exact.
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

// Horner evaluation, exact.
mpz_class eval_int(const IntPoly& p, const mpz_class& x);

// Horner with reduction mod q at each step; result in [0, q). Requires q >= 2.
mpz_class eval_mod(const IntPoly& p, const mpz_class& x, const mpz_class& q);

// Horner at the given working precision.
BigFloat eval_real(const IntPoly& p, const BigFloat& x, mpfr_prec_t prec);

// Rescaled Chebyshev polynomial of the first kind: u_0 = 2, u_1 = x,
// u_i = x*u_{i-1} - u_{i-2}. Monic with integer coefficients for i >= 1,
// u_i(2cos t) = 2cos(i t). Memoized; safe for concurrent callers.
const IntPoly& u_poly(size_t i);

// Coefficients g with p = sum_i g[i]*u_poly(i). Unique since deg u_i = i;
// requires the u_0 component to be integral (even trailing constant).
std::vector<mpz_class> u_expand(const IntPoly& p);

}  // namespace relattice
