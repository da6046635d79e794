#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace relattice {

class singular_matrix_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class construction_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision real backed by MPFR. Every value carries its own
// precision; binary operations round to the larger operand precision.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 53) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const mpz_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const mpq_class& x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^e, exact.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(1L, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    BigFloat round_to(mpfr_prec_t prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // Nearest integer, exact.
    mpz_class to_nearest_integer() const {
        BigFloat t(prec());
        mpfr_rint(t.v_, v_, MPFR_RNDN);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
        return z;
    }

    std::string str(size_t digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
    // Full decimal precision for the stored value.
    std::string str_full() const {
        size_t digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
        return str(digits);
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) {
        mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& b) {
        mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& b) {
        mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& b) {
        mpfr_div(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    // *this += a*b without an allocation for the product.
    void add_mul(const BigFloat& a, const BigFloat& b) { mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN); }
    void sub_mul(const BigFloat& a, const BigFloat& b) { mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN); mpfr_neg(v_, v_, MPFR_RNDN); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    // sqrt of a nonnegative integer, rounded up; used for bound-side values.
    static BigFloat sqrt_up(const mpz_class& a, mpfr_prec_t prec) {
        BigFloat t(a, prec);
        BigFloat r(prec);
        mpfr_sqrt(r.v_, t.v_, MPFR_RNDU);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat acos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_acos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

}  // namespace relattice
