#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relattice/bigmatrix.hpp"
#include "relattice/fieldspec.hpp"

namespace relattice {

BigFloat frobenius_norm(const BigMatrix& m);

struct CondNumber {
    BigFloat frob;
    BigFloat frob_inv;
    BigFloat cond;
    mpfr_prec_t prec_used = 0;
};

// Frobenius condition number ||M|| * ||M^-1|| with precision escalation:
// the matrix is rebuilt and re-inverted at doubled precision until two
// successive values agree to relative 2^-32. Throws singular_matrix_error
// if inversion still fails at 2^14 bits.
CondNumber condition_number(const std::function<BigMatrix(mpfr_prec_t)>& build, mpfr_prec_t start_prec);

// Same escalation with fixed entries; only the inversion precision grows.
CondNumber condition_number(const BigMatrix& m);

struct BoundCheck {
    std::string name;
    std::string value;  // decimal string of the measured quantity
    std::string bound;  // decimal string of the bound it must stay below
    bool satisfied = false;
};

struct CondReport {
    uint64_t n = 0;
    FieldCase kind = FieldCase::pow2;
    uint64_t N = 0;
    uint64_t m = 0;
    BigFloat cond_VN;
    BigFloat cond_A;
    BigFloat cond_VNA;
    BigFloat cond_Rm;
    mpfr_prec_t prec_used = 0;
    std::vector<BoundCheck> bounds;
    bool all_pass = false;
};

// Certifies every condition-number bound for one field: Cond(V_N) <= N(N+1),
// the case bound on Cond(A), the combined bound on Cond(V_N A),
// Cond(R_m) <= Cond(V_N A), submultiplicativity, and the exact A-side
// identities (A A^-1 = I, Cond(A) = Cond(A^-1)). Violations are flagged in
// the report, not thrown.
CondReport verify_bounds(const FieldSpec& spec, mpfr_prec_t prec);

// Exact squared bound values from the paper, as integers.
mpz_class bound_cond_A_sq(const FieldSpec& spec);

}  // namespace relattice
