#pragma once

#include <cstdint>

#include "relattice/fieldspec.hpp"
#include "relattice/intpoly.hpp"

namespace relattice {

// n-th cyclotomic polynomial via the Moebius product of x^d - 1 over the
// divisors of n, with exact division. Memoized.
const IntPoly& cyclotomic_poly(uint64_t n);

// For a palindromic polynomial P of even degree 2d, the unique Q of degree d
// with x^d * Q(x + 1/x) = P(x). Throws construction_error when P is not
// palindromic or has odd degree.
IntPoly fold_palindromic(const IntPoly& p);

// x^deg(Q) * Q(x + 1/x), the inverse of fold_palindromic.
IntPoly unfold(const IntPoly& q);

// Minimal polynomial of psi_1 = 2cos(2pi/n): u_{2^(r-2)} when k = 1, else the
// exact quotient Phi_k^+(u_{2^r}) / Phi_k^+(u_{2^(r-1)}). Monic of degree m.
IntPoly real_cyclotomic_poly(const FieldSpec& spec);

// True iff x^(phi(n)/2) * Phi_n^+(x + 1/x) expands to exactly Phi_n(x).
bool verify_plus_minus_relation(uint64_t n);

struct SpecialValues {
    mpz_class at1;
    mpz_class at_minus1;
    mpz_class at2;
    mpz_class at_minus2;
};

// Exact evaluations of Phi_n^+ at +-1 and +-2.
SpecialValues special_values(const FieldSpec& spec);

}  // namespace relattice
