#pragma once

#include <cstdint>
#include <vector>

#include "relattice/bigmatrix.hpp"
#include "relattice/embeddings.hpp"
#include "relattice/fieldspec.hpp"
#include "relattice/intmatrix.hpp"
#include "relattice/intpoly.hpp"

namespace relattice {

// The column-operation matrix A = (I_{N-m}  K; O  L_m): unit upper
// block-triangular, det A = 1, integer entries.
struct ColumnOps {
    FieldCase kind = FieldCase::pow2;
    size_t N = 0;
    size_t m = 0;
    IntMatrix A;

    IntMatrix K_block() const { return A.block(0, N - m, N - m, m); }
    IntMatrix L_block() const { return A.block(N - m, N - m, m, m); }
};

// Literal simulation of the column-replacement sums, with coefficient
// accumulation when an index repeats.
ColumnOps column_ops_literal(const FieldSpec& spec);

// Closed-form construction: column N-m+l is the expansion of the row
// polynomial p_l in the u basis.
ColumnOps column_ops_closed_form(const FieldSpec& spec);

// Both constructions, checked equal; throws construction_error on mismatch.
ColumnOps column_ops(const FieldSpec& spec);

// The Toeplitz diagonal pattern of L_m in closed form: +1 at 0, +1 at
// 2^(r-1) for the 2^r*p case; alternating (-1)^j at j*2^(r-1) for
// j <= p-1 and (-1)^(j+1) for q <= j <= q+p-1 in the 2^r*p*q case.
std::vector<long> lemma_diagonals(const FieldSpec& spec);

// Exact integer inverse (I, -K L^-1; O, L^-1); A * inverse = I exactly.
IntMatrix column_ops_inverse(const ColumnOps& ops);

// First `count` power-series coefficients of 1/r(x) where r has the
// L_m diagonals as coefficients. Exact; all in {0, +-1} for count <= m.
std::vector<mpz_class> toeplitz_inverse_diagonals(const FieldSpec& spec, size_t count);

// The degree N-m polynomial whose roots are exactly the bad nodes
// (2^r*p*q case only).
IntPoly a_poly(const FieldSpec& spec);

// Row polynomial p_i: the i-th transformed column of V_N*A equals
// (p_i(psi))_psi over the permuted nodes.
IntPoly rep_poly(const FieldSpec& spec, size_t i);

// sum_{k=1..(p-1)/2} (-1)^(k+1) u_{2^(r-1) k}(psi_{jq}) - 1 for odd j with
// p not dividing j; vanishes to working precision (2^r*p*q case).
BigFloat zerosum_check(const FieldSpec& spec, uint64_t j, mpfr_prec_t prec);

struct TransformedMatrices {
    NodeSet ns;
    BigMatrix VN;
    ColumnOps ops;
    BigMatrix VNA;
    BigFloat zero_block_max;  // largest |entry| of the upper-right block
};

// V_N * A with the upper-right (N-m) x m block checked against
// 2^(-prec/2) * ||V_N||; throws construction_error with the offending
// entry on violation.
TransformedMatrices transformed_parts(const FieldSpec& spec, mpfr_prec_t prec);
BigMatrix transformed(const FieldSpec& spec, mpfr_prec_t prec);

// The lattice maps of the equivalence: forward is u -> R_m u, backward is
// u -> R_m^-1 (lambda u), with lambda = |det P| the index of the image
// sublattice.
struct EquivalenceMap {
    FieldSpec spec;
    mpfr_prec_t prec = 53;
    BigMatrix Rm;
    BigMatrix Rm_inv;
    IntMatrix P;        // rows: p_i(psi_1) in the power basis of psi_1
    mpz_class lambda;   // |det P| >= 1
};

EquivalenceMap extract_Rm(const FieldSpec& spec, mpfr_prec_t prec);

std::vector<BigFloat> forward_map(const EquivalenceMap& map, const std::vector<mpz_class>& coords);
std::vector<BigFloat> backward_map(const EquivalenceMap& map, const std::vector<BigFloat>& v);

}  // namespace relattice
