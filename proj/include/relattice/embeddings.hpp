#pragma once

#include <cstdint>
#include <vector>

#include "relattice/bigmatrix.hpp"
#include "relattice/fieldspec.hpp"
#include "relattice/intpoly.hpp"

namespace relattice {

enum class NodeClass { good, bad_p, bad_q };

// The N nodes psi_{2k-1} = 2cos(2pi(2k-1)/n), stored in the row order used
// throughout: all bad nodes first (p-multiples ascending, then q-multiples
// ascending, with pq-multiples in the p group), then good nodes ascending.
struct NodeSet {
    FieldSpec spec;
    mpfr_prec_t prec = 53;
    std::vector<BigFloat> nodes;        // permuted order
    std::vector<uint64_t> odd_index;    // 2k-1 per permuted row
    std::vector<NodeClass> labels;      // per permuted row
    size_t bad_count = 0;               // = N - m

    size_t good_count() const { return nodes.size() - bad_count; }
};

NodeSet nodes(const FieldSpec& spec, mpfr_prec_t prec);

// Quasi-Vandermonde N x N matrix: one row per node (permuted order), column
// i holding u_i at the node; built with the three-term recurrence.
BigMatrix build_VN(const NodeSet& ns);
BigMatrix build_VN(const FieldSpec& spec, mpfr_prec_t prec);

// Classical Vandermonde with rows (1, t, t^2, ..., t^{n-1}) over the given
// pairwise-distinct real nodes.
BigMatrix build_vandermonde(const std::vector<BigFloat>& roots, mpfr_prec_t prec);

// High-precision real roots of Phi_n^+ (the good nodes, ascending odd index).
std::vector<BigFloat> real_cyclotomic_roots(const FieldSpec& spec, mpfr_prec_t prec);

// Power-basis coordinates of an element of Z[psi]; the identity map with a
// dimension check.
std::vector<mpz_class> coordinate_embedding(const FieldSpec& spec, const std::vector<mpz_class>& coords);

// Evaluation of sum_i coords[i] * psi^i at every good node (row order of the
// NodeSet good block); all embeddings are real since s2 = 0.
std::vector<BigFloat> canonical_embedding(const FieldSpec& spec, const std::vector<mpz_class>& coords,
                                          mpfr_prec_t prec);

}  // namespace relattice
