#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relattice/fieldspec.hpp"
#include "relattice/intpoly.hpp"

namespace relattice {

struct RootRecord {
    mpz_class alpha;              // residue in [0, q)
    mpz_class residue_magnitude;  // min(alpha, q - alpha)
    mpz_class order;              // multiplicative order, 0 when unknown
    bool order_known = false;
    bool special = false;         // alpha = 0 or +-1
};

struct ElosRecord {
    mpz_class lhs;       // (alpha^(2n) - 1)/(alpha - 1), exact
    mpq_class rhs;       // q^2 / (64 sigma^2), exact
    bool satisfied = false;
};

struct AttackReport {
    mpz_class q;
    bool q_prime = false;
    uint64_t max_order = 0;
    uint64_t max_residue = 0;
    std::vector<RootRecord> roots;
    bool cond_51 = false;  // f(1) = 0 mod q
    bool cond_52 = false;  // a root of order <= max_order exists
    bool cond_53 = false;  // a root of residue magnitude <= max_residue exists
    bool order_scan_skipped = false;  // q-1 not factorable within the trial bound
    std::optional<ElosRecord> elos;
};

// Finds every root of f mod q with centered residue <= max_residue (direct
// scan) and every root of multiplicative order <= max_order (via the group
// structure of F_q^*, when q-1 factors by trial division; via exhaustive
// scan when q is small). q must be an odd probable prime.
AttackReport root_scan(const IntPoly& f, const mpz_class& q, uint64_t max_order,
                       uint64_t max_residue);

// Exact sides of (alpha^(2n) - 1)/(alpha - 1) <= q^2/(64 sigma^2), with
// sigma parsed from a decimal string so borderline cases never depend on
// binary rounding. Requires alpha >= 2.
ElosRecord elos_inequality(const mpz_class& alpha, uint64_t n_degree, const mpz_class& q,
                           const std::string& sigma_decimal);

struct ImmunityRow {
    mpz_class q;
    bool immune = false;  // no root of Phi_n^+ among {+-1, +-2} mod q
    mpz_class value_at_1, value_at_2;  // exact special values
};

struct ImmunityReport {
    uint64_t n = 0;
    std::vector<ImmunityRow> rows;
    bool all_immune = false;
};

// No-root check at {+-1, +-2} for Phi_n^+ mod each q, by the exact special
// values and by direct modular evaluation.
ImmunityReport immunity_report(const FieldSpec& spec, const std::vector<mpz_class>& q_list);

struct TotalSplitResult {
    bool totally_split = false;
    bool ramified = false;  // f not squarefree mod q
};

// True iff f mod q factors into deg(f) distinct linear factors, i.e.
// f | x^q - x, decided with modular exponentiation in F_q[x]/(f).
TotalSplitResult total_split_check(const IntPoly& f, const mpz_class& q);

// Exact rational from a decimal string such as "-1.25" or "3e-2".
mpq_class parse_decimal(const std::string& s);

}  // namespace relattice
