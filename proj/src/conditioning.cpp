#include "relattice/conditioning.hpp"

#include "relattice/equivalence.hpp"

namespace relattice {

BigFloat frobenius_norm(const BigMatrix& m) { return m.frobenius_norm(); }

namespace {

constexpr mpfr_prec_t kMaxPrec = 1 << 14;

CondNumber cond_at(const BigMatrix& m) {
    InverseResult ir = invert(m);
    CondNumber c{m.frobenius_norm(), ir.inv.frobenius_norm(), BigFloat(m.prec()), m.prec()};
    c.cond = c.frob * c.frob_inv;
    return c;
}

bool stable(const BigFloat& prev, const BigFloat& cur) {
    BigFloat rel = abs(cur - prev) / cur;
    return rel <= BigFloat::pow2(-32, cur.prec());
}

}  // namespace

CondNumber condition_number(const std::function<BigMatrix(mpfr_prec_t)>& build,
                            mpfr_prec_t start_prec) {
    CondNumber prev;
    bool have_prev = false;
    for (mpfr_prec_t prec = start_prec; prec <= kMaxPrec; prec *= 2) {
        CondNumber cur;
        try {
            cur = cond_at(build(prec));
        } catch (const singular_matrix_error&) {
            if (prec * 2 > kMaxPrec) throw;
            have_prev = false;
            continue;
        }
        if (have_prev && stable(prev.cond, cur.cond)) return cur;
        prev = std::move(cur);
        have_prev = true;
    }
    throw singular_matrix_error("condition number did not stabilize below " +
                                std::to_string(kMaxPrec) + " bits");
}

CondNumber condition_number(const BigMatrix& m) {
    return condition_number([&m](mpfr_prec_t prec) { return m.round_to(prec); }, m.prec());
}

mpz_class bound_cond_A_sq(const FieldSpec& spec) {
    const mpz_class m = spec.m;
    if (spec.kind == FieldCase::pow2_p) return 3 * m * (5 * m * m + 2 * m);
    if (spec.kind == FieldCase::pow2_pq)
        return (5 * m * m + 2 * m) * (4 * m * m * m * m + m * m + 2 * m);
    return mpz_class(spec.N) * mpz_class(spec.N);  // Cond(I_N) = N
}

CondReport verify_bounds(const FieldSpec& spec, mpfr_prec_t prec) {
    CondReport rep;
    rep.n = spec.n;
    rep.kind = spec.kind;
    rep.N = spec.N;
    rep.m = spec.m;

    CondNumber cn_vn = condition_number(
        [&spec](mpfr_prec_t p) { return build_VN(spec, p); }, prec);
    rep.cond_VN = cn_vn.cond;
    rep.prec_used = cn_vn.prec_used;

    ColumnOps ops = column_ops(spec);
    IntMatrix A_inv = column_ops_inverse(ops);
    const bool exact_inverse_ok = ops.A * A_inv == IntMatrix::identity(spec.N);
    const mpz_class norm_A_sq = ops.A.frobenius_sq();
    const mpz_class norm_A_inv_sq = A_inv.frobenius_sq();
    rep.cond_A = sqrt(BigFloat(norm_A_sq * norm_A_inv_sq, prec));

    CondNumber cn_vna = spec.kind == FieldCase::pow2
                            ? cn_vn
                            : condition_number(
                                  [&](mpfr_prec_t p) { return build_VN(spec, p) * ops.A; }, prec);
    rep.cond_VNA = cn_vna.cond;

    CondNumber cn_rm = spec.kind == FieldCase::pow2
                           ? cn_vn
                           : condition_number(
                                 [&](mpfr_prec_t p) {
                                     BigMatrix vna = build_VN(spec, p) * ops.A;
                                     const size_t base = spec.N - spec.m;
                                     return vna.block(base, base, spec.m, spec.m);
                                 },
                                 prec);
    rep.cond_Rm = cn_rm.cond;
    if (cn_vna.prec_used > rep.prec_used) rep.prec_used = cn_vna.prec_used;
    if (cn_rm.prec_used > rep.prec_used) rep.prec_used = cn_rm.prec_used;

    auto push = [&rep](const std::string& name, const BigFloat& value, const BigFloat& bound,
                       bool ok) {
        rep.bounds.push_back({name, value.str(), bound.str(), ok});
    };

    // Cond(V_N) <= N(N+1)
    BigFloat b_vn(mpz_class(spec.N) * mpz_class(spec.N + 1), prec);
    push("cond_VN<=N(N+1)", rep.cond_VN, b_vn, rep.cond_VN <= b_vn);

    // Case bound on Cond(A); outward-rounded square root of the exact value.
    if (spec.kind != FieldCase::pow2) {
        BigFloat b_a = BigFloat::sqrt_up(bound_cond_A_sq(spec), prec);
        push("cond_A<bound", rep.cond_A, b_a, rep.cond_A < b_a);
    }

    // Combined bound on Cond(V_N A).
    if (spec.kind == FieldCase::pow2) {
        BigFloat b(mpz_class(spec.m) * mpz_class(spec.m + 1), prec);
        push("cond_VNA<=m(m+1)", rep.cond_VNA, b, rep.cond_VNA <= b);
    } else {
        BigFloat b = BigFloat(2 * mpz_class(spec.m) * mpz_class(2 * spec.m + 1), prec) *
                     BigFloat::sqrt_up(bound_cond_A_sq(spec), prec);
        push("cond_VNA<=2m(2m+1)*bound_A", rep.cond_VNA, b, rep.cond_VNA <= b);
    }

    // Cond(R_m) <= Cond(V_N A), allowing for the escalation tolerance.
    {
        BigFloat slack = BigFloat(1L, prec) + BigFloat::pow2(-30, prec);
        push("cond_Rm<=cond_VNA", rep.cond_Rm, rep.cond_VNA, rep.cond_Rm <= rep.cond_VNA * slack);
    }

    // Submultiplicativity Cond(V_N A) <= Cond(V_N) Cond(A).
    {
        BigFloat prod = rep.cond_VN * rep.cond_A;
        BigFloat slack = BigFloat(1L, prec) + BigFloat::pow2(-30, prec);
        push("cond_VNA<=cond_VN*cond_A", rep.cond_VNA, prod, rep.cond_VNA <= prod * slack);
    }

    // Exact A-side identities.
    {
        BigFloat cond_a_inv = sqrt(BigFloat(norm_A_inv_sq * norm_A_sq, prec));
        push("cond_A==cond_Ainv", rep.cond_A, cond_a_inv, rep.cond_A == cond_a_inv);
        push("A*Ainv==I", BigFloat(exact_inverse_ok ? 0L : 1L, prec), BigFloat(0L, prec),
             exact_inverse_ok);
    }

    rep.all_pass = true;
    for (const BoundCheck& b : rep.bounds) rep.all_pass = rep.all_pass && b.satisfied;
    return rep;
}

}  // namespace relattice
