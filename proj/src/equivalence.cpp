#include "relattice/equivalence.hpp"

#include <map>

#include "relattice/cyclotomic.hpp"

namespace relattice {

namespace {

// Signed accumulation of column indices appearing in the replacement sum
// for transformed column l (0-based block offset).
std::map<uint64_t, long> replacement_terms(const FieldSpec& spec, uint64_t l) {
    const uint64_t c = spec.quarter_power();
    std::map<uint64_t, long> acc;
    auto add = [&acc](uint64_t idx, long s) { acc[idx] += s; };
    if (spec.kind == FieldCase::pow2_p) {
        add(c + l, 1);
        if (l >= 1) add(c >= l ? c - l : l - c, 1);
        return acc;
    }
    const uint64_t p = spec.p, q = spec.q;
    const long s0 = ((p + 3) / 2) % 2 == 0 ? 1 : -1;
    auto abs_diff = [](uint64_t a, uint64_t b) { return a >= b ? a - b : b - a; };
    for (uint64_t j = 1; j <= (p - 1) / 2; ++j) {
        const long s = (j + 1) % 2 == 0 ? 1 : -1;
        const uint64_t hi = c * (q + p - (2 * j - 1));
        const uint64_t lo = c * (q - p + (2 * j - 1));
        if (l == 0) {
            add(hi, s);
            add(lo, s);
        } else {
            add(hi + l, s);
            add(abs_diff(lo, l), s);
            add(lo + l, s);
            add(abs_diff(hi, l), s);
        }
    }
    if (l == 0) {
        add(c * q, s0);
    } else {
        add(c * q + l, s0);
        add(abs_diff(c * q, l), s0);
    }
    return acc;
}

}  // namespace

ColumnOps column_ops_literal(const FieldSpec& spec) {
    ColumnOps ops;
    ops.kind = spec.kind;
    ops.N = spec.N;
    ops.m = spec.m;
    ops.A = IntMatrix::identity(spec.N);
    if (spec.kind == FieldCase::pow2) return ops;
    const size_t base = spec.N - spec.m;
    if (spec.kind == FieldCase::pow2_p) {
        const uint64_t c = spec.quarter_power();
        for (uint64_t l = 1; l < spec.m; ++l) {
            uint64_t other = c >= l ? c - l : l - c;
            ops.A.at(other, c + l) += 1;
        }
        return ops;
    }
    for (uint64_t l = 0; l < spec.m; ++l) {
        ops.A.at(base + l, base + l) = 0;  // rebuilt from the sum below
        for (const auto& [idx, coeff] : replacement_terms(spec, l)) {
            if (idx >= spec.N) throw construction_error("column index out of range");
            ops.A.at(idx, base + l) += coeff;
        }
    }
    return ops;
}

IntPoly a_poly(const FieldSpec& spec) {
    if (spec.kind != FieldCase::pow2_pq)
        throw construction_error("a(x) is defined for the 2^r*p*q case only");
    const uint64_t c = spec.quarter_power();
    const uint64_t t = spec.half_power();
    IntPoly bracket = IntPoly{-1};
    for (uint64_t i = 1; i <= (spec.p - 1) / 2; ++i) {
        const IntPoly& term = u_poly(t * i);
        bracket = (i + 1) % 2 == 0 ? bracket + term : bracket - term;
    }
    IntPoly a = u_poly(c * spec.q) * bracket;
    if (((spec.p + 1) / 2) % 2 != 0) a = -a;
    if (a.degree() != static_cast<long>(spec.N - spec.m))
        throw construction_error("a(x) degree mismatch");
    return a;
}

IntPoly rep_poly(const FieldSpec& spec, size_t i) {
    if (spec.kind == FieldCase::pow2) return u_poly(i);
    IntPoly base = spec.kind == FieldCase::pow2_p ? u_poly(spec.quarter_power()) : a_poly(spec);
    return i == 0 ? base : base * u_poly(i);
}

ColumnOps column_ops_closed_form(const FieldSpec& spec) {
    ColumnOps ops;
    ops.kind = spec.kind;
    ops.N = spec.N;
    ops.m = spec.m;
    ops.A = IntMatrix(spec.N, spec.N);
    const size_t base = spec.N - spec.m;
    for (size_t j = 0; j < base; ++j) ops.A.at(j, j) = 1;
    for (size_t l = 0; l < spec.m; ++l) {
        std::vector<mpz_class> g = u_expand(rep_poly(spec, l));
        if (g.size() != base + l + 1) throw construction_error("row polynomial degree mismatch");
        for (size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) ops.A.at(i, base + l) = g[i];
    }
    return ops;
}

ColumnOps column_ops(const FieldSpec& spec) {
    ColumnOps lit = column_ops_literal(spec);
    ColumnOps closed = column_ops_closed_form(spec);
    if (!(lit.A == closed.A))
        throw construction_error("literal and closed-form column operations disagree for n = " +
                                 std::to_string(spec.n));
    return lit;
}

std::vector<long> lemma_diagonals(const FieldSpec& spec) {
    std::vector<long> diag(spec.m, 0);
    diag[0] = 1;
    const uint64_t t = spec.half_power();
    if (spec.kind == FieldCase::pow2_p) {
        if (t < spec.m) diag[t] = 1;
        return diag;
    }
    if (spec.kind == FieldCase::pow2_pq) {
        for (uint64_t j = 0; j <= spec.p - 1; ++j) {
            uint64_t k = j * t;
            if (k < spec.m) diag[k] = j % 2 == 0 ? 1 : -1;
        }
        for (uint64_t j = spec.q; j <= spec.q + spec.p - 1; ++j) {
            uint64_t k = j * t;
            if (k < spec.m) diag[k] = (j + 1) % 2 == 0 ? 1 : -1;
        }
    }
    return diag;
}

std::vector<mpz_class> toeplitz_inverse_diagonals(const FieldSpec& spec, size_t count) {
    if (spec.kind == FieldCase::pow2)
        throw construction_error("Toeplitz series applies to the 2^r*p and 2^r*p*q cases");
    if (count > spec.m) throw construction_error("series length exceeds the matrix size");
    std::vector<long> r = lemma_diagonals(spec);
    std::vector<mpz_class> b(count);
    if (count == 0) return b;
    b[0] = 1;
    for (size_t k = 1; k < count; ++k) {
        mpz_class acc = 0;
        for (size_t i = 1; i <= k && i < r.size(); ++i)
            if (r[i] != 0) acc += r[i] * b[k - i];
        b[k] = -acc;
    }
    return b;
}

IntMatrix column_ops_inverse(const ColumnOps& ops) {
    const size_t N = ops.N, m = ops.m, base = N - m;
    IntMatrix inv = IntMatrix::identity(N);
    if (ops.kind == FieldCase::pow2) return inv;
    // L^-1 is upper-triangular Toeplitz with the series diagonals.
    std::vector<mpz_class> r(m, 0);
    for (size_t k = 0; k < m; ++k) r[k] = ops.A.at(base, base + k);
    std::vector<mpz_class> b(m, 0);
    b[0] = 1;
    for (size_t k = 1; k < m; ++k) {
        mpz_class acc = 0;
        for (size_t i = 1; i <= k; ++i)
            if (r[i] != 0) acc += r[i] * b[k - i];
        b[k] = -acc;
    }
    IntMatrix Linv(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) Linv.at(i, j) = b[j - i];
    IntMatrix K = ops.K_block();
    IntMatrix KLinv = K * Linv;
    for (size_t i = 0; i < base; ++i)
        for (size_t j = 0; j < m; ++j) inv.at(i, base + j) = -KLinv.at(i, j);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) inv.at(base + i, base + j) = Linv.at(i, j);
    return inv;
}

BigFloat zerosum_check(const FieldSpec& spec, uint64_t j, mpfr_prec_t prec) {
    if (spec.kind != FieldCase::pow2_pq)
        throw construction_error("zero-sum identity applies to the 2^r*p*q case");
    if (j % 2 == 0 || j % spec.p == 0)
        throw construction_error("zero-sum identity requires odd j with p not dividing j");
    // psi_{jq} = 2cos(j*pi / (2^(r-1) p))
    BigFloat theta = BigFloat::pi(prec);
    mpfr_mul_ui(theta.raw(), theta.raw(), j, MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), spec.half_power() * spec.p, MPFR_RNDN);
    BigFloat x = cos(theta);
    mpfr_mul_2si(x.raw(), x.raw(), 1, MPFR_RNDN);
    BigFloat sum(0L, prec);
    for (uint64_t k = 1; k <= (spec.p - 1) / 2; ++k) {
        BigFloat term = eval_real(u_poly(spec.half_power() * k), x, prec);
        if ((k + 1) % 2 == 0) sum += term;
        else sum -= term;
    }
    return sum - BigFloat(1L, prec);
}

TransformedMatrices transformed_parts(const FieldSpec& spec, mpfr_prec_t prec) {
    TransformedMatrices out{nodes(spec, prec), BigMatrix(), column_ops(spec), BigMatrix(),
                            BigFloat(0L, prec)};
    out.VN = build_VN(out.ns);
    out.VNA = spec.kind == FieldCase::pow2 ? out.VN : out.VN * out.ops.A;
    const size_t base = spec.N - spec.m;
    if (base > 0) {
        BigFloat worst(0L, prec);
        size_t wi = 0, wj = 0;
        for (size_t i = 0; i < base; ++i)
            for (size_t j = base; j < spec.N; ++j) {
                BigFloat v = abs(out.VNA.at(i, j));
                if (v > worst) {
                    worst = std::move(v);
                    wi = i;
                    wj = j;
                }
            }
        BigFloat tol = BigFloat::pow2(-static_cast<long>(prec / 2), prec) * out.VN.frobenius_norm();
        if (worst > tol)
            throw construction_error("zero-block violation at (" + std::to_string(wi) + "," +
                                     std::to_string(wj) + "): |entry| = " + worst.str());
        out.zero_block_max = std::move(worst);
    }
    return out;
}

BigMatrix transformed(const FieldSpec& spec, mpfr_prec_t prec) {
    return transformed_parts(spec, prec).VNA;
}

EquivalenceMap extract_Rm(const FieldSpec& spec, mpfr_prec_t prec) {
    TransformedMatrices parts = transformed_parts(spec, prec);
    EquivalenceMap map;
    map.spec = spec;
    map.prec = prec;
    const size_t base = spec.N - spec.m;
    map.Rm = parts.VNA.block(base, base, spec.m, spec.m);

    IntPoly phi = real_cyclotomic_poly(spec);
    map.P = IntMatrix(spec.m, spec.m);
    for (size_t i = 0; i < spec.m; ++i) {
        IntPoly rem = divrem(rep_poly(spec, i), phi).rem;
        for (size_t j = 0; j < spec.m; ++j) map.P.at(i, j) = rem.coeff(j);
    }
    map.lambda = abs(det_bareiss(map.P));
    if (map.lambda == 0)
        throw construction_error("index matrix P is singular for n = " + std::to_string(spec.n));

    InverseResult ir = invert(map.Rm);
    BigFloat target = BigFloat::pow2(-static_cast<long>(prec / 2), prec);
    if (ir.residual > target)
        throw construction_error("R_m inverse residual above tolerance: " + ir.residual.str());
    map.Rm_inv = std::move(ir.inv);
    return map;
}

std::vector<BigFloat> forward_map(const EquivalenceMap& map, const std::vector<mpz_class>& coords) {
    if (coords.size() != map.spec.m) throw construction_error("forward map dimension mismatch");
    std::vector<BigFloat> x;
    x.reserve(coords.size());
    for (const mpz_class& c : coords) x.emplace_back(c, map.prec);
    return map.Rm.matvec(x);
}

std::vector<BigFloat> backward_map(const EquivalenceMap& map, const std::vector<BigFloat>& v) {
    if (v.size() != map.spec.m) throw construction_error("backward map dimension mismatch");
    BigFloat lam(map.lambda, map.prec);
    std::vector<BigFloat> scaled;
    scaled.reserve(v.size());
    for (const BigFloat& x : v) scaled.push_back(x * lam);
    return map.Rm_inv.matvec(scaled);
}

}  // namespace relattice
