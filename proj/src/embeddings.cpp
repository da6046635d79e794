#include "relattice/embeddings.hpp"

namespace relattice {

namespace {

BigFloat node_value(uint64_t odd_index, uint64_t n, mpfr_prec_t prec) {
    // 2cos(2pi*(2k-1)/n)
    BigFloat theta = BigFloat::pi(prec);
    mpfr_mul_ui(theta.raw(), theta.raw(), 2 * odd_index, MPFR_RNDN);
    mpfr_div_ui(theta.raw(), theta.raw(), n, MPFR_RNDN);
    BigFloat c = cos(theta);
    mpfr_mul_2si(c.raw(), c.raw(), 1, MPFR_RNDN);
    return c;
}

}  // namespace

NodeSet nodes(const FieldSpec& spec, mpfr_prec_t prec) {
    NodeSet ns;
    ns.spec = spec;
    ns.prec = prec;
    std::vector<uint64_t> bad_p, bad_q, good;
    for (uint64_t k = 1; k <= spec.N; ++k) {
        uint64_t idx = 2 * k - 1;
        if (spec.p != 0 && idx % spec.p == 0) bad_p.push_back(idx);
        else if (spec.q != 0 && idx % spec.q == 0) bad_q.push_back(idx);
        else good.push_back(idx);
    }
    auto push = [&](uint64_t idx, NodeClass cls) {
        ns.odd_index.push_back(idx);
        ns.labels.push_back(cls);
        ns.nodes.push_back(node_value(idx, spec.n, prec));
    };
    for (uint64_t idx : bad_p) push(idx, NodeClass::bad_p);
    for (uint64_t idx : bad_q) push(idx, NodeClass::bad_q);
    for (uint64_t idx : good) push(idx, NodeClass::good);
    ns.bad_count = bad_p.size() + bad_q.size();
    if (ns.good_count() != spec.m || ns.nodes.size() != spec.N)
        throw construction_error("node classification does not match the field degree");
    return ns;
}

BigMatrix build_VN(const NodeSet& ns) {
    const size_t N = ns.nodes.size();
    BigMatrix v(N, N, ns.prec);
    for (size_t row = 0; row < N; ++row) {
        const BigFloat& psi = ns.nodes[row];
        v.at(row, 0) = BigFloat(2L, ns.prec);
        if (N > 1) v.at(row, 1) = psi;
        for (size_t i = 2; i < N; ++i) {
            BigFloat t = psi * v.at(row, i - 1);
            t -= v.at(row, i - 2);
            v.at(row, i) = std::move(t);
        }
    }
    return v;
}

BigMatrix build_VN(const FieldSpec& spec, mpfr_prec_t prec) { return build_VN(nodes(spec, prec)); }

BigMatrix build_vandermonde(const std::vector<BigFloat>& roots, mpfr_prec_t prec) {
    const size_t n = roots.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (roots[i] == roots[j]) throw construction_error("Vandermonde nodes must be distinct");
    BigMatrix v(n, n, prec);
    for (size_t row = 0; row < n; ++row) {
        v.at(row, 0) = BigFloat(1L, prec);
        BigFloat t = roots[row].round_to(prec);
        for (size_t i = 1; i < n; ++i) v.at(row, i) = v.at(row, i - 1) * t;
    }
    return v;
}

std::vector<BigFloat> real_cyclotomic_roots(const FieldSpec& spec, mpfr_prec_t prec) {
    NodeSet ns = nodes(spec, prec);
    std::vector<BigFloat> out;
    out.reserve(spec.m);
    for (size_t i = ns.bad_count; i < ns.nodes.size(); ++i) out.push_back(ns.nodes[i]);
    return out;
}

std::vector<mpz_class> coordinate_embedding(const FieldSpec& spec, const std::vector<mpz_class>& coords) {
    if (coords.size() != spec.m) throw construction_error("coordinate vector has wrong dimension");
    return coords;
}

std::vector<BigFloat> canonical_embedding(const FieldSpec& spec, const std::vector<mpz_class>& coords,
                                          mpfr_prec_t prec) {
    if (coords.size() != spec.m) throw construction_error("coordinate vector has wrong dimension");
    std::vector<mpz_class> c = coords;
    IntPoly poly(std::move(c));
    std::vector<BigFloat> out;
    out.reserve(spec.m);
    for (const BigFloat& psi : real_cyclotomic_roots(spec, prec)) out.push_back(eval_real(poly, psi, prec));
    return out;
}

}  // namespace relattice
