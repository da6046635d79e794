#include "relattice/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace relattice {

namespace {

int moebius(uint64_t n) {
    int mu = 1;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

IntPoly x_pow_minus_one(uint64_t d) {
    IntPoly p = IntPoly::monomial(d);
    return p - IntPoly{1};
}

std::mutex cyclo_mutex;
std::map<uint64_t, IntPoly> cyclo_table;  // guarded by cyclo_mutex

}  // namespace

const IntPoly& cyclotomic_poly(uint64_t n) {
    if (n == 0) throw construction_error("cyclotomic polynomial undefined for n = 0");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_table.find(n);
    if (it != cyclo_table.end()) return it->second;
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    std::vector<uint64_t> divisors;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    IntPoly num{1};
    IntPoly den{1};
    for (uint64_t d : divisors) {
        int mu = moebius(n / d);
        if (mu == 1) num = num * x_pow_minus_one(d);
        else if (mu == -1) den = den * x_pow_minus_one(d);
    }
    IntPoly phi = divide_exact(num, den);
    return cyclo_table.emplace(n, std::move(phi)).first->second;
}

IntPoly fold_palindromic(const IntPoly& p) {
    long deg = p.degree();
    if (deg < 0 || deg % 2 != 0) throw construction_error("fold requires even degree");
    const size_t d = static_cast<size_t>(deg) / 2;
    for (size_t i = 0; i <= static_cast<size_t>(deg); ++i)
        if (p.coeff(i) != p.coeff(static_cast<size_t>(deg) - i))
            throw construction_error("fold requires a palindromic polynomial");
    // p / x^d = c_d + sum_{j>=1} c_{d+j} (x^j + x^-j) and x^j + x^-j = u_j(x + 1/x)
    IntPoly q = IntPoly::constant(p.coeff(d));
    for (size_t j = 1; j <= d; ++j) {
        mpz_class c = p.coeff(d + j);
        if (c != 0) q = q + c * u_poly(j);
    }
    return q;
}

IntPoly unfold(const IntPoly& q) {
    long d = q.degree();
    if (d < 0) return IntPoly();
    IntPoly acc;
    IntPoly x2p1 = IntPoly{1, 0, 1};  // x^2 + 1
    IntPoly pw{1};
    // sum_j q_j x^(d-j) (x^2+1)^j
    for (long j = 0; j <= d; ++j) {
        mpz_class c = q.coeff(static_cast<size_t>(j));
        if (c != 0) acc = acc + c * (IntPoly::monomial(static_cast<size_t>(d - j)) * pw);
        if (j < d) pw = pw * x2p1;
    }
    return acc;
}

IntPoly real_cyclotomic_poly(const FieldSpec& spec) {
    if (spec.kind == FieldCase::pow2) return u_poly(spec.quarter_power());
    IntPoly phi_k_plus = fold_palindromic(cyclotomic_poly(spec.k));
    IntPoly num = compose(phi_k_plus, u_poly(uint64_t(1) << spec.r));
    IntPoly den = compose(phi_k_plus, u_poly(spec.half_power()));
    DivRem dr = divrem(num, den);
    if (!dr.rem.is_zero())
        throw construction_error("real cyclotomic quotient has nonzero remainder for n = " +
                                 std::to_string(spec.n));
    if (dr.quot.degree() != static_cast<long>(spec.m) || !dr.quot.is_monic())
        throw construction_error("real cyclotomic polynomial has wrong shape for n = " +
                                 std::to_string(spec.n));
    return dr.quot;
}

bool verify_plus_minus_relation(uint64_t n) {
    FieldSpec spec = FieldSpec::parse(n);
    return unfold(real_cyclotomic_poly(spec)) == cyclotomic_poly(n);
}

SpecialValues special_values(const FieldSpec& spec) {
    IntPoly phi = real_cyclotomic_poly(spec);
    return {eval_int(phi, 1), eval_int(phi, -1), eval_int(phi, 2), eval_int(phi, -2)};
}

}  // namespace relattice
