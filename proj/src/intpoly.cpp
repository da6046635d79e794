#include "relattice/intpoly.hpp"

#include <mutex>
#include <sstream>

namespace relattice {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
    std::vector<mpz_class> c(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
    return IntPoly(std::move(c));
}

DivRem divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw construction_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {IntPoly(), a};
    std::vector<mpz_class> rem(a.coeffs());
    const long db = b.degree();
    const mpz_class& lead = b.coeffs().back();
    std::vector<mpz_class> quot(a.degree() - db + 1, 0);
    for (long d = a.degree(); d >= db; --d) {
        mpz_class& top = rem[d];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw construction_error("non-exact leading-coefficient division");
        quot[d - db] = q;
        for (long j = 0; j <= db; ++j) rem[d - db + j] -= q * b.coeff(j);
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    DivRem dr = divrem(a, b);
    if (!dr.rem.is_zero()) throw construction_error("exact polynomial division has nonzero remainder");
    return dr.quot;
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
    IntPoly acc;
    for (long i = outer.degree(); i >= 0; --i) {
        acc = acc * inner;
        acc = acc + IntPoly::constant(outer.coeff(static_cast<size_t>(i)));
    }
    return acc;
}

mpz_class eval_int(const IntPoly& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (long i = p.degree(); i >= 0; --i) {
        acc *= x;
        acc += p.coeff(static_cast<size_t>(i));
    }
    return acc;
}

mpz_class eval_mod(const IntPoly& p, const mpz_class& x, const mpz_class& q) {
    if (q < 2) throw construction_error("eval_mod requires modulus >= 2");
    mpz_class acc = 0;
    mpz_class xr = x % q;
    if (xr < 0) xr += q;
    for (long i = p.degree(); i >= 0; --i) {
        acc *= xr;
        acc += p.coeff(static_cast<size_t>(i));
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), q.get_mpz_t());
    }
    return acc;
}

BigFloat eval_real(const IntPoly& p, const BigFloat& x, mpfr_prec_t prec) {
    BigFloat acc(0L, prec);
    BigFloat xr = x.round_to(prec);
    for (long i = p.degree(); i >= 0; --i) {
        acc *= xr;
        acc += BigFloat(p.coeff(static_cast<size_t>(i)), prec);
    }
    return acc;
}

namespace {
std::mutex u_mutex;
std::vector<IntPoly> u_table;  // guarded by u_mutex, grows only
}  // namespace

const IntPoly& u_poly(size_t i) {
    std::lock_guard<std::mutex> lock(u_mutex);
    if (u_table.empty()) {
        u_table.push_back(IntPoly{2});
        u_table.push_back(IntPoly{0, 1});
    }
    while (u_table.size() <= i) {
        size_t k = u_table.size();
        u_table.push_back(IntPoly{0, 1} * u_table[k - 1] - u_table[k - 2]);
    }
    return u_table[i];
}

std::vector<mpz_class> u_expand(const IntPoly& p) {
    if (p.is_zero()) return {};
    long d = p.degree();
    std::vector<mpz_class> g(static_cast<size_t>(d) + 1, 0);
    IntPoly work = p;
    for (long i = d; i >= 1; --i) {
        mpz_class c = work.coeff(static_cast<size_t>(i));
        if (c != 0) {
            g[static_cast<size_t>(i)] = c;
            work = work - c * u_poly(static_cast<size_t>(i));
        }
    }
    mpz_class c0 = work.coeff(0);
    if (mpz_odd_p(c0.get_mpz_t()))
        throw construction_error("u-basis expansion requires an even constant residue");
    g[0] = c0 / 2;
    return g;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const mpz_class c = coeff(static_cast<size_t>(i));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpz_class a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace relattice
