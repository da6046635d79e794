#include "relattice/fieldspec.hpp"

#include <stdexcept>
#include <vector>

namespace relattice {

std::string to_string(FieldCase c) {
    switch (c) {
        case FieldCase::pow2: return "2^r";
        case FieldCase::pow2_p: return "2^r*p";
        case FieldCase::pow2_pq: return "2^r*p*q";
    }
    return "?";
}

FieldSpec FieldSpec::parse(uint64_t n) {
    const std::string supported =
        "supported conductors are n = 2^r, 2^r*p and 2^r*p*q with r >= 2 and p < q odd primes";
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("n = " + std::to_string(n) + " is not divisible by 4; " + supported);
    FieldSpec s;
    s.n = n;
    uint64_t rest = n;
    while (rest % 2 == 0) {
        rest /= 2;
        ++s.r;
    }
    s.k = rest;
    std::vector<uint64_t> primes;
    for (uint64_t d = 3; d * d <= rest; d += 2) {
        if (rest % d == 0) {
            primes.push_back(d);
            rest /= d;
            if (rest % d == 0)
                throw std::invalid_argument("n = " + std::to_string(n) +
                                            " has a repeated odd prime factor; " + supported);
        }
    }
    if (rest > 1) primes.push_back(rest);
    if (primes.size() > 2)
        throw std::invalid_argument("n = " + std::to_string(n) +
                                    " has three or more odd prime factors; " + supported);

    uint64_t phi_k = 1;
    if (primes.size() >= 1) {
        s.p = primes[0];
        phi_k *= primes[0] - 1;
    }
    if (primes.size() == 2) {
        s.q = primes[1];
        phi_k *= primes[1] - 1;
    }
    s.kind = primes.empty() ? FieldCase::pow2
                            : (primes.size() == 1 ? FieldCase::pow2_p : FieldCase::pow2_pq);
    s.N = n / 4;
    s.m = (uint64_t(1) << (s.r - 2)) * phi_k;
    s.s1 = s.m;
    s.s2 = 0;
    return s;
}

}  // namespace relattice
