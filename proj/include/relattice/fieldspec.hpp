#pragma once

#include <cstdint>
#include <string>

namespace relattice {

enum class FieldCase { pow2, pow2_p, pow2_pq };

std::string to_string(FieldCase c);

// The maximal totally-real subfield of the n-th cyclotomic field for
// n = 2^r * k with r >= 2 and k in {1, p, p*q} (p < q odd primes).
// Totally real: s2 = 0 and s1 = m.
struct FieldSpec {
    uint64_t n = 0;
    int r = 0;        // exponent of 2 in n
    uint64_t k = 1;   // odd part of n
    uint64_t p = 0;   // smaller odd prime factor (0 when absent)
    uint64_t q = 0;   // larger odd prime factor (0 when absent)
    uint64_t N = 0;   // n/4
    uint64_t m = 0;   // degree of the field, phi(n)/2
    uint64_t s1 = 0;  // = m
    uint64_t s2 = 0;  // = 0
    FieldCase kind = FieldCase::pow2;

    // Throws std::invalid_argument for unsupported n, naming the
    // accepted forms.
    static FieldSpec parse(uint64_t n);

    uint64_t half_power() const { return uint64_t(1) << (r - 1); }     // 2^(r-1)
    uint64_t quarter_power() const { return uint64_t(1) << (r - 2); }  // 2^(r-2)
};

}  // namespace relattice
