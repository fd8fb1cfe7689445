#ifndef STIRPOLY_SEQUENCES_HPP
#define STIRPOLY_SEQUENCES_HPP

#include <utility>
#include <vector>

#include "stirpoly/integer.hpp"

namespace stirpoly {

std::vector<long> primes_upto(long n);

bool is_prime(long n);

// Legendre's formula: exponent of the prime p in n!.
long vp_factorial(long n, long p);

// Per-prime exponents e_p = sum_{k>=0} floor(n / (p^k (p-1))) over primes
// p <= n+1, ascending by p. Every e_p is >= v_p((n+1)!), which is what makes
// m_n an integer.
struct ValuationProfile {
    long n;
    std::vector<std::pair<long, long>> entries;  // (p, e_p)
};

ValuationProfile valuation_profile(long n);

// m_n = (1/(n+1)!) * prod_p p^(e_p), assembled prime by prime from the
// valuation profile; (n+1)! itself is never constructed. A negative
// per-prime valuation would mean the integrality claim is broken, and aborts.
Integer m(long n);

// Adelberg's normalizer d_n = (n+1) m_n.
Integer d(long n);

struct MSequence {
    std::vector<Integer> values;  // m_0 .. m_max

    int max_index() const { return static_cast<int>(values.size()) - 1; }
    const Integer& at(int n) const { return values.at(static_cast<std::size_t>(n)); }
};

MSequence m_sequence(int max);

}  // namespace stirpoly

#endif
