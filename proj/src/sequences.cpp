#include "stirpoly/sequences.hpp"

#include <stdexcept>

namespace stirpoly {

std::vector<long> primes_upto(long n) {
    std::vector<long> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (long q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    return primes;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

long vp_factorial(long n, long p) {
    if (n < 0) throw std::domain_error("vp_factorial: n must be nonnegative");
    if (!is_prime(p)) throw std::domain_error("not a prime");
    long e = 0;
    for (long pk = p; pk <= n; pk *= p) {
        e += n / pk;
        if (pk > n / p) break;  // next power would exceed n
    }
    return e;
}

ValuationProfile valuation_profile(long n) {
    if (n < 0) throw std::domain_error("valuation_profile: n must be nonnegative");
    ValuationProfile profile{n, {}};
    for (long p : primes_upto(n + 1)) {
        long e = 0;
        // Terms vanish once p^k (p-1) > n.
        for (long pk = 1; pk * (p - 1) <= n; pk *= p) {
            e += n / (pk * (p - 1));
            if (pk > n / p) break;
        }
        profile.entries.emplace_back(p, e);
    }
    return profile;
}

Integer m(long n) {
    Integer result = 1;
    for (const auto& [p, e] : valuation_profile(n).entries) {
        const long v = e - vp_factorial(n + 1, p);
        if (v < 0) throw std::domain_error("m_n not an integer");
        if (v > 0) result *= pow_ui(Integer(p), static_cast<unsigned long>(v));
    }
    return result;
}

Integer d(long n) { return Integer(n + 1) * m(n); }

MSequence m_sequence(int max) {
    if (max < 0) throw std::domain_error("m_sequence: max must be nonnegative");
    MSequence seq;
    seq.values.reserve(static_cast<std::size_t>(max) + 1);
    for (int n = 0; n <= max; ++n) seq.values.push_back(m(n));
    return seq;
}

}  // namespace stirpoly
