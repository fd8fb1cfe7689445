#ifndef STIRPOLY_INTEGER_HPP
#define STIRPOLY_INTEGER_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace stirpoly {

// Arbitrary-precision signed integer. GMP keeps a unique representation of
// zero and never overflows, which is all the callers rely on.
using Integer = mpz_class;

inline std::string to_string(const Integer& a) { return a.get_str(); }

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Binomial coefficient with arbitrary (possibly negative) integer upper
// argument: binomial(a, b) = a(a-1)...(a-b+1) / b!.
inline Integer binomial(const Integer& a, unsigned long b) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b);
    return r;
}

inline bool divides(const Integer& d, const Integer& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient a/d when d | a; the caller must have checked divisibility.
inline Integer exact_quotient(const Integer& a, const Integer& d) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

}  // namespace stirpoly

#endif
