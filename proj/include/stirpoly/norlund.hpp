#ifndef STIRPOLY_NORLUND_HPP
#define STIRPOLY_NORLUND_HPP

#include <vector>

#include "stirpoly/polynomial.hpp"

namespace stirpoly {

// B_n^(x): the degree-n polynomial in x defined by
//   (z/(e^z - 1))^x = sum_n B_n^(x) z^n / n!.
struct NorlundPoly {
    int n;
    PolyQ poly;
};

// All of B_0^(x) .. B_max^(x), computed in one pass: with
// g(z) = log(z/(e^z - 1)) truncated at order max,
//   [x^m] B_n^(x) = n! [z^n] g(z)^m / m!.
class NorlundTable {
public:
    explicit NorlundTable(int max);

    int max_index() const { return static_cast<int>(polys_.size()) - 1; }
    const PolyQ& poly(int n) const { return polys_.at(static_cast<std::size_t>(n)); }

private:
    std::vector<PolyQ> polys_;
};

NorlundPoly norlund_poly(int n);

// [x^k] B_n^(x) by literal enumeration of all C(n-1, k-1) compositions of n
// into k positive parts:
//   (-1)^(n-k) (n!/k!) sum over compositions of prod_i B_{v_i} / (v_i * v_i!).
// Exponential in n; this is the slow independent oracle for NorlundTable.
// The Bernoulli values it consumes come from bernoulli_oracle, so no code is
// shared with the series route.
Rational liu_srivastava_coeff(int n, int k);

// B_n^(x) assembled entirely from liu_srivastava_coeff.
PolyQ liu_srivastava_poly(int n);

}  // namespace stirpoly

#endif
