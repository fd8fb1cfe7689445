#ifndef STIRPOLY_BERNOULLI_HPP
#define STIRPOLY_BERNOULLI_HPP

#include <vector>

#include "stirpoly/rational.hpp"

namespace stirpoly {

// Bernoulli numbers in the convention fixed by the generating function
// z/(e^z - 1), i.e. B_1 = -1/2. The opposite sign convention for B_1 is
// also common; everything in this library depends on this one.
struct BernoulliTable {
    std::vector<Rational> values;  // B_0 .. B_max

    int max_index() const { return static_cast<int>(values.size()) - 1; }
    const Rational& B(int n) const { return values.at(static_cast<std::size_t>(n)); }
};

// Exact B_0..B_max as the coefficients of z/(e^z - 1), by series reciprocal.
BernoulliTable bernoulli_table(int max);

// Independent slow route: the double sum
//   B_n = sum_{k=0..n} 1/(k+1) sum_{j=0..k} (-1)^j C(k,j) j^n
// used only for differential testing against the table.
Rational bernoulli_oracle(int n);

}  // namespace stirpoly

#endif
