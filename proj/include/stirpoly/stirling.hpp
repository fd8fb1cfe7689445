#ifndef STIRPOLY_STIRLING_HPP
#define STIRPOLY_STIRLING_HPP

#include <vector>

#include "stirpoly/integer.hpp"
#include "stirpoly/norlund.hpp"
#include "stirpoly/rational.hpp"

namespace stirpoly {

// Signed Stirling numbers of the first kind:
//   s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k),  s(0,0) = 1,
// the coefficients of x(x-1)...(x-n+1). Built row by row.
class StirlingTable {
public:
    explicit StirlingTable(int n_max);

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const Integer& s(int n, int k) const;

private:
    std::vector<std::vector<Integer>> rows_;
};

Integer stirling1(int n, int k);

// The bridge route: s(n, n-j) as C(n-1, j) * B_j^(x) evaluated at x = n,
// returned as a Rational so callers can assert integrality.
Rational stirling_via_norlund(int n, int j);
Rational stirling_via_norlund(int n, int j, const NorlundTable& table);

}  // namespace stirpoly

#endif
