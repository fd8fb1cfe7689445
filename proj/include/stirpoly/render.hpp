#ifndef STIRPOLY_RENDER_HPP
#define STIRPOLY_RENDER_HPP

#include <string>
#include <vector>

#include "stirpoly/polynomial.hpp"

namespace stirpoly {

// Descending, human-readable rendering: "3x - 1", "-9x^4 + 54x^3 - ...".
// Non-integer rational coefficients are parenthesized: "(1/4)x^2 - (1/12)x".
std::string poly_to_text(const PolyZ& p);
std::string poly_to_text(const PolyQ& p);

// Ascending dense coefficient list as exact strings (rationals as "num/den",
// denominator omitted when 1). The zero polynomial renders as ["0"].
std::vector<std::string> coeff_strings(const PolyZ& p);
std::vector<std::string> coeff_strings(const PolyQ& p);

}  // namespace stirpoly

#endif
