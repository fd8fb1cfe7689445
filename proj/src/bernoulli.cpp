#include "stirpoly/bernoulli.hpp"

#include <stdexcept>

#include "stirpoly/integer.hpp"
#include "stirpoly/series.hpp"

namespace stirpoly {

BernoulliTable bernoulli_table(int max) {
    if (max < 0) throw std::domain_error("bernoulli index must be nonnegative");
    // (e^z - 1)/z has coefficient 1/(i+1)! at z^i; B_n = n! [z^n] of its reciprocal.
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(max) + 1);
    for (int i = 0; i <= max; ++i) e.emplace_back(Integer(1), factorial(static_cast<unsigned long>(i) + 1));
    const SeriesQ t = reciprocal(SeriesQ(max, std::move(e)));

    BernoulliTable table;
    table.values.reserve(static_cast<std::size_t>(max) + 1);
    for (int n = 0; n <= max; ++n)
        table.values.push_back(Rational(factorial(static_cast<unsigned long>(n))) * t.coeff(static_cast<std::size_t>(n)));
    return table;
}

Rational bernoulli_oracle(int n) {
    if (n < 0) throw std::domain_error("bernoulli index must be nonnegative");
    Rational sum(0);
    for (int k = 0; k <= n; ++k) {
        Rational inner(0);
        for (int j = 0; j <= k; ++j) {
            // 0^0 = 1 by the empty-product convention.
            Integer jn = (j == 0 && n == 0) ? Integer(1) : pow_ui(Integer(j), static_cast<unsigned long>(n));
            Integer term = binomial(Integer(k), static_cast<unsigned long>(j)) * jn;
            if (j % 2 != 0) term = -term;
            inner += Rational(term);
        }
        sum += inner / Rational(k + 1);
    }
    return sum;
}

}  // namespace stirpoly
