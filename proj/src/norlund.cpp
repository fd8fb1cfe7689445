#include "stirpoly/norlund.hpp"

#include <stdexcept>

#include "stirpoly/bernoulli.hpp"
#include "stirpoly/series.hpp"

namespace stirpoly {

NorlundTable::NorlundTable(int max) {
    if (max < 0) throw std::domain_error("norlund index must be nonnegative");
    const int N = max;

    std::vector<Integer> fact(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) fact[static_cast<std::size_t>(i)] = factorial(static_cast<unsigned long>(i));

    // g = log(z/(e^z - 1)) = -log((e^z - 1)/z)
    std::vector<Rational> e;
    e.reserve(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) e.emplace_back(Integer(1), fact[static_cast<std::size_t>(i)] * Integer(i + 1));
    const SeriesQ g = Rational(-1) * log(SeriesQ(N, std::move(e)));

    // coeffs[n][m] = [x^m] B_n^(x) = (n!/m!) [z^n] g^m
    std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        coeffs[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));

    SeriesQ power = SeriesQ::one(N);  // g^m
    for (int m = 0; m <= N; ++m) {
        for (int n = m; n <= N; ++n) {
            const Rational& gm_n = power.coeff(static_cast<std::size_t>(n));
            if (gm_n.is_zero()) continue;
            const Integer falling = exact_quotient(fact[static_cast<std::size_t>(n)], fact[static_cast<std::size_t>(m)]);
            coeffs[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = Rational(falling) * gm_n;
        }
        if (m < N) power = power * g;
    }

    polys_.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        PolyQ p(std::move(coeffs[static_cast<std::size_t>(n)]));
        if (p.degree() != n) throw std::logic_error("norlund polynomial degree invariant broken");
        polys_.push_back(std::move(p));
    }
}

NorlundPoly norlund_poly(int n) {
    NorlundTable table(n);
    return NorlundPoly{n, table.poly(n)};
}

Rational liu_srivastava_coeff(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("coefficient index out of range");

    // Per-part weight B_v / (v * v!), with Bernoulli values from the double-sum
    // oracle to keep this route fully independent of the series machinery.
    std::vector<Rational> weight(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int v = 1; v <= n - k + 1; ++v)
        weight[static_cast<std::size_t>(v)] =
            bernoulli_oracle(v) / Rational(Integer(v) * factorial(static_cast<unsigned long>(v)));

    Rational sum(0);
    // DFS over compositions (v_1, ..., v_k) of n, carrying the partial product.
    auto enumerate = [&](auto&& self, int remaining, int slots, const Rational& prod) -> void {
        if (slots == 1) {
            sum += prod * weight[static_cast<std::size_t>(remaining)];
            return;
        }
        for (int v = 1; v <= remaining - (slots - 1); ++v)
            self(self, remaining - v, slots - 1, prod * weight[static_cast<std::size_t>(v)]);
    };
    enumerate(enumerate, n, k, Rational(1));

    Rational scale(factorial(static_cast<unsigned long>(n)), factorial(static_cast<unsigned long>(k)));
    if ((n - k) % 2 != 0) scale = -scale;
    return scale * sum;
}

PolyQ liu_srivastava_poly(int n) {
    if (n == 0) return PolyQ::constant(Rational(1));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = liu_srivastava_coeff(n, k);
    return PolyQ(std::move(c));
}

}  // namespace stirpoly
