#ifndef STIRPOLY_POLYNOMIAL_HPP
#define STIRPOLY_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirpoly/integer.hpp"
#include "stirpoly/rational.hpp"

namespace stirpoly {

// Dense univariate polynomial, coefficient of x^i at index i.
// Canonical form: empty vector for the zero polynomial, otherwise a nonzero
// trailing coefficient, so equality is vector equality and
// degree() == size() - 1.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Coeff& a) { return Polynomial(std::vector<Coeff>{a}); }

    static Polynomial monomial(const Coeff& a, std::size_t k) {
        std::vector<Coeff> c(k + 1, Coeff(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Coeff>& coefficients() const { return c_; }

    Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }

    Coeff operator()(const Coeff& x) const {
        Coeff acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial operator-() const {
        std::vector<Coeff> c(c_);
        for (auto& a : c) a = -a;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Coeff& s, const Polynomial& p) {
        std::vector<Coeff> c(p.c_);
        for (auto& a : c) a = s * a;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using PolyQ = Polynomial<Rational>;
using PolyZ = Polynomial<Integer>;

// Positive gcd of the coefficients of a nonzero integer polynomial.
inline Integer content(const PolyZ& p) {
    if (p.is_zero()) throw std::domain_error("content of zero polynomial undefined");
    Integer g = 0;
    for (const Integer& a : p.coefficients()) g = gcd(g, a);
    return g;
}

// Quotient q with q * den == num, exactly in Z[x].
// Throws "not divisible" when no such q exists.
inline PolyZ exact_div(const PolyZ& num, const PolyZ& den) {
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (num.is_zero()) return PolyZ();
    if (num.degree() < den.degree()) throw std::domain_error("not divisible");

    std::vector<Integer> rem(num.coefficients());
    const auto& d = den.coefficients();
    const Integer& lead = d.back();
    std::vector<Integer> q(num.degree() - den.degree() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer& top = rem[i + d.size() - 1];
        if (!divides(lead, top)) throw std::domain_error("not divisible");
        q[i] = exact_quotient(top, lead);
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q[i] * d[j];
    }
    for (const Integer& r : rem)
        if (r != 0) throw std::domain_error("not divisible");
    return PolyZ(std::move(q));
}

inline PolyQ to_rational_poly(const PolyZ& p) {
    std::vector<Rational> c;
    c.reserve(p.coefficients().size());
    for (const Integer& a : p.coefficients()) c.emplace_back(a);
    return PolyQ(std::move(c));
}

// The same polynomial over Z, if every coefficient is integral.
inline std::optional<PolyZ> as_integer_poly(const PolyQ& p) {
    std::vector<Integer> c;
    c.reserve(p.coefficients().size());
    for (const Rational& a : p.coefficients()) {
        if (!a.is_integer()) return std::nullopt;
        c.push_back(a.num());
    }
    return PolyZ(std::move(c));
}

}  // namespace stirpoly

#endif
