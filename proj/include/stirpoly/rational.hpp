#ifndef STIRPOLY_RATIONAL_HPP
#define STIRPOLY_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "stirpoly/integer.hpp"

namespace stirpoly {

// Normalized fraction of Integers: denominator > 0, gcd(|num|, den) = 1.
// Every constructor canonicalizes, so operator== is structural equality.
// Floating point is deliberately unrepresentable here.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("division by zero");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
    Rational(double) = delete;

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "num/den", denominator omitted when 1.
    std::string to_string() const { return q_.get_str(); }

    Rational operator-() const {
        Rational r(*this);
        r.q_ = -r.q_;
        return r;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;  // kept canonical
};

inline Rational inverse(const Rational& a) {
    return Rational(1) / a;
}

inline std::string to_string(const Rational& a) { return a.to_string(); }

}  // namespace stirpoly

#endif
