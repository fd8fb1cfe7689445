#ifndef STIRPOLY_SERIES_HPP
#define STIRPOLY_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stirpoly/rational.hpp"

namespace stirpoly {

// Truncated formal power series over Rational: all arithmetic is exact
// modulo z^(order+1). The coefficient vector always has length order + 1.
class SeriesQ {
public:
    explicit SeriesQ(int order) : c_(static_cast<std::size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::domain_error("series order must be nonnegative");
    }

    SeriesQ(int order, std::vector<Rational> coeffs) : SeriesQ(order) {
        if (coeffs.size() > c_.size()) coeffs.resize(c_.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static SeriesQ one(int order) {
        SeriesQ s(order);
        s.c_[0] = Rational(1);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<Rational>& coefficients() const { return c_; }

    friend bool operator==(const SeriesQ& a, const SeriesQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesQ& a, const SeriesQ& b) { return a.c_ != b.c_; }

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
    friend SeriesQ operator*(const Rational& s, const SeriesQ& a);

    friend SeriesQ reciprocal(const SeriesQ& a);
    friend SeriesQ log(const SeriesQ& a);
    friend SeriesQ exp(const SeriesQ& a);

private:
    std::vector<Rational> c_;
};

// Division a/b; b must have a nonzero constant term.
SeriesQ div(const SeriesQ& a, const SeriesQ& b);

}  // namespace stirpoly

#endif
