#include "stirpoly/series.hpp"

namespace stirpoly {

namespace {

void require_same_order(const SeriesQ& a, const SeriesQ& b) {
    if (a.order() != b.order()) throw std::domain_error("series order mismatch");
}

}  // namespace

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    require_same_order(a, b);
    SeriesQ r(a.order());
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
    require_same_order(a, b);
    SeriesQ r(a.order());
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    require_same_order(a, b);
    SeriesQ r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

SeriesQ operator*(const Rational& s, const SeriesQ& a) {
    SeriesQ r(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
    return r;
}

// b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
SeriesQ reciprocal(const SeriesQ& a) {
    if (a.c_[0].is_zero()) throw std::domain_error("invalid series constant term");
    const Rational inv0 = inverse(a.c_[0]);
    SeriesQ r(a.order());
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < a.c_.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += a.c_[k] * r.c_[n - k];
        r.c_[n] = -(inv0 * acc);
    }
    return r;
}

SeriesQ div(const SeriesQ& a, const SeriesQ& b) { return a * reciprocal(b); }

// log a = integral of a'/a; requires a_0 = 1.
SeriesQ log(const SeriesQ& a) {
    if (a.c_[0] != Rational(1)) throw std::domain_error("invalid series constant term");
    // d_n = (a'/a)_n computed by the convolution (a')_n = sum a_k d_{n-k} shifted:
    // a'(z) = a(z) * d(z) with d = (log a)'. Solve for d term by term.
    const std::size_t n1 = a.c_.size();
    std::vector<Rational> d(n1, Rational(0));  // derivative of log a, order reduced by 1
    for (std::size_t n = 0; n + 1 < n1; ++n) {
        // (a')_n = (n+1) a_{n+1}
        Rational acc = Rational(static_cast<long>(n) + 1) * a.c_[n + 1];
        for (std::size_t k = 1; k <= n; ++k) acc -= a.c_[k] * d[n - k];
        d[n] = acc;  // a_0 = 1
    }
    SeriesQ r(a.order());
    for (std::size_t n = 1; n < n1; ++n) r.c_[n] = d[n - 1] / Rational(static_cast<long>(n));
    return r;
}

// h = exp(a): h_0 = 1, n h_n = sum_{k=1..n} k a_k h_{n-k}; requires a_0 = 0.
SeriesQ exp(const SeriesQ& a) {
    if (!a.c_[0].is_zero()) throw std::domain_error("invalid series constant term");
    SeriesQ r(a.order());
    r.c_[0] = Rational(1);
    for (std::size_t n = 1; n < a.c_.size(); ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += Rational(static_cast<long>(k)) * a.c_[k] * r.c_[n - k];
        r.c_[n] = acc / Rational(static_cast<long>(n));
    }
    return r;
}

}  // namespace stirpoly
