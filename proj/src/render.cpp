#include "stirpoly/render.hpp"

namespace stirpoly {

namespace {

struct TermView {
    bool negative;
    std::string magnitude;  // rendered |coefficient|
    bool unit;              // |coefficient| == 1
    bool parenthesize;      // non-integer rational
};

TermView term_view(const Integer& c) {
    return TermView{c < 0, to_string(abs(c)), abs(c) == 1, false};
}

TermView term_view(const Rational& c) {
    const Rational a = c.sign() < 0 ? -c : c;
    return TermView{c.sign() < 0, a.to_string(), a == Rational(1), !c.is_integer()};
}

template <typename Coeff>
std::string render_descending(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Coeff c = p.coeff(static_cast<std::size_t>(i));
        if (c == Coeff(0)) continue;
        const TermView t = term_view(c);
        if (out.empty()) {
            if (t.negative) out += "-";
        } else {
            out += t.negative ? " - " : " + ";
        }
        const bool show_magnitude = (i == 0) || !t.unit;
        if (show_magnitude) out += t.parenthesize ? "(" + t.magnitude + ")" : t.magnitude;
        if (i == 1) out += "x";
        if (i > 1) out += "x^" + std::to_string(i);
    }
    return out;
}

template <typename Coeff>
std::vector<std::string> coeff_strings_impl(const Polynomial<Coeff>& p) {
    if (p.is_zero()) return {"0"};
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const Coeff& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

}  // namespace

std::string poly_to_text(const PolyZ& p) { return render_descending(p); }
std::string poly_to_text(const PolyQ& p) { return render_descending(p); }

std::vector<std::string> coeff_strings(const PolyZ& p) { return coeff_strings_impl(p); }
std::vector<std::string> coeff_strings(const PolyQ& p) { return coeff_strings_impl(p); }

}  // namespace stirpoly
