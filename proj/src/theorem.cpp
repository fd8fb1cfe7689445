#include "stirpoly/theorem.hpp"

#include <stdexcept>
#include <utility>

#include "stirpoly/bernoulli.hpp"
#include "stirpoly/stirling.hpp"

namespace stirpoly {

namespace {

constexpr const char* kEvenOffset = "stirling-even-offset";
constexpr const char* kOddOffset = "stirling-odd-offset";
constexpr const char* kConstEquality = "constant-term-equality";
constexpr const char* kConstFormulaEven = "constant-term-formula-even";
constexpr const char* kConstFormulaOdd = "constant-term-formula-odd";
constexpr const char* kLinearCoeff = "norlund-linear-coeff";
constexpr const char* kQuadraticCoeff = "norlund-quadratic-coeff";
constexpr const char* kMIntegrality = "m-integrality";
constexpr const char* kMRatio = "m-ratio";
constexpr const char* kDegreeLaw = "degree-law";
constexpr const char* kPrimitivity = "primitivity";
constexpr const char* kBridge = "stirling-norlund-bridge";
constexpr const char* kBinomialForm = "binomial-form";

VerificationReport make_report(const char* identity, std::optional<long> k, std::optional<long> n,
                               std::optional<long> x, const Rational& left, const Rational& right) {
    VerificationReport r;
    r.identity = identity;
    r.k = k;
    r.n = n;
    r.x = x;
    r.pass = (left == right);
    r.left = left.to_string();
    r.right = right.to_string();
    return r;
}

Rational even_offset_rhs(int k, int n, const PolyZ& p_even, const Integer& m_even) {
    const Integer c = binomial(Integer(n), static_cast<unsigned long>(2 * k + 1));
    return Rational(c * p_even(Integer(n)), m_even);
}

Rational odd_offset_rhs(int k, int n, const PolyZ& p_odd, const Integer& m_odd) {
    const Integer c = binomial(Integer(n), static_cast<unsigned long>(2 * k + 2));
    return Rational(c * Integer(n) * Integer(n - 1) * p_odd(Integer(n)), m_odd);
}

Rational constant_term_formula_even(int k, const Integer& m_even, const Rational& bernoulli_2k) {
    return -(Rational(m_even * Integer(2 * k + 1)) * bernoulli_2k / Rational(2 * k));
}

Rational constant_term_formula_odd(int k, const Integer& m_odd, const Rational& bernoulli_2k) {
    return -(Rational(Integer(k + 1) * m_odd * Integer(2 * k + 1)) * bernoulli_2k / Rational(2 * k));
}

Rational linear_coeff_rhs(int n, const Rational& bernoulli_n) {
    Rational r = bernoulli_n / Rational(n);
    return (n % 2 == 0) ? -r : r;  // (-1)^(n-1)
}

}  // namespace

PrimitivePoly compute_P(int n, const PolyQ& norlund_n, const Integer& m_n) {
    if (n < 2) throw std::domain_error("compute_P requires n >= 2");
    const PolyQ q_rational = Rational(Integer(n + 1) * m_n) * norlund_n;
    const std::optional<PolyZ> q = as_integer_poly(q_rational);
    if (!q) throw std::domain_error("scaling failed");

    // Divide out x, then x(x-1) for odd n; staging localizes a missing factor.
    PolyZ quotient;
    try {
        quotient = exact_div(*q, PolyZ::monomial(Integer(1), 1));
    } catch (const std::domain_error&) {
        throw std::domain_error("factor missing: x");
    }
    if (n % 2 == 1) {
        try {
            quotient = exact_div(quotient, PolyZ(std::vector<Integer>{Integer(0), Integer(-1), Integer(1)}));
        } catch (const std::domain_error&) {
            throw std::domain_error("factor missing: x(x-1)");
        }
    }
    if (content(quotient) != 1) throw std::domain_error("not primitive");
    return PrimitivePoly{n, std::move(quotient), m_n};
}

PrimitivePoly compute_P(int n) {
    if (n < 2) throw std::domain_error("compute_P requires n >= 2");
    NorlundTable table(n);
    return compute_P(n, table.poly(n), m(n));
}

std::vector<VerificationReport> verify_theorem(int k, int n_min, int n_max) {
    if (k < 1) throw std::domain_error("k must be at least 1");
    std::vector<VerificationReport> reports;
    if (n_max < 2 * k) return reports;

    NorlundTable norlund(2 * k + 1);
    const MSequence ms = m_sequence(2 * k + 1);
    const StirlingTable st(n_max);
    const PrimitivePoly p_even = compute_P(2 * k, norlund.poly(2 * k), ms.at(2 * k));
    const PrimitivePoly p_odd = compute_P(2 * k + 1, norlund.poly(2 * k + 1), ms.at(2 * k + 1));

    // Points below the identity's range (n < 2k resp. n < 2k+1) are skipped.
    for (int n = std::max(n_min, 2 * k); n <= n_max; ++n)
        reports.push_back(make_report(kEvenOffset, k, n, std::nullopt, Rational(st.s(n, n - 2 * k)),
                                      even_offset_rhs(k, n, p_even.poly, p_even.m_n)));
    for (int n = std::max(n_min, 2 * k + 1); n <= n_max; ++n)
        reports.push_back(make_report(kOddOffset, k, n, std::nullopt, Rational(st.s(n, n - 2 * k - 1)),
                                      odd_offset_rhs(k, n, p_odd.poly, p_odd.m_n)));
    return reports;
}

std::vector<VerificationReport> verify_constant_terms(int k_max) {
    if (k_max < 1) throw std::domain_error("k_max must be at least 1");
    const int top = 2 * k_max + 1;
    NorlundTable norlund(top);
    const MSequence ms = m_sequence(top);
    const BernoulliTable bern = bernoulli_table(2 * k_max);

    std::vector<PrimitivePoly> P(static_cast<std::size_t>(top) + 1);
    for (int n = 2; n <= top; ++n) P[static_cast<std::size_t>(n)] = compute_P(n, norlund.poly(n), ms.at(n));

    std::vector<VerificationReport> reports;
    for (int k = 1; k <= k_max; ++k) {
        const auto& even = P[static_cast<std::size_t>(2 * k)];
        const auto& odd = P[static_cast<std::size_t>(2 * k + 1)];
        reports.push_back(make_report(kConstEquality, k, std::nullopt, std::nullopt,
                                      Rational(even.poly.coeff(0)), Rational(odd.poly.coeff(0))));
    }
    for (int k = 1; k <= k_max; ++k) {
        const auto& even = P[static_cast<std::size_t>(2 * k)];
        reports.push_back(make_report(kConstFormulaEven, k, std::nullopt, std::nullopt,
                                      Rational(even.poly.coeff(0)),
                                      constant_term_formula_even(k, even.m_n, bern.B(2 * k))));
    }
    for (int k = 1; k <= k_max; ++k) {
        const auto& odd = P[static_cast<std::size_t>(2 * k + 1)];
        reports.push_back(make_report(kConstFormulaOdd, k, std::nullopt, std::nullopt,
                                      Rational(odd.poly.coeff(0)),
                                      constant_term_formula_odd(k, odd.m_n, bern.B(2 * k))));
    }
    return reports;
}

std::vector<VerificationReport> verify_norlund_coefficients(int n_max) {
    if (n_max < 1) throw std::domain_error("n_max must be at least 1");
    NorlundTable norlund(n_max);
    const BernoulliTable bern = bernoulli_table(n_max);

    std::vector<VerificationReport> reports;
    for (int n = 1; n <= n_max; ++n)
        reports.push_back(make_report(kLinearCoeff, std::nullopt, n, std::nullopt,
                                      norlund.poly(n).coeff(1), linear_coeff_rhs(n, bern.B(n))));
    for (int j = 1; 2 * j + 1 <= n_max; ++j) {
        const int idx = 2 * j + 1;
        reports.push_back(make_report(kQuadraticCoeff, std::nullopt, idx, std::nullopt,
                                      norlund.poly(idx).coeff(2),
                                      Rational(Integer(idx), Integer(4 * j)) * bern.B(2 * j)));
    }
    return reports;
}

std::vector<VerificationReport> verify_binomial_form(int n, const std::vector<long>& x_points) {
    if (n < 2) throw std::domain_error("n must be at least 2");
    NorlundTable table(n);
    const Integer m_n = m(n);
    const PrimitivePoly P = compute_P(n, table.poly(n), m_n);
    const PolyQ& norlund_n = table.poly(n);

    std::vector<VerificationReport> reports;
    for (long x : x_points) {
        const Rational left =
            Rational(binomial(Integer(x - 1), static_cast<unsigned long>(n))) * norlund_n(Rational(Integer(x)));
        Rational right = Rational(binomial(Integer(x), static_cast<unsigned long>(n) + 1) * P.poly(Integer(x)), m_n);
        if (n % 2 == 1) right *= Rational(Integer(x) * Integer(x - 1));
        reports.push_back(make_report(kBinomialForm, std::nullopt, n, x, left, right));
    }
    return reports;
}

bool SuiteResult::all_pass() const {
    for (const auto& s : summaries)
        if (s.failures != 0) return false;
    return true;
}

long SuiteResult::total_points() const {
    long t = 0;
    for (const auto& s : summaries) t += s.points;
    return t;
}

long SuiteResult::total_failures() const {
    long t = 0;
    for (const auto& s : summaries) t += s.failures;
    return t;
}

SuiteResult run_verification_suite(const SuiteOptions& options) {
    if (options.k_max < 1) throw std::invalid_argument("k-max must be at least 1");
    if (options.n_max < 2 * options.k_max)
        throw std::invalid_argument("n-max must be at least twice k-max");
    const int top = 2 * options.k_max + 1;  // largest polynomial index in play
    if (options.oracle == SweepOracle::LiuSrivastava && top > options.composition_cap)
        throw std::invalid_argument("composition cap exceeded: enumeration oracle needs 2*k-max+1 <= cap");

    NorlundTable norlund(top);
    const BernoulliTable bern = bernoulli_table(top);
    const MSequence ms = m_sequence(std::max(options.n_max, top));
    const StirlingTable st(options.n_max);
    std::vector<PrimitivePoly> P(static_cast<std::size_t>(top) + 1);
    for (int n = 2; n <= top; ++n) P[static_cast<std::size_t>(n)] = compute_P(n, norlund.poly(n), ms.at(n));

    std::vector<PolyQ> enumerated;
    if (options.oracle == SweepOracle::LiuSrivastava) {
        enumerated.resize(static_cast<std::size_t>(top) + 1);
        for (int j = 0; j <= top; ++j) enumerated[static_cast<std::size_t>(j)] = liu_srivastava_poly(j);
    }

    auto sweep_left = [&](int n, int j) -> Rational {
        if (options.oracle == SweepOracle::StirlingRecurrence) return Rational(st.s(n, n - j));
        return Rational(binomial(Integer(n - 1), static_cast<unsigned long>(j))) *
               enumerated[static_cast<std::size_t>(j)](Rational(n));
    };

    SuiteResult res;
    bool stop = false;
    IdentitySummary* current = nullptr;

    auto begin_identity = [&](const char* name) {
        res.summaries.push_back(IdentitySummary{name, 0, 0});
        current = &res.summaries.back();
    };
    auto push = [&](VerificationReport rep) {
        ++current->points;
        if (!rep.pass) {
            ++current->failures;
            if (options.fail_fast) stop = true;
        }
        res.reports.push_back(std::move(rep));
    };

    begin_identity(kEvenOffset);
    for (int k = 1; k <= options.k_max && !stop; ++k) {
        const auto& p = P[static_cast<std::size_t>(2 * k)];
        for (int n = 2 * k; n <= options.n_max && !stop; ++n)
            push(make_report(kEvenOffset, k, n, std::nullopt, sweep_left(n, 2 * k),
                             even_offset_rhs(k, n, p.poly, p.m_n)));
    }

    if (!stop) {
        begin_identity(kOddOffset);
        for (int k = 1; k <= options.k_max && !stop; ++k) {
            const auto& p = P[static_cast<std::size_t>(2 * k + 1)];
            for (int n = 2 * k + 1; n <= options.n_max && !stop; ++n)
                push(make_report(kOddOffset, k, n, std::nullopt, sweep_left(n, 2 * k + 1),
                                 odd_offset_rhs(k, n, p.poly, p.m_n)));
        }
    }

    if (!stop) {
        begin_identity(kConstEquality);
        for (int k = 1; k <= options.k_max && !stop; ++k)
            push(make_report(kConstEquality, k, std::nullopt, std::nullopt,
                             Rational(P[static_cast<std::size_t>(2 * k)].poly.coeff(0)),
                             Rational(P[static_cast<std::size_t>(2 * k + 1)].poly.coeff(0))));
    }

    if (!stop) {
        begin_identity(kConstFormulaEven);
        for (int k = 1; k <= options.k_max && !stop; ++k) {
            const auto& p = P[static_cast<std::size_t>(2 * k)];
            push(make_report(kConstFormulaEven, k, std::nullopt, std::nullopt, Rational(p.poly.coeff(0)),
                             constant_term_formula_even(k, p.m_n, bern.B(2 * k))));
        }
    }

    if (!stop) {
        begin_identity(kConstFormulaOdd);
        for (int k = 1; k <= options.k_max && !stop; ++k) {
            const auto& p = P[static_cast<std::size_t>(2 * k + 1)];
            push(make_report(kConstFormulaOdd, k, std::nullopt, std::nullopt, Rational(p.poly.coeff(0)),
                             constant_term_formula_odd(k, p.m_n, bern.B(2 * k))));
        }
    }

    if (!stop) {
        begin_identity(kLinearCoeff);
        for (int n = 1; n <= top && !stop; ++n)
            push(make_report(kLinearCoeff, std::nullopt, n, std::nullopt, norlund.poly(n).coeff(1),
                             linear_coeff_rhs(n, bern.B(n))));
    }

    if (!stop) {
        begin_identity(kQuadraticCoeff);
        for (int j = 1; 2 * j + 1 <= top && !stop; ++j)
            push(make_report(kQuadraticCoeff, std::nullopt, 2 * j + 1, std::nullopt,
                             norlund.poly(2 * j + 1).coeff(2),
                             Rational(Integer(2 * j + 1), Integer(4 * j)) * bern.B(2 * j)));
    }

    if (!stop) {
        // m_n * (n+1)! must reproduce the defining prime-power product exactly.
        begin_identity(kMIntegrality);
        for (int n = 0; n <= options.n_max && !stop; ++n) {
            Integer product = 1;
            for (const auto& [p, e] : valuation_profile(n).entries)
                product *= pow_ui(Integer(p), static_cast<unsigned long>(e));
            const Integer scaled = ms.at(n) * factorial(static_cast<unsigned long>(n) + 1);
            push(make_report(kMIntegrality, std::nullopt, n, std::nullopt, Rational(product), Rational(scaled)));
        }
    }

    if (!stop) {
        begin_identity(kMRatio);
        for (int n = 0; 2 * n + 1 <= options.n_max && !stop; ++n)
            push(make_report(kMRatio, std::nullopt, n, std::nullopt, Rational(ms.at(2 * n)),
                             Rational(Integer(n + 1) * ms.at(2 * n + 1))));
    }

    if (!stop) {
        begin_identity(kDegreeLaw);
        for (int k = 1; k <= options.k_max && !stop; ++k) {
            push(make_report(kDegreeLaw, k, 2 * k, std::nullopt,
                             Rational(P[static_cast<std::size_t>(2 * k)].poly.degree()),
                             Rational(2 * k - 1)));
            push(make_report(kDegreeLaw, k, 2 * k + 1, std::nullopt,
                             Rational(P[static_cast<std::size_t>(2 * k + 1)].poly.degree()),
                             Rational(2 * k - 2)));
        }
    }

    if (!stop) {
        begin_identity(kPrimitivity);
        for (int n = 2; n <= top && !stop; ++n)
            push(make_report(kPrimitivity, std::nullopt, n, std::nullopt,
                             Rational(content(P[static_cast<std::size_t>(n)].poly)), Rational(1)));
    }

    if (!stop) {
        // Bridge between the recurrence and the series route; independent of
        // m_j and P_j, so it cross-checks the sweep's two sides separately.
        begin_identity(kBridge);
        for (int j = 0; j <= top && !stop; ++j)
            for (int n = j; n <= options.n_max && !stop; ++n)
                push(make_report(kBridge, j, n, std::nullopt, Rational(st.s(n, n - j)),
                                 Rational(binomial(Integer(n - 1), static_cast<unsigned long>(j))) *
                                     norlund.poly(j)(Rational(n))));
    }

    return res;
}

}  // namespace stirpoly
