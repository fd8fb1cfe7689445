#ifndef STIRPOLY_THEOREM_HPP
#define STIRPOLY_THEOREM_HPP

#include <optional>
#include <string>
#include <vector>

#include "stirpoly/norlund.hpp"
#include "stirpoly/polynomial.hpp"
#include "stirpoly/sequences.hpp"

namespace stirpoly {

// P_n(x): the primitive integer polynomial uniquely determined by
//   (n+1) m_n B_n^(x) = x (x(x-1))^(n mod 2) P_n(x),   n >= 2.
// No sign or normalization choice exists; the exact division forces it.
struct PrimitivePoly {
    int n;
    PolyZ poly;
    Integer m_n;  // the scaling used
};

// Forms q(x) = (n+1) m_n B_n^(x), checks every coefficient is integral,
// divides out x (and then x^2 - x when n is odd), and checks primitivity.
// Throws "scaling failed" / "factor missing" / "not primitive" when one of
// those steps — each a claim the construction relies on — does not hold.
PrimitivePoly compute_P(int n);
PrimitivePoly compute_P(int n, const PolyQ& norlund_n, const Integer& m_n);

struct VerificationReport {
    std::string identity;
    std::optional<long> k;
    std::optional<long> n;
    std::optional<long> x;  // evaluation point, for pointwise identities
    bool pass = false;
    std::string left;
    std::string right;
};

// s(n, n-2k) = C(n,2k+1) P_2k(n) / m_2k          for n >= 2k, and
// s(n, n-2k-1) = C(n,2k+2) n(n-1) P_2k+1(n) / m_2k+1  for n >= 2k+1,
// each point compared exactly against the Stirling-recurrence value.
// Points with n below the identity's range are skipped, not reported.
std::vector<VerificationReport> verify_theorem(int k, int n_min, int n_max);

// P_2k(0) = P_2k+1(0), and both closed forms:
//   P_2k(0)   = -m_2k (2k+1) B_2k / (2k)
//   P_2k+1(0) = -(k+1) m_2k+1 (2k+1) B_2k / (2k)
std::vector<VerificationReport> verify_constant_terms(int k_max);

// [x] B_n^(x) = (-1)^(n-1) B_n / n, and [x^2] B_2n+1^(x) = (2n+1) B_2n / (4n).
std::vector<VerificationReport> verify_norlund_coefficients(int n_max);

// C(x-1, n) B_n^(x) = C(x, n+1) (x(x-1))^(n mod 2) P_n(x) / m_n,
// evaluated exactly at each given integer point.
std::vector<VerificationReport> verify_binomial_form(int n, const std::vector<long>& x_points);

enum class SweepOracle {
    StirlingRecurrence,  // left sides from the first-kind recurrence table
    LiuSrivastava,       // left sides from C(n-1,j) B_j^(n) with enumerated B_j^(x)
};

struct SuiteOptions {
    int k_max = 6;
    int n_max = 40;
    SweepOracle oracle = SweepOracle::StirlingRecurrence;
    bool fail_fast = false;
    int composition_cap = 20;  // largest j the enumeration oracle accepts
};

struct IdentitySummary {
    std::string identity;
    long points = 0;
    long failures = 0;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::vector<IdentitySummary> summaries;

    bool all_pass() const;
    long total_points() const;
    long total_failures() const;
};

// Runs every identity over the configured grid, deterministically ordered by
// (identity, k, n). Shared tables are computed once.
SuiteResult run_verification_suite(const SuiteOptions& options);

}  // namespace stirpoly

#endif
