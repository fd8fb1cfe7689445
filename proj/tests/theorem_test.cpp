#include <doctest.h>

#include <algorithm>

#include "golden.hpp"
#include "stirpoly/theorem.hpp"

using namespace stirpoly;

namespace {

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

const VerificationReport& find_report(const std::vector<VerificationReport>& reports,
                                      const std::string& identity, long k, long n) {
    for (const auto& r : reports)
        if (r.identity == identity && r.k.value_or(-1) == k && r.n.value_or(-1) == n) return r;
    static VerificationReport missing;
    REQUIRE(false);
    return missing;
}

}  // namespace

TEST_CASE("primitive polynomials match the published table") {
    const auto golden = testsupport::golden_primitive_polys();
    for (int n = 2; n <= 9; ++n) {
        const PrimitivePoly P = compute_P(n);
        CHECK(P.poly == golden[static_cast<std::size_t>(n - 2)]);
        CHECK(P.m_n == m(n));
        CHECK(content(P.poly) == 1);
    }
}

TEST_CASE("compute_P rejects n below two") {
    CHECK_THROWS_AS(compute_P(1), std::domain_error);
    CHECK_THROWS_AS(compute_P(0), std::domain_error);
}

TEST_CASE("compute_P degree law on a small range") {
    for (int k = 1; 2 * k + 1 <= 15; ++k) {
        CHECK(compute_P(2 * k).poly.degree() == 2 * k - 1);
        CHECK(compute_P(2 * k + 1).poly.degree() == 2 * k - 2);
    }
}

TEST_CASE("theorem sweep for k = 1") {
    const auto reports = verify_theorem(1, 2, 12);
    CHECK(all_pass(reports));
    // n = 2..12 for the even identity, n = 3..12 for the odd one
    CHECK(reports.size() == 11 + 10);

    const auto& at4 = find_report(reports, "stirling-even-offset", 1, 4);
    CHECK(at4.left == "11");
    CHECK(at4.right == "11");

    // edge rows where the binomial vanishes
    const auto& at2 = find_report(reports, "stirling-even-offset", 1, 2);
    CHECK(at2.left == "0");
    CHECK(at2.right == "0");
    const auto& at3 = find_report(reports, "stirling-odd-offset", 1, 3);
    CHECK(at3.left == "0");
    CHECK(at3.right == "0");
}

TEST_CASE("theorem sweep skips rows below the identity range") {
    const auto reports = verify_theorem(2, 0, 6);
    for (const auto& r : reports) {
        REQUIRE(r.n.has_value());
        if (r.identity == "stirling-even-offset") CHECK(*r.n >= 4);
        if (r.identity == "stirling-odd-offset") CHECK(*r.n >= 5);
    }
    CHECK(all_pass(reports));
}

TEST_CASE("constant terms") {
    const auto reports = verify_constant_terms(4);
    CHECK(all_pass(reports));

    const auto& k2 = find_report(reports, "constant-term-equality", 2, -1);
    CHECK(k2.left == "2");
    CHECK(k2.right == "2");
    const auto& k3 = find_report(reports, "constant-term-equality", 3, -1);
    CHECK(k3.left == "-16");
    const auto& k4 = find_report(reports, "constant-term-equality", 4, -1);
    CHECK(k4.left == "144");

    const auto& f1 = find_report(reports, "constant-term-formula-even", 1, -1);
    CHECK(f1.left == "-1");  // P_2(0) = -1 = -m_2 * 3 * B_2 / 2
    CHECK(f1.right == "-1");
}

TEST_CASE("norlund coefficient identities") {
    const auto reports = verify_norlund_coefficients(12);
    CHECK(all_pass(reports));

    const auto& n1 = find_report(reports, "norlund-linear-coeff", -1, 1);
    CHECK(n1.left == "-1/2");
    const auto& n3 = find_report(reports, "norlund-linear-coeff", -1, 3);
    CHECK(n3.left == "0");
    const auto& q5 = find_report(reports, "norlund-quadratic-coeff", -1, 5);
    CHECK(q5.left == "-1/48");
}

TEST_CASE("binomial form at integer points") {
    const auto even = verify_binomial_form(2, {0, 4, -3, 1, 2});
    CHECK(all_pass(even));
    for (const auto& r : even)
        if (r.x.value_or(99) == 4) CHECK(r.left == "11");

    const auto odd = verify_binomial_form(3, {5, 0, 1, -2, 7});
    CHECK(all_pass(odd));
    for (const auto& r : odd)
        if (r.x.value_or(99) == 5) CHECK(r.left == "-50");
}

TEST_CASE("verification suite runs green and is deterministic") {
    SuiteOptions opt;
    opt.k_max = 2;
    opt.n_max = 10;
    const SuiteResult a = run_verification_suite(opt);
    const SuiteResult b = run_verification_suite(opt);

    CHECK(a.all_pass());
    CHECK(a.total_failures() == 0);
    CHECK(a.summaries.size() == 12);
    CHECK(a.total_points() > 0);

    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].identity == b.reports[i].identity);
        CHECK(a.reports[i].left == b.reports[i].left);
        CHECK(a.reports[i].right == b.reports[i].right);
        CHECK(a.reports[i].pass == b.reports[i].pass);
    }
}

TEST_CASE("verification suite with the enumeration oracle") {
    SuiteOptions opt;
    opt.k_max = 2;
    opt.n_max = 10;
    opt.oracle = SweepOracle::LiuSrivastava;
    const SuiteResult r = run_verification_suite(opt);
    CHECK(r.all_pass());
}

TEST_CASE("suite rejects bad options") {
    SuiteOptions opt;
    opt.k_max = 0;
    opt.n_max = 10;
    CHECK_THROWS_AS(run_verification_suite(opt), std::invalid_argument);

    opt.k_max = 4;
    opt.n_max = 7;
    CHECK_THROWS_AS(run_verification_suite(opt), std::invalid_argument);

    opt.k_max = 10;
    opt.n_max = 40;
    opt.oracle = SweepOracle::LiuSrivastava;  // needs 2*10+1 <= 20
    CHECK_THROWS_AS(run_verification_suite(opt), std::invalid_argument);
}
