// Acceptance suite: runs every acceptance criterion exactly and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.
//
// The first command-line argument must be the path of the CLI binary (the
// determinism criterion spawns it).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "golden.hpp"
#include "stirpoly/bernoulli.hpp"
#include "stirpoly/norlund.hpp"
#include "stirpoly/sequences.hpp"
#include "stirpoly/stirling.hpp"
#include "stirpoly/theorem.hpp"

using namespace stirpoly;

namespace {

std::string g_cli_path;

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

struct CommandResult {
    int exit_code;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string output;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// --- criteria ---------------------------------------------------------

void golden_polynomials() {
    const auto golden = testsupport::golden_primitive_polys();
    for (int n = 2; n <= 9; ++n) {
        const PrimitivePoly P = compute_P(n);
        expect(P.poly == golden[static_cast<std::size_t>(n - 2)],
               "P_" + std::to_string(n) + " differs from the published coefficients");
    }
}

void golden_m_sequence() {
    const auto golden = testsupport::golden_m_values();
    const MSequence seq = m_sequence(7);
    for (int n = 0; n <= 7; ++n)
        expect(seq.at(n) == Integer(golden[static_cast<std::size_t>(n)]),
               "m_" + std::to_string(n) + " differs");
}

void theorem_sweep() {
    SuiteOptions opt;
    opt.k_max = 25;
    opt.n_max = 120;
    const SuiteResult res = run_verification_suite(opt);
    long even_points = 0, odd_points = 0;
    for (const auto& s : res.summaries) {
        if (s.identity == "stirling-even-offset") even_points = s.points;
        if (s.identity == "stirling-odd-offset") odd_points = s.points;
        expect(s.failures == 0, s.identity + " had failures");
    }
    // k = 1..25: even rows n = 2k..120, odd rows n = 2k+1..120
    expect(even_points == 2375, "even sweep visited " + std::to_string(even_points) + " points");
    expect(odd_points == 2350, "odd sweep visited " + std::to_string(odd_points) + " points");
}

void constant_terms() {
    const auto reports = verify_constant_terms(40);
    for (const auto& r : reports) expect(r.pass, r.identity + " failed at k=" + std::to_string(r.k.value_or(-1)));

    const long spots[][2] = {{4, 2}, {6, -16}, {8, 144}};
    for (const auto& [n, value] : spots) {
        expect(compute_P(static_cast<int>(n)).poly.coeff(0) == Integer(value),
               "P_" + std::to_string(n) + "(0) spot value differs");
        expect(compute_P(static_cast<int>(n) + 1).poly.coeff(0) == Integer(value),
               "P_" + std::to_string(n + 1) + "(0) spot value differs");
    }
}

void coefficient_identities() {
    const auto reports = verify_norlund_coefficients(61);
    long linear = 0, quadratic = 0;
    for (const auto& r : reports) {
        expect(r.pass, r.identity + " failed at n=" + std::to_string(r.n.value_or(-1)));
        if (r.identity == "norlund-linear-coeff" && *r.n <= 60) ++linear;
        if (r.identity == "norlund-quadratic-coeff") ++quadratic;
    }
    expect(linear == 60, "linear-coefficient points: " + std::to_string(linear));
    expect(quadratic == 30, "quadratic-coefficient points: " + std::to_string(quadratic));
}

void m_sequence_laws() {
    const MSequence seq = m_sequence(300);  // throws if any m_n fails integrality
    for (int n = 0; 2 * n + 1 <= 300; ++n)
        expect(seq.at(2 * n) == Integer(n + 1) * seq.at(2 * n + 1),
               "ratio fails at n=" + std::to_string(n));
}

void oracle_agreement() {
    NorlundTable table(18);
    for (int n = 1; n <= 18; ++n) {
        const PolyQ& series = table.poly(n);
        expect(series.coeff(0) == Rational(0), "constant term nonzero at n=" + std::to_string(n));
        for (int k = 1; k <= n; ++k)
            expect(series.coeff(static_cast<std::size_t>(k)) == liu_srivastava_coeff(n, k),
                   "coefficient (" + std::to_string(n) + "," + std::to_string(k) + ") differs");
    }
}

void degree_and_content_law() {
    NorlundTable table(81);
    const MSequence ms = m_sequence(81);
    std::vector<PrimitivePoly> P(82);
    for (int n = 2; n <= 81; ++n) P[static_cast<std::size_t>(n)] = compute_P(n, table.poly(n), ms.at(n));
    for (int k = 1; k <= 40; ++k) {
        expect(P[static_cast<std::size_t>(2 * k)].poly.degree() == 2 * k - 1,
               "deg P_" + std::to_string(2 * k) + " differs");
        expect(P[static_cast<std::size_t>(2 * k + 1)].poly.degree() == 2 * k - 2,
               "deg P_" + std::to_string(2 * k + 1) + " differs");
    }
    for (int n = 2; n <= 80; ++n)
        expect(content(P[static_cast<std::size_t>(n)].poly) == 1,
               "content of P_" + std::to_string(n) + " differs from 1");
}

void bridge_identity() {
    NorlundTable norlund(60);
    const StirlingTable st(60);
    for (int n = 0; n <= 60; ++n) {
        for (int j = 0; j <= n; ++j) {
            const Rational via = stirling_via_norlund(n, j, norlund);
            expect(via.is_integer() && via == Rational(st.s(n, n - j)),
                   "bridge fails at n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
}

void cli_determinism() {
    expect(!g_cli_path.empty(), "CLI path not supplied as first argument");
    const std::string cmd = "'" + g_cli_path + "' verify --k-max 6 --n-max 40 --format json 2>/dev/null";
    const CommandResult a = run_command(cmd);
    const CommandResult b = run_command(cmd);
    expect(a.exit_code == 0, "first run exited " + std::to_string(a.exit_code));
    expect(b.exit_code == 0, "second run exited " + std::to_string(b.exit_code));
    expect(!a.output.empty(), "no output produced");
    expect(a.output == b.output, "outputs differ between runs");
}

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;  // 0 = no stated budget
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "golden polynomials P_2..P_9", 1.0, golden_polynomials},
        {2, "golden sequence m_0..m_7", 1.0, golden_m_sequence},
        {3, "theorem sweep k<=25, n<=120", 60.0, theorem_sweep},
        {4, "constant terms k<=40", 30.0, constant_terms},
        {5, "coefficient identities n<=60 / odd<=61", 30.0, coefficient_identities},
        {6, "m integrality and ratio n<=300", 5.0, m_sequence_laws},
        {7, "series vs enumeration n<=18", 60.0, oracle_agreement},
        {8, "degree law k<=40, content n<=80", 60.0, degree_and_content_law},
        {9, "bridge identity j<=n<=60", 30.0, bridge_identity},
        {10, "verify output determinism", 0.0, cli_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
            ok = false;
            detail = "exceeded " + std::to_string(c.budget_seconds) + "s budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.number << " (" << c.name << "): " << (ok ? "PASS" : "FAIL")
             << " [" << elapsed << "s]";
        if (!ok) line << " -- " << detail;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
              << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
