// Command-line front end: exact tables, sequences, polynomials, and the
// identity verification suite, in text, CSV, and JSON-lines formats.
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirpoly/bernoulli.hpp"
#include "stirpoly/norlund.hpp"
#include "stirpoly/render.hpp"
#include "stirpoly/sequences.hpp"
#include "stirpoly/stirling.hpp"
#include "stirpoly/theorem.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace stirpoly;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += sep;
        out += parts[i];
    }
    return out;
}

ordered_json polynomial_record(int n, const std::vector<std::string>& coeffs) {
    ordered_json rec;
    rec["kind"] = "polynomial";
    rec["n"] = n;
    rec["coeffs"] = coeffs;
    return rec;
}

void emit_sequence(std::string& out, const std::string& name, const std::vector<std::string>& values,
                   const std::string& format) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (format == "text") {
            out += values[i] + "\n";
        } else if (format == "csv") {
            out += "sequence," + name + "," + std::to_string(i) + "," + values[i] + "\n";
        } else {
            ordered_json rec;
            rec["kind"] = "sequence";
            rec["name"] = name;
            rec["index"] = i;
            rec["value"] = values[i];
            out += rec.dump() + "\n";
        }
    }
}

int run_pk(int n, const std::string& format, std::string& out) {
    const PrimitivePoly P = compute_P(n);
    if (format == "text") {
        out += "P_" + std::to_string(n) + "(x) = " + poly_to_text(P.poly) + "\n";
    } else if (format == "csv") {
        out += "polynomial," + std::to_string(n) + "," + join(coeff_strings(P.poly), ";") + "\n";
    } else {
        out += polynomial_record(n, coeff_strings(P.poly)).dump() + "\n";
    }
    return 0;
}

int run_norlund(int n, const std::string& format, std::string& out) {
    const NorlundPoly B = norlund_poly(n);
    if (format == "text") {
        out += "B_" + std::to_string(n) + "^(x) = " + poly_to_text(B.poly) + "\n";
    } else if (format == "csv") {
        out += "polynomial," + std::to_string(n) + "," + join(coeff_strings(B.poly), ";") + "\n";
    } else {
        out += polynomial_record(n, coeff_strings(B.poly)).dump() + "\n";
    }
    return 0;
}

int run_mseq(int max, const std::string& format, std::string& out) {
    const MSequence seq = m_sequence(max);
    std::vector<std::string> values;
    values.reserve(seq.values.size());
    for (const Integer& v : seq.values) values.push_back(to_string(v));
    emit_sequence(out, "m", values, format);
    return 0;
}

int run_bernoulli(int max, const std::string& format, std::string& out) {
    const BernoulliTable table = bernoulli_table(max);
    std::vector<std::string> values;
    values.reserve(table.values.size());
    for (const Rational& v : table.values) values.push_back(v.to_string());
    emit_sequence(out, "B", values, format);
    return 0;
}

int run_stirling(int n, int k, const std::string& format, std::string& out) {
    const std::string value = to_string(stirling1(n, k));
    if (format == "text") {
        out += value + "\n";
    } else if (format == "csv") {
        out += "scalar,stirling," + std::to_string(n) + ";" + std::to_string(k) + "," + value + "\n";
    } else {
        ordered_json rec;
        rec["kind"] = "scalar";
        rec["name"] = "stirling";
        rec["n"] = n;
        rec["k"] = k;
        rec["value"] = value;
        out += rec.dump() + "\n";
    }
    return 0;
}

std::string report_params(const VerificationReport& r) {
    std::string s;
    if (r.k) s += " k=" + std::to_string(*r.k);
    if (r.n) s += " n=" + std::to_string(*r.n);
    if (r.x) s += " x=" + std::to_string(*r.x);
    return s;
}

int run_verify(const SuiteOptions& options, const std::string& format, std::string& out) {
    const SuiteResult result = run_verification_suite(options);

    if (format == "text") {
        for (const auto& s : result.summaries)
            out += s.identity + ": " + std::to_string(s.points) + " points, " +
                   std::to_string(s.failures) + " failures\n";
        for (const auto& r : result.reports)
            if (!r.pass)
                out += "FAIL " + r.identity + report_params(r) + " left=" + r.left +
                       " right=" + r.right + "\n";
        out += "total: " + std::to_string(result.total_points()) + " checks, " +
               std::to_string(result.total_failures()) + " failures\n";
    } else if (format == "csv") {
        for (const auto& s : result.summaries)
            out += "summary," + s.identity + "," + std::to_string(s.points) + "," +
                   std::to_string(s.failures) + "\n";
        for (const auto& r : result.reports) {
            if (r.pass) continue;
            std::string params;
            if (r.k) params += "k=" + std::to_string(*r.k);
            if (r.n) params += (params.empty() ? "" : ";") + std::string("n=") + std::to_string(*r.n);
            if (r.x) params += (params.empty() ? "" : ";") + std::string("x=") + std::to_string(*r.x);
            out += "report," + r.identity + "," + params + ",fail," + r.left + "," + r.right + "\n";
        }
        out += "total," + std::to_string(result.total_points()) + "," +
               std::to_string(result.total_failures()) + "\n";
    } else {
        for (const auto& s : result.summaries) {
            ordered_json rec;
            rec["kind"] = "summary";
            rec["identity"] = s.identity;
            rec["points"] = s.points;
            rec["failures"] = s.failures;
            out += rec.dump() + "\n";
        }
        for (const auto& r : result.reports) {
            if (r.pass) continue;
            ordered_json rec;
            rec["kind"] = "report";
            rec["identity"] = r.identity;
            if (r.k) rec["k"] = *r.k;
            if (r.n) rec["n"] = *r.n;
            if (r.x) rec["x"] = *r.x;
            rec["status"] = "fail";
            rec["left"] = r.left;
            rec["right"] = r.right;
            out += rec.dump() + "\n";
        }
        ordered_json total;
        total["kind"] = "total";
        total["points"] = result.total_points();
        total["failures"] = result.total_failures();
        out += total.dump() + "\n";
    }
    return result.all_pass() ? 0 : 1;
}

int emit(const std::string& buffer, const std::string& out_path) {
    std::cout << buffer;
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return 2;
        }
        file << buffer;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Stirling / Norlund / Bernoulli calculator and identity verifier"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", out_path, "Also write the output bytes to this file");
    };

    int pk_n = 0;
    auto* pk = app.add_subcommand("pk", "Primitive polynomial P_n (n >= 2)");
    pk->add_option("--n", pk_n, "Index n")->required();
    add_common(pk);

    int mseq_max = 0;
    auto* mseq = app.add_subcommand("mseq", "The integer sequence m_0..m_max (OEIS A163176)");
    mseq->add_option("--max", mseq_max, "Largest index")->required();
    add_common(mseq);

    int st_n = 0, st_k = 0;
    auto* stir = app.add_subcommand("stirling", "Signed Stirling number of the first kind s(n,k)");
    stir->add_option("--n", st_n, "Row")->required();
    stir->add_option("--k", st_k, "Column")->required();
    add_common(stir);

    int bern_max = 0;
    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_max (B_1 = -1/2)");
    bern->add_option("--max", bern_max, "Largest index")->required();
    add_common(bern);

    int nor_n = 0;
    auto* nor = app.add_subcommand("norlund", "Norlund polynomial B_n^(x)");
    nor->add_option("--n", nor_n, "Index n")->required();
    add_common(nor);

    SuiteOptions suite;
    std::string oracle = "stirling";
    auto* verify = app.add_subcommand("verify", "Run the full identity verification suite");
    verify->add_option("--k-max", suite.k_max, "Largest k in the sweep")->required();
    verify->add_option("--n-max", suite.n_max, "Largest n in the sweep")->required();
    verify->add_option("--oracle", oracle, "Source of the sweep's left-hand sides")
        ->check(CLI::IsMember({"stirling", "liu-srivastava"}));
    verify->add_flag("--fail-fast", suite.fail_fast, "Stop at the first failing point");
    verify->add_option("--composition-cap", suite.composition_cap,
                       "Largest index the enumeration oracle accepts");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string buffer;
    int code = 0;
    try {
        if (pk->parsed()) {
            if (pk_n < 2) {
                std::cerr << "usage error: pk requires --n >= 2\n";
                return 2;
            }
            code = run_pk(pk_n, format, buffer);
        } else if (mseq->parsed()) {
            if (mseq_max < 0) {
                std::cerr << "usage error: mseq requires --max >= 0\n";
                return 2;
            }
            code = run_mseq(mseq_max, format, buffer);
        } else if (stir->parsed()) {
            if (st_n < 0 || st_k < 0 || st_k > st_n) {
                std::cerr << "usage error: stirling requires 0 <= k <= n\n";
                return 2;
            }
            code = run_stirling(st_n, st_k, format, buffer);
        } else if (bern->parsed()) {
            if (bern_max < 0) {
                std::cerr << "usage error: bernoulli requires --max >= 0\n";
                return 2;
            }
            code = run_bernoulli(bern_max, format, buffer);
        } else if (nor->parsed()) {
            if (nor_n < 0) {
                std::cerr << "usage error: norlund requires --n >= 0\n";
                return 2;
            }
            code = run_norlund(nor_n, format, buffer);
        } else if (verify->parsed()) {
            if (suite.k_max < 1 || suite.n_max < 2 * suite.k_max) {
                std::cerr << "usage error: verify requires --k-max >= 1 and --n-max >= 2*k-max\n";
                return 2;
            }
            suite.oracle = (oracle == "stirling") ? SweepOracle::StirlingRecurrence
                                                  : SweepOracle::LiuSrivastava;
            if (suite.oracle == SweepOracle::LiuSrivastava &&
                2 * suite.k_max + 1 > suite.composition_cap) {
                std::cerr << "usage error: the liu-srivastava oracle needs 2*k-max+1 <= "
                          << suite.composition_cap << " (see --composition-cap)\n";
                return 2;
            }
            code = run_verify(suite, format, buffer);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // A violated exact-arithmetic claim; treat like an identity failure.
        std::cerr << "verification aborted: " << e.what() << "\n";
        return 1;
    }

    const int emit_code = emit(buffer, out_path);
    return emit_code != 0 ? emit_code : code;
}
