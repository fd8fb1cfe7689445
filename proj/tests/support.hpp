#ifndef STIRPOLY_TESTS_SUPPORT_HPP
#define STIRPOLY_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "stirpoly/polynomial.hpp"
#include "stirpoly/rational.hpp"

namespace testsupport {

// Path of the CLI binary, handed over by ctest as the first positional
// argument; empty when the test binary is run without it.
extern std::string cli_path;

struct CommandResult {
    int exit_code;
    std::string output;
};

// Runs a shell command and captures its standard output.
CommandResult run_command(const std::string& command);

inline stirpoly::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    return {num(rng), den(rng)};
}

inline stirpoly::PolyZ random_polyz(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<stirpoly::Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& a : c) a = coeff(rng);
    return stirpoly::PolyZ(std::move(c));
}

}  // namespace testsupport

#endif
