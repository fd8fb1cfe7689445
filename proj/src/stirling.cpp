#include "stirpoly/stirling.hpp"

#include <stdexcept>

namespace stirpoly {

StirlingTable::StirlingTable(int n_max) {
    if (n_max < 0) throw std::domain_error("index out of triangle");
    rows_.reserve(static_cast<std::size_t>(n_max) + 1);
    rows_.push_back({Integer(1)});  // s(0,0)
    for (int n = 1; n <= n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
        row[0] = 0;
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] =
                prev[static_cast<std::size_t>(k - 1)] - Integer(n - 1) * prev[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(n)] = 1;
        rows_.push_back(std::move(row));
    }
}

const Integer& StirlingTable::s(int n, int k) const {
    if (n < 0 || k < 0 || k > n || n > n_max()) throw std::domain_error("index out of triangle");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling1(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("index out of triangle");
    std::vector<Integer> row{Integer(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(i) + 1);
        next[0] = 0;
        for (int j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] - Integer(i - 1) * row[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = 1;
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Rational stirling_via_norlund(int n, int j, const NorlundTable& table) {
    if (n < 0 || j < 0 || j > n) throw std::domain_error("index out of triangle");
    return Rational(binomial(Integer(n - 1), static_cast<unsigned long>(j))) *
           table.poly(j)(Rational(n));
}

Rational stirling_via_norlund(int n, int j) {
    if (n < 0 || j < 0 || j > n) throw std::domain_error("index out of triangle");
    NorlundTable table(j);
    return stirling_via_norlund(n, j, table);
}

}  // namespace stirpoly
