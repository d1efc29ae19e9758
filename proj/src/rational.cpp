#include "polystab/rational.hpp"

#include <vector>

namespace polystab {

const integer& factorial(unsigned n) {
    thread_local std::vector<integer> memo{integer(1)};
    if (n <= factorial_memo_cap) {
        while (memo.size() <= n) memo.push_back(memo.back() * (unsigned long)memo.size());
        return memo[n];
    }
    // valid until the next above-cap call on the same thread
    thread_local integer big;
    mpz_fac_ui(big.get_mpz_t(), n);
    return big;
}

integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    if (n <= factorial_memo_cap) {
        // rows fill lazily; each stores C(n, 0..n/2), the rest by symmetry
        thread_local std::vector<std::vector<integer>> rows{{integer(1)}};
        while (rows.size() <= n) {
            const auto& prev = rows.back();
            const std::size_t m = rows.size();
            const auto at = [&](std::size_t i) -> const integer& {
                return prev[i <= (m - 1) / 2 ? i : m - 1 - i];
            };
            std::vector<integer> row(m / 2 + 1);
            row[0] = 1;
            for (std::size_t j = 1; j < row.size(); ++j) row[j] = at(j - 1) + at(j);
            rows.push_back(std::move(row));
        }
        return rows[n][k];
    }
    integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

// strict [+-]?[0-9]+ over [from, to); GMP's own parser tolerates whitespace
integer scan_integer(const std::string& text, std::size_t from, std::size_t to) {
    bool negative = false;
    std::size_t i = from;
    if (i < to && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= to) throw invalid_parameter_error("not a rational: '" + text + "'");
    integer value = 0;
    for (; i < to; ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw invalid_parameter_error("not a rational: '" + text + "'");
        value = value * 10 + int(text[i] - '0');
    }
    if (negative) value = -value;
    return value;
}

}  // namespace

rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return rational(scan_integer(text, 0, text.size()));
    if (text.find('/', slash + 1) != std::string::npos)
        throw invalid_parameter_error("not a rational: '" + text + "'");

    const integer num = scan_integer(text, 0, slash);
    const integer den = scan_integer(text, slash + 1, text.size());
    if (den == 0) throw invalid_parameter_error("zero denominator: '" + text + "'");
    rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const rational& q) { return q.get_str(); }

}  // namespace polystab
