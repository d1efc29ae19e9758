// Exact rational scalars and the factorial/binomial tables everything else leans on.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polystab {

using rational = mpq_class;
using integer = mpz_class;

// Thrown where an operation's contract names a specific failure.
struct zero_polynomial_error : std::invalid_argument {
    zero_polynomial_error() : std::invalid_argument("zero polynomial") {}
};
struct invalid_parameter_error : std::invalid_argument {
    explicit invalid_parameter_error(const std::string& what) : std::invalid_argument(what) {}
};
struct integrality_violation_error : std::logic_error {
    explicit integrality_violation_error(const std::string& what) : std::logic_error(what) {}
};
struct non_terminating_error : std::invalid_argument {
    explicit non_terminating_error(const std::string& what) : std::invalid_argument(what) {}
};
struct zero_point_error : std::invalid_argument {
    zero_point_error() : std::invalid_argument("sample point must be nonzero") {}
};
struct sample_at_pole_error : std::invalid_argument {
    sample_at_pole_error() : std::invalid_argument("sample at map pole z = 1/4") {}
};
struct negative_gamma_error : std::invalid_argument {
    negative_gamma_error() : std::invalid_argument("gamma sequence must be nonnegative") {}
};

// n! and C(n, k), memoized per thread up to memo_cap (computed directly beyond it).
constexpr unsigned factorial_memo_cap = 512;
const integer& factorial(unsigned n);
integer binomial(unsigned long n, unsigned long k);

// Parses "num" or "num/den" (canonicalized); throws std::invalid_argument on junk.
rational parse_rational(const std::string& text);
std::string to_string(const rational& q);

// sign in {-1, 0, 1}
inline int sign_of(const rational& q) { return sgn(q); }
inline int sign_of(const integer& z) { return sgn(z); }

}  // namespace polystab
