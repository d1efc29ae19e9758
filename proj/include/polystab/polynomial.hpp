// Exact polynomial ring over rationals: arithmetic, derivatives, evaluation,
// squarefree decomposition, elementary symmetric functions.
#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

// Coefficients ascending, a_0 first; trailing zeros stripped on construction.
// The zero polynomial is the empty sequence and has degree "none".
class polynomial {
  public:
    polynomial() = default;
    explicit polynomial(std::vector<rational> coeffs);

    static polynomial constant(const rational& c);
    // x^k with k >= 0
    static polynomial monomial(unsigned k, const rational& c = 1);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const;

    // a_k = 0 for every k outside [0, deg] (negative included).
    rational coeff(long long k) const;
    const std::vector<rational>& coeffs() const { return c_; }

    const rational& leading() const;  // requires nonzero

    bool operator==(const polynomial& other) const = default;

  private:
    std::vector<rational> c_;
};

polynomial add(const polynomial& lhs, const polynomial& rhs);
polynomial sub(const polynomial& lhs, const polynomial& rhs);
polynomial mul(const polynomial& lhs, const polynomial& rhs);
polynomial scale(const polynomial& p, const rational& c);
// p(c*z)
polynomial substitute_scaled_arg(const polynomial& p, const rational& c);

// order beyond degree yields the zero polynomial
polynomial derivative(const polynomial& p, unsigned order = 1);

// exact Horner evaluation
rational eval(const polynomial& p, const rational& x);

// e_k(points); e_0 = 1, zero outside 0..n
rational elementary_symmetric(const std::vector<rational>& points, long long k);
// e_0..e_n in one pass
std::vector<rational> elementary_symmetric_all(const std::vector<rational>& points);

struct squarefree_factor {
    polynomial factor;  // monic, squarefree
    unsigned multiplicity = 0;
};

// p = lead * prod factor_i^multiplicity_i, factors pairwise coprime.
// Constants decompose to an empty factor list.
struct squarefree_decomposition_result {
    rational lead;
    std::vector<squarefree_factor> factors;
};

squarefree_decomposition_result squarefree_decomposition(const polynomial& p);

// "[a_0, a_1, ...]" with canonical rational entries; zero polynomial is "[]"
std::string to_string(const polynomial& p);
std::ostream& operator<<(std::ostream& os, const polynomial& p);

// gamma-sequence presentation of an LP+ candidate: a_k = gamma_k / k!.
struct taylor_data {
    std::vector<rational> gammas;

    rational gamma(long long k) const;
    polynomial to_polynomial() const;
    static taylor_data of_polynomial(const polynomial& p);  // gamma_k = k! a_k
};

}  // namespace polystab
