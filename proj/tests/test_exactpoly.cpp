#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polystab/polynomial.hpp"
#include "polystab/rng.hpp"
#include "util.hpp"

using namespace polystab;
using namespace polystab::testutil;

TEST_CASE("rational parsing and canonical form") {
    CHECK_EQ(parse_rational("3/6"), rational(1, 2));
    CHECK_EQ(parse_rational("-4/2"), rational(-2));
    CHECK_EQ(to_string(parse_rational("-3/6")), "-1/2");
    CHECK_EQ(to_string(rational(5)), "5");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("factorial and binomial, including beyond the memo cap") {
    CHECK_EQ(factorial(0), 1);
    CHECK_EQ(factorial(5), 120);
    CHECK_EQ(binomial(4, 2), 6);
    CHECK_EQ(binomial(3, 2), 3);   // C(2p-1,p) at p=2
    CHECK_EQ(binomial(4, 1), 4);   // C(2p,p-j) at p=2, j=1
    CHECK_EQ(binomial(4, 5), 0);   // k > n
    // beyond the memo cap the values must still be exact
    integer direct;
    mpz_fac_ui(direct.get_mpz_t(), factorial_memo_cap + 3);
    CHECK_EQ(factorial(factorial_memo_cap + 3), direct);
    mpz_bin_uiui(direct.get_mpz_t(), 600, 271);
    CHECK_EQ(binomial(600, 271), direct);
}

TEST_CASE("polynomial normal form") {
    // trailing zeros stripped; zero polynomial is empty with degree "none"
    CHECK(polynomial({rational(1), rational(0), rational(0)}).coeffs().size() == 1);
    CHECK(polynomial({rational(0)}).is_zero());
    CHECK_FALSE(polynomial().degree().has_value());
    CHECK_EQ(P({"1", "2"}).degree().value(), 1);

    // coefficient access outside [0, n] is exactly 0, negative indices included
    const polynomial p = P({"1", "3"});
    CHECK_EQ(p.coeff(-1), 0);
    CHECK_EQ(p.coeff(-7), 0);
    CHECK_EQ(p.coeff(2), 0);
    CHECK_EQ(p.coeff(0), 1);
    CHECK_EQ(p.coeff(1), 3);
}

TEST_CASE("poly_arith") {
    const polynomial onex = P({"1", "1"});
    CHECK_EQ(mul(onex, onex), P({"1", "2", "1"}));
    CHECK_EQ(add(P({"1", "2", "1"}), polynomial()), P({"1", "2", "1"}));
    // (1+z)^2 at c*z with c = 1/2
    CHECK_EQ(substitute_scaled_arg(P({"1", "2", "1"}), rational(1, 2)), P({"1", "1", "1/4"}));

    CHECK_EQ(scale(P({"1", "-2"}), rational(-3)), P({"-3", "6"}));
    CHECK_EQ(scale(P({"1", "-2"}), rational(0)), polynomial());
    CHECK_EQ(sub(P({"1", "2"}), P({"1", "2"})), polynomial());
    // cancellation in the leading coefficient must renormalize
    CHECK_EQ(add(P({"0", "1", "1"}), P({"1", "0", "-1"})).degree().value(), 1);
}

TEST_CASE("poly_derivative") {
    const polynomial cubed = binomial_power(3);
    CHECK_EQ(derivative(cubed, 1), P({"3", "6", "3"}));
    CHECK_EQ(derivative(cubed, 0), cubed);
    CHECK(derivative(cubed, 4).is_zero());
    CHECK_EQ(derivative(polynomial::monomial(5, rational(1, 2)), 2), polynomial::monomial(3, rational(10)));
}

TEST_CASE("poly_eval") {
    CHECK_EQ(eval(binomial_power(3), rational(1)), 8);
    const polynomial p = P({"7", "-1", "4"});
    CHECK_EQ(eval(p, rational(0)), p.coeff(0));
    CHECK_EQ(eval(P({"1", "6", "2"}), rational(-1)), -3);
    CHECK_EQ(eval(polynomial(), rational(3)), 0);
}

TEST_CASE("poly_eval agrees with naive power sums") {
    splitmix64 gen(511);
    for (int trial = 0; trial < 30; ++trial) {
        const polynomial p = random_int_poly(gen, 1 + unsigned(gen.uniform(0, 9)), -9, 9);
        const rational x = random_nonzero_rational(gen);
        rational naive = 0, pow = 1;
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            naive += p.coeffs()[k] * pow;
            pow *= x;
        }
        CHECK_EQ(eval(p, x), naive);
    }
}

TEST_CASE("elementary_symmetric") {
    const std::vector<rational> z{rational(1), rational(2), rational(3)};
    CHECK_EQ(elementary_symmetric(z, 1), 6);
    CHECK_EQ(elementary_symmetric(z, 2), 11);
    CHECK_EQ(elementary_symmetric(z, 3), 6);
    CHECK_EQ(elementary_symmetric(z, 0), 1);
    CHECK_EQ(elementary_symmetric({}, 0), 1);
    CHECK_EQ(elementary_symmetric(z, 4), 0);
    CHECK_EQ(elementary_symmetric(z, -1), 0);

    const auto all = elementary_symmetric_all(z);
    REQUIRE_EQ(all.size(), 4);
    for (long long k = 0; k <= 3; ++k) CHECK_EQ(all[k], elementary_symmetric(z, k));
}

TEST_CASE("prod(1 + z_i x) expands to elementary symmetric coefficients") {
    splitmix64 gen(902);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 1 + unsigned(gen.uniform(0, 7));
        std::vector<rational> z;
        for (unsigned i = 0; i < n; ++i) z.push_back(random_nonzero_rational(gen));
        polynomial prod = polynomial::constant(1);
        for (const auto& zi : z) prod = mul(prod, polynomial({rational(1), zi}));
        for (long long k = 0; k <= n; ++k) CHECK_EQ(prod.coeff(k), elementary_symmetric(z, k));
    }
}

TEST_CASE("squarefree_decomposition") {
    // (1+x)^2 (2+x)
    const polynomial p = mul(mul(P({"1", "1"}), P({"1", "1"})), P({"2", "1"}));
    const auto dec = squarefree_decomposition(p);
    REQUIRE_EQ(dec.factors.size(), 2);
    CHECK_EQ(dec.factors[0].factor, P({"1", "1"}));
    CHECK_EQ(dec.factors[0].multiplicity, 2);
    CHECK_EQ(dec.factors[1].factor, P({"2", "1"}));
    CHECK_EQ(dec.factors[1].multiplicity, 1);
    CHECK_EQ(dec.lead, 1);

    const auto simple = squarefree_decomposition(P({"1", "1"}));
    REQUIRE_EQ(simple.factors.size(), 1);
    CHECK_EQ(simple.factors[0].factor, P({"1", "1"}));
    CHECK_EQ(simple.factors[0].multiplicity, 1);

    const auto constant = squarefree_decomposition(polynomial::constant(5));
    CHECK(constant.factors.empty());
    CHECK_EQ(constant.lead, 5);

    CHECK_THROWS_AS(squarefree_decomposition(polynomial()), zero_polynomial_error);
}

TEST_CASE("squarefree_decomposition reassembles the input exactly") {
    splitmix64 gen(7741);
    for (int trial = 0; trial < 25; ++trial) {
        // build from known factors with repeats, then decompose and multiply back
        polynomial p = polynomial::constant(random_nonzero_rational(gen));
        const unsigned parts = 1 + unsigned(gen.uniform(0, 2));
        for (unsigned i = 0; i < parts; ++i) {
            const polynomial f = random_int_poly(gen, 1 + unsigned(gen.uniform(0, 1)), -4, 4);
            const unsigned mult = 1 + unsigned(gen.uniform(0, 2));
            for (unsigned m = 0; m < mult; ++m) p = mul(p, f);
        }
        const auto dec = squarefree_decomposition(p);
        polynomial back = polynomial::constant(dec.lead);
        for (const auto& [factor, multiplicity] : dec.factors) {
            CHECK_EQ(factor.leading(), 1);  // monic
            for (unsigned m = 0; m < multiplicity; ++m) back = mul(back, factor);
        }
        CHECK_EQ(back, p);
    }
}

TEST_CASE("taylor data converts both ways") {
    // gamma = (1,3,6,6) gives a_k = gamma_k/k!: (1+x)^3
    const taylor_data t{{rational(1), rational(3), rational(6), rational(6)}};
    CHECK_EQ(t.to_polynomial(), binomial_power(3));
    CHECK_EQ(t.gamma(2), 6);
    CHECK_EQ(t.gamma(-1), 0);
    CHECK_EQ(t.gamma(4), 0);

    const auto back = taylor_data::of_polynomial(binomial_power(3));
    REQUIRE_EQ(back.gammas.size(), 4);
    CHECK_EQ(back.gammas[0], 1);
    CHECK_EQ(back.gammas[1], 3);
    CHECK_EQ(back.gammas[2], 6);
    CHECK_EQ(back.gammas[3], 6);
}
