#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polystab/operators.hpp"
#include "polystab/rootcert.hpp"
#include "polystab/rng.hpp"
#include "util.hpp"

using namespace polystab;
using namespace polystab::testutil;

TEST_CASE("lkp_coefficients tables") {
    CHECK_EQ(lkp_coefficients(1), std::vector<rational>{rational(1), rational(-1)});
    CHECK_EQ(lkp_coefficients(2), std::vector<rational>{rational(3), rational(-4), rational(1)});
    CHECK_EQ(lkp_coefficients(3),
             std::vector<rational>{rational(10), rational(-15), rational(6), rational(-1)});
    CHECK_EQ(lkp_coefficients(4),
             std::vector<rational>{rational(35), rational(-56), rational(28), rational(-8), rational(1)});
    CHECK_THROWS_AS(lkp_coefficients(0), invalid_parameter_error);
}

TEST_CASE("mu of L^p") {
    // mu_0 = C(2p-1,p), mu_{2j} = (-1)^j C(2p,p-j), odd entries 0
    const auto mu1 = mu_of_lkp(1);
    CHECK_EQ(mu1.mu(0), 1);
    CHECK_EQ(mu1.mu(1), 0);
    CHECK_EQ(mu1.mu(2), -1);
    CHECK_EQ(mu1.mu(3), 0);
    CHECK_EQ(mu1.mu(-2), 0);

    const auto mu2 = mu_of_lkp(2);
    CHECK_EQ(mu2.mu(0), 3);
    CHECK_EQ(mu2.mu(2), -4);
    CHECK_EQ(mu2.mu(4), 1);
    CHECK_EQ(mu2.mu(6), 0);
}

TEST_CASE("apply_lkp pinned values") {
    CHECK_EQ(apply_lkp(binomial_power(5), 2), P({"3", "35", "105", "105", "35", "3"}));
    CHECK_EQ(apply_lkp(P({"1", "2", "1"}), 1), P({"1", "3", "1"}));
    CHECK_EQ(apply_lkp(polynomial::constant(3), 2), polynomial::constant(27));

    CHECK_THROWS_AS(apply_lkp(polynomial(), 1), zero_polynomial_error);
    CHECK_THROWS_AS(apply_lkp(P({"1", "1"}), 0), invalid_parameter_error);
}

TEST_CASE("apply_sr pinned values") {
    CHECK(apply_sr(P({"1", "2", "1"}), 0).is_zero());
    CHECK_EQ(apply_sr(P({"1", "2", "1"}), 1), P({"1", "3", "1"}));
    CHECK_EQ(apply_sr(P({"1", "2", "1"}), 3), P({"1", "4", "1"}));
    CHECK_THROWS_AS(apply_sr(polynomial(), 1), zero_polynomial_error);
}

TEST_CASE("apply_sr(.,1) is apply_lkp(.,1)") {
    splitmix64 gen(41);
    for (int trial = 0; trial < 25; ++trial) {
        const polynomial psi = random_int_poly(gen, 1 + unsigned(gen.uniform(0, 9)), -9, 9);
        CHECK_EQ(apply_sr(psi, 1), apply_lkp(psi, 1));
    }
}

TEST_CASE("apply_tmu pinned values") {
    CHECK_EQ(apply_tmu(P({"1", "1"}), mu_of_lkp(1)), P({"1", "0", "1"}));
    CHECK_EQ(apply_tmu(P({"1", "1"}), mu_sequence{{rational(0), rational(1)}}), P({"0", "1"}));
    CHECK(apply_tmu(P({"1", "1"}), mu_sequence{}).is_zero());
    CHECK(apply_tmu(P({"1", "1"}), mu_sequence{{rational(0)}}).is_zero());
    CHECK_THROWS_AS(apply_tmu(polynomial(), mu_of_lkp(1)), zero_polynomial_error);
}

TEST_CASE("T_mu with mu(L^p) is apply_lkp composed with z -> z^2") {
    splitmix64 gen(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned p = 1 + unsigned(gen.uniform(0, 4));
        const polynomial psi = random_int_poly(gen, 1 + unsigned(gen.uniform(0, 9)), -9, 9);
        const polynomial via_tmu = apply_tmu(psi, mu_of_lkp(p));
        const polynomial via_lkp = apply_lkp(psi, p);
        const auto deg = via_tmu.degree();
        for (long long m = 0; m <= (deg ? (long long)*deg : -1); ++m) {
            if (m % 2 == 1) {
                CHECK_EQ(via_tmu.coeff(m), 0);
            } else {
                CHECK_EQ(via_tmu.coeff(m), via_lkp.coeff(m / 2));
            }
        }
    }
}

TEST_CASE("gamma_transform") {
    const auto mu1 = mu_of_lkp(1);
    CHECK_EQ(gamma_transform(mu1, 2), 1);  // C_1
    CHECK_EQ(gamma_transform(mu1, 3), 0);
    CHECK_EQ(gamma_transform(mu_of_lkp(2), 0), 3);  // S(2,0)/2
    // gamma_{2k} for mu(L^1) runs through the Catalan numbers
    CHECK_EQ(gamma_transform(mu1, 0), 1);
    CHECK_EQ(gamma_transform(mu1, 4), 2);
    CHECK_EQ(gamma_transform(mu1, 6), 5);
    CHECK_EQ(gamma_transform(mu1, 8), 14);
    CHECK_EQ(gamma_transform(mu1, 5), 0);
}

TEST_CASE("laguerre_expression") {
    CHECK_EQ(laguerre_expression(polynomial::monomial(1), 1), polynomial::constant(1));
    CHECK_EQ(laguerre_expression(P({"1", "2", "1"}), 1), P({"2", "4", "2"}));
    const polynomial phi = P({"3", "-1", "2", "5"});
    CHECK_EQ(laguerre_expression(phi, 0), mul(phi, phi));
    CHECK_THROWS_AS(laguerre_expression(polynomial(), 1), zero_polynomial_error);
}

TEST_CASE("extended_turan_at_zero matches the quadratic-form rows") {
    const taylor_data g{{Q("1"), Q("3/2"), Q("-2"), Q("5"), Q("7/3"), Q("-1/2"), Q("4"), Q("2/7"), Q("9")}};
    auto gam = [&](long long k) { return g.gamma(k); };

    CHECK_EQ(extended_turan_at_zero(g, 0, 1), gam(1) * gam(1) - gam(0) * gam(2));
    CHECK_EQ(extended_turan_at_zero(g, 0, 2),
             3 * gam(2) * gam(2) - 4 * gam(1) * gam(3) + gam(0) * gam(4));
    CHECK_EQ(extended_turan_at_zero(g, 0, 3),
             10 * gam(3) * gam(3) - 15 * gam(2) * gam(4) + 6 * gam(1) * gam(5) - gam(0) * gam(6));
    CHECK_EQ(extended_turan_at_zero(g, 0, 4),
             35 * gam(4) * gam(4) - 56 * gam(3) * gam(5) + 28 * gam(2) * gam(6) -
                 8 * gam(1) * gam(7) + gam(0) * gam(8));
    // shifted rows reuse the same coefficients at k+p
    CHECK_EQ(extended_turan_at_zero(g, 2, 1), gam(3) * gam(3) - gam(2) * gam(4));
    CHECK_EQ(extended_turan_at_zero(g, 3, 2),
             3 * gam(5) * gam(5) - 4 * gam(4) * gam(6) + gam(3) * gam(7));

    CHECK_THROWS_AS(extended_turan_at_zero(g, 0, 0), invalid_parameter_error);
}

TEST_CASE("extended Turan vanishes for the exponential gamma sequence") {
    const taylor_data ones{std::vector<rational>(12, rational(1))};
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned p = 1; p <= 3; ++p) CHECK_EQ(extended_turan_at_zero(ones, k, p), 0);
}

TEST_CASE("Laguerre value at zero matches the gamma form") {
    splitmix64 gen(606);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned k = unsigned(gen.uniform(0, 6));
        const unsigned p = 1 + unsigned(gen.uniform(0, 3));
        // degree floor keeps the k-th derivative nonzero (laguerre_expression's domain)
        const polynomial phi = random_int_poly(gen, k + 1 + unsigned(gen.uniform(0, 8)), -9, 9);
        const taylor_data g = taylor_data::of_polynomial(phi);
        const rational lhs =
            rational(factorial(2 * p)) / 2 * eval(laguerre_expression(derivative(phi, k), p), 0);
        CHECK_EQ(lhs, extended_turan_at_zero(g, k, p));
    }
}

TEST_CASE("apply_lkp boundary coefficients and degree") {
    splitmix64 gen(515);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned p = 1 + unsigned(gen.uniform(0, 4));
        const polynomial psi = random_int_poly(gen, 1 + unsigned(gen.uniform(0, 9)), -9, 9);
        const polynomial out = apply_lkp(psi, p);
        const rational c0 = rational(binomial(2 * p - 1, p));
        const auto n = psi.degree().value();
        CHECK_EQ(out.degree().value(), n);
        CHECK_EQ(out.coeff(0), c0 * psi.coeff(0) * psi.coeff(0));
        CHECK_EQ(out.coeff((long long)n), c0 * psi.coeff((long long)n) * psi.coeff((long long)n));
    }
}

TEST_CASE("stability is preserved on rooted products") {
    splitmix64 gen(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const polynomial psi = random_rooted_product(gen, 1 + unsigned(gen.uniform(0, 11)));
        const unsigned p = 1 + unsigned(gen.uniform(0, 4));
        const auto cert = certify_all_real_negative(apply_lkp(psi, p));
        CHECK_EQ(cert.verdict, root_verdict::all_real_negative);
    }
}

TEST_CASE("Laguerre expressions of real-rooted polynomials are nonnegative") {
    splitmix64 gen(1937);
    for (int trial = 0; trial < 15; ++trial) {
        // real roots of either sign; degree past 2p so the expression is not identically zero
        polynomial phi = polynomial::constant(random_nonzero_rational(gen));
        const unsigned deg = 6 + unsigned(gen.uniform(0, 3));
        for (unsigned i = 0; i < deg; ++i)
            phi = mul(phi, polynomial({random_nonzero_rational(gen), rational(1)}));
        for (unsigned p = 1; p <= 3; ++p) {
            const auto cert = certify_nonnegative(laguerre_expression(phi, p));
            CHECK_EQ(cert.verdict, nonnegativity_verdict::nonnegative_everywhere);
        }
    }
}

TEST_CASE("apply_operator dispatches on the spec variant") {
    const polynomial psi = P({"1", "2", "1"});
    CHECK_EQ(apply_operator(psi, lkp_op{1}), apply_lkp(psi, 1));
    CHECK_EQ(apply_operator(psi, sr_op{3}), apply_sr(psi, 3));
    CHECK_EQ(apply_operator(psi, tmu_op{mu_of_lkp(1)}), apply_tmu(psi, mu_of_lkp(1)));
}
