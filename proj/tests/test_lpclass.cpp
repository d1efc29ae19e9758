#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polystab/families.hpp"
#include "polystab/operators.hpp"
#include "polystab/rootcert.hpp"
#include "polystab/rng.hpp"
#include "util.hpp"

using namespace polystab;
using namespace polystab::testutil;

TEST_CASE("rooted_product") {
    CHECK_EQ(rooted_product({rational(1), rational(1), rational(1), rational(1), rational(1)}, rational(1)),
             binomial_power(5));
    CHECK_EQ(rooted_product({}, rational(3)), P({"3"}));
    CHECK_EQ(rooted_product({rational(1), rational(2)}, rational(1)), P({"1", "3", "2"}));
    CHECK_EQ(rooted_product({Q("1/2")}, Q("4")), P({"4", "2"}));

    CHECK_THROWS_AS(rooted_product({rational(0)}, rational(1)), invalid_parameter_error);
    CHECK_THROWS_AS(rooted_product({rational(2), Q("-1/3")}, rational(1)), invalid_parameter_error);
    CHECK_THROWS_AS(rooted_product({rational(1)}, rational(0)), invalid_parameter_error);

    const rooted_product_t member{{rational(1), rational(2)}, rational(5)};
    CHECK_EQ(member.expand(), P({"5", "15", "10"}));
}

TEST_CASE("jensen_polynomial") {
    const taylor_data ones{std::vector<rational>(8, rational(1))};
    CHECK_EQ(jensen_polynomial(ones, 3, false), binomial_power(3));
    CHECK_EQ(jensen_polynomial(ones, 1, false), P({"1", "1"}));

    const taylor_data cube{{rational(1), rational(3), rational(6), rational(6)}};
    CHECK_EQ(jensen_polynomial(cube, 3, false), P({"1", "9", "18", "6"}));
    CHECK_EQ(jensen_polynomial(cube, 3, true), P({"1", "3", "2", "2/9"}));

    // gammas past the end contribute nothing
    CHECK_EQ(jensen_polynomial(cube, 5, false), P({"1", "15", "60", "60"}));
}

TEST_CASE("jensen polynomials of gamma=1 recover binomial powers") {
    const taylor_data ones{std::vector<rational>(20, rational(1))};
    for (unsigned n = 1; n <= 16; n *= 2) CHECK_EQ(jensen_polynomial(ones, n, false), binomial_power(n));
}

TEST_CASE("jensen_convergence_report on the constant-gamma sequence") {
    const taylor_data ones{std::vector<rational>(17, rational(1))};
    const auto rep = jensen_convergence_report(ones, 1, {4, 8, 16}, 4);
    CHECK(rep.pass);

    // limit coefficients are 1/(k!^2 (k+1))
    for (unsigned k = 0; k <= 3; ++k) {
        const rational expect = rational(1) / (rational(factorial(k)) * rational(factorial(k)) * rational(k + 1));
        CHECK_EQ(parse_rational(rep.data.at("limit_coeffs").at(k).get<std::string>()), expect);
    }
}

TEST_CASE("jensen_convergence_report on polynomial gamma data") {
    const auto gammas = taylor_data::of_polynomial(binomial_power(3));
    CHECK(jensen_convergence_report(gammas, 1, {4, 8, 16}, 3).pass);
    CHECK(jensen_convergence_report(gammas, 2, {4, 8, 16}, 3).pass);
}

TEST_CASE("jensen_convergence_report trivial and invalid inputs") {
    const taylor_data point{{rational(1), rational(0), rational(0)}};
    CHECK(jensen_convergence_report(point, 1, {2, 4}, 2).pass);

    const taylor_data bad{{rational(1), Q("-1/2")}};
    CHECK_THROWS_AS(jensen_convergence_report(bad, 1, {2, 4}, 2), negative_gamma_error);

    const taylor_data ones{std::vector<rational>(9, rational(1))};
    CHECK_THROWS_AS(jensen_convergence_report(ones, 1, {8, 4}, 2), invalid_parameter_error);
    CHECK_THROWS_AS(jensen_convergence_report(ones, 0, {4, 8}, 2), invalid_parameter_error);
}

TEST_CASE("random_corpus is deterministic and in range") {
    const auto corpus = random_corpus(42, 24, {1, 12}, 20);
    REQUIRE_EQ(corpus.size(), 24);
    const auto again = random_corpus(42, 24, {1, 12}, 20);
    for (unsigned i = 0; i < corpus.size(); ++i) {
        CHECK_EQ(corpus[i].rhos, again[i].rhos);
        CHECK_EQ(corpus[i].lead, again[i].lead);
    }
    for (const auto& member : corpus) {
        CHECK(member.rhos.size() >= 1);
        CHECK(member.rhos.size() <= 12);
        CHECK(member.lead > 0);
        for (const auto& rho : member.rhos) {
            CHECK(rho > 0);
            CHECK(rho <= 20);
        }
    }
}

TEST_CASE("random_corpus members depend only on (seed, index)") {
    const auto small = random_corpus(99, 6, {2, 8}, 10);
    const auto large = random_corpus(99, 18, {2, 8}, 10);
    for (unsigned i = 0; i < small.size(); ++i) {
        CHECK_EQ(small[i].rhos, large[i].rhos);
        CHECK_EQ(small[i].lead, large[i].lead);
    }
    const auto other = random_corpus(100, 6, {2, 8}, 10);
    bool any_differ = false;
    for (unsigned i = 0; i < small.size(); ++i)
        if (small[i].rhos != other[i].rhos) any_differ = true;
    CHECK(any_differ);
}

TEST_CASE("random_corpus members certify as expected") {
    for (const auto& member : random_corpus(7, 10, {1, 10}, 15)) {
        const auto cert = certify_all_real_negative(member.expand());
        CHECK_EQ(cert.verdict, root_verdict::all_real_negative);
        CHECK_EQ(cert.real_root_count, member.rhos.size());
    }
}

TEST_CASE("operator images of corpus members stay in the class") {
    splitmix64 gen(314);
    for (const auto& member : random_corpus(11, 8, {2, 9}, 12)) {
        const unsigned p = 1 + unsigned(gen.uniform(0, 2));
        CHECK_EQ(certify_all_real_negative(apply_lkp(member.expand(), p)).verdict,
                 root_verdict::all_real_negative);
    }
}
