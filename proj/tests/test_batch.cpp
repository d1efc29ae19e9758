#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polystab/batch.hpp"
#include "polystab/rng.hpp"
#include "util.hpp"

using namespace polystab;
using namespace polystab::testutil;

TEST_CASE("certify_corpus matches the serial reference element-wise") {
    const auto corpus = random_corpus(2024, 40, {1, 10}, 16);
    for (const operator_spec& spec :
         {operator_spec{lkp_op{1}}, operator_spec{lkp_op{3}}, operator_spec{sr_op{2}}}) {
        const auto par = certify_corpus(corpus, spec);
        const auto ser = certify_corpus_serial(corpus, spec);
        REQUIRE_EQ(par.size(), corpus.size());
        REQUIRE_EQ(ser.size(), corpus.size());
        for (unsigned i = 0; i < corpus.size(); ++i) {
            CHECK_EQ(par[i].input, ser[i].input);
            CHECK_EQ(par[i].output, ser[i].output);
            CHECK_EQ(par[i].certificate, ser[i].certificate);
        }
    }
}

TEST_CASE("certified corpus sweeps come back all-negative") {
    const auto corpus = random_corpus(5, 30, {1, 12}, 20);
    for (unsigned p = 1; p <= 3; ++p) {
        const auto results = certify_corpus(corpus, lkp_op{p});
        for (unsigned i = 0; i < results.size(); ++i) {
            CHECK_EQ(results[i].input, corpus[i].expand());
            CHECK_EQ(results[i].output, apply_lkp(corpus[i].expand(), p));
            CHECK_EQ(results[i].certificate.verdict, root_verdict::all_real_negative);
        }
    }
}

TEST_CASE("S_r sweeps certify too") {
    const auto corpus = random_corpus(8, 12, {2, 9}, 10);
    for (const auto& item : certify_corpus(corpus, sr_op{1}))
        CHECK_EQ(item.certificate.verdict, root_verdict::all_real_negative);
}

TEST_CASE("scan_corpus_minors agrees with serial and passes on operator images") {
    const auto corpus = random_corpus(77, 20, {3, 10}, 12);
    std::vector<polynomial> outputs;
    for (const auto& member : corpus) outputs.push_back(apply_lkp(member.expand(), 2));

    const auto par = scan_corpus_minors(outputs, 3, 12);
    const auto ser = scan_corpus_minors_serial(outputs, 3, 12);
    REQUIRE_EQ(par.size(), outputs.size());
    CHECK_EQ(par, ser);
    for (bool ok : par) CHECK(ok);
}

TEST_CASE("scan_corpus_minors flags a planted failure") {
    std::vector<polynomial> outputs{P({"1", "2", "1"}), P({"1", "0", "1"})};
    const auto flags = scan_corpus_minors(outputs, 2, 4);
    REQUIRE_EQ(flags.size(), 2);
    CHECK(flags[0]);
    CHECK_FALSE(flags[1]);
}

TEST_CASE("empty corpus round-trips") {
    CHECK(certify_corpus({}, lkp_op{1}).empty());
    CHECK(scan_corpus_minors({}, 2, 4).empty());
}
