#include <gtest/gtest.h>

#include "ringlab/verifier.hpp"

using namespace ringlab;

namespace {

SuiteConfig small_config() {
    SuiteConfig c;
    c.corpus = {"Z/2", "Z/4", "Z/6", "T(2, Z/2)", "M(2, Z/2)", "trivext(Z/2)"};
    c.max_deg = 1;
    return c;
}

}  // namespace

TEST(Suite, EveryClaimConsistentOnSmallCorpus) {
    const SuiteReport rep = run_suite(small_config());
    EXPECT_TRUE(rep.passed());
    for (const auto& c : rep.claims) EXPECT_EQ(c.outcome, Outcome::Consistent) << c.id;
    EXPECT_EQ(rep.claims.size(), 15u);
}

TEST(Suite, SingleRingCorpus) {
    SuiteConfig c;
    c.corpus = {"M(2, Z/2)"};
    c.max_deg = 1;
    const SuiteReport rep = run_suite(c);
    EXPECT_TRUE(rep.passed());
    const ClaimResult* ex = rep.find("example-full-matrix");
    ASSERT_TRUE(ex);
    EXPECT_EQ(ex->outcome, Outcome::Consistent);
    // The M2 side refutes, so T2(M2) is settled by carrying the witness.
    const ClaimResult* tri = rep.find("triangular-closure");
    ASSERT_TRUE(tri);
    bool carried = false;
    for (const auto& k : tri->checks)
        if (k.instance.rfind("T(2, M(2, Z/2))", 0) == 0) {
            EXPECT_EQ(k.outcome, Outcome::Consistent);
            for (const auto& n : k.notes) carried |= n.find("re-validates") != std::string::npos;
        }
    EXPECT_TRUE(carried);
}

TEST(Suite, ConfigErrors) {
    SuiteConfig c;
    c.corpus.clear();
    EXPECT_THROW(run_suite(c), PreconditionError);
    c = SuiteConfig{};
    c.max_deg = 0;
    EXPECT_THROW(run_suite(c), PreconditionError);
    c = SuiteConfig{};
    c.corpus = {"T(2, Z/2"};
    EXPECT_THROW(run_suite(c), ParseError);
}

TEST(Suite, TinyBudgetSkipsButNeverPasses) {
    SuiteConfig c = small_config();
    c.budget = 50;
    const SuiteReport rep = run_suite(c);
    EXPECT_TRUE(rep.passed());
    const ClaimResult* ex = rep.find("example-triangular-over-field");
    ASSERT_TRUE(ex);
    EXPECT_EQ(ex->outcome, Outcome::Skipped);
    for (const auto& k : ex->checks) EXPECT_NE(k.outcome, Outcome::Consistent);
}

TEST(Suite, DeterministicAcrossJobs) {
    SuiteConfig a = small_config(), b = small_config();
    b.jobs = 8;
    const Json ja = strip_timing(suite_json(run_suite(a)));
    const Json jb = strip_timing(suite_json(run_suite(b)));
    EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(Suite, ReportShape) {
    const SuiteReport rep = run_suite(small_config());
    const Json j = suite_json(rep);
    EXPECT_EQ(j["schema"], "ringlab.suite/1");
    EXPECT_TRUE(j["summary"]["passed"].get<bool>());
    for (const auto& c : j["claims"]) {
        EXPECT_TRUE(c.contains("id"));
        EXPECT_TRUE(c.contains("outcome"));
        EXPECT_TRUE(c["checks"].is_array());
    }
    const std::string text = suite_text(rep);
    EXPECT_NE(text.find("triangular-closure"), std::string::npos);
    EXPECT_NE(text.find("summary: 15 consistent"), std::string::npos);
}

TEST(Transport, FullMatrixPairAndHelpers) {
    const RingRef m2 = matrix_ring(2, cyclic(2));
    const auto [f, g] = detail::full_matrix_pair(m2);
    EXPECT_EQ(f.coeffs, (std::vector<Elem>{8, 4}));
    EXPECT_EQ(g.coeffs, (std::vector<Elem>{2, 8}));
    const RingRef z4 = cyclic(4);
    const RingRef s = truncated_poly_ring(z4, 2);
    EXPECT_TRUE(check_homomorphism(detail::constant_embedding(z4, s, 2)).ok);
    EXPECT_TRUE(check_homomorphism(detail::constant_term(z4, s, 2)).ok);
    const RingHom id = identity_hom(z4);
    EXPECT_EQ(detail::inverse_hom(id).map, id.map);
}
