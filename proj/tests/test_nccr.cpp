#include <gtest/gtest.h>

#include "support.hpp"

using namespace hibi;

namespace {

std::size_t closed_form_size(const TypeParams& t) {
  const std::size_t l = t.l(), m = t.m(), n = t.n();
  switch (t.family) {
    case Family::I:
      return (m + n + 2) * (n + 1);
    case Family::II:
      return (l + m + 1) * (m + n + 1);
    case Family::III:
      return (l + m + n + 2) * m;
    case Family::IV:
      return (m + 1) * (n + 1);
    case Family::V:
      return (n + 2) * (n + 2);
  }
  return 0;
}

}  // namespace

TEST(BuildL, ClosedFormSizes) {
  for (const auto& t : oracle::family_grid()) {
    auto L = build_L(t);
    EXPECT_EQ(L.chars.size(), closed_form_size(t)) << describe(t);
    EXPECT_TRUE(std::is_sorted(L.chars.begin(), L.chars.end()));
    EXPECT_TRUE(L.contains(Weight{0, 0}));
  }
}

TEST(EndIsMcm, FamiliesPassAndTranslationInvariant) {
  for (const auto& t : oracle::family_grid()) {
    auto w = oracle::table_weights(t);
    auto L = build_L(t);
    auto r = end_is_mcm(L, w);
    EXPECT_TRUE(r.ok) << describe(t);
    EXPECT_EQ(r.checks, L.chars.size() * L.chars.size());
    for (const Weight& shift : {Weight{3, -2}, Weight{-5, 7}}) {
      CharacterSet moved{{}, "shifted"};
      for (const auto& c : L.chars) moved.chars.push_back(c + shift);
      std::sort(moved.chars.begin(), moved.chars.end());
      EXPECT_EQ(end_is_mcm(moved, w).ok, r.ok) << describe(t);
    }
  }
}

TEST(EndIsMcm, OversizedBoxFails) {
  auto t = TypeParams{Family::IV, {1, 1}};
  auto w = oracle::table_weights(t);
  CharacterSet big{lattice_points({{0, 2}, {0, 1}}), "too wide"};
  auto r = end_is_mcm(big, w);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.from && r.to);
  EXPECT_FALSE(is_mcm(*r.to - *r.from, w));
}

TEST(Koszul, TermsAreSubsetSums) {
  ClassGroupData w{2, {}, {{1, 0}, {1, 0}, {0, 1}, {-1, -1}, {-1, -1}}, {}};
  auto terms = koszul_terms(Weight{0, 0}, Direction{1, 0}, w);
  EXPECT_EQ(terms, (std::vector<Weight>{{1, 0}, {2, 0}}));
  EXPECT_THROW(koszul_terms(Weight{0, 0}, Direction{0, 0}, w), Error);
}

TEST(Separated, StrictInequality) {
  CharacterSet L{{{0, 0}, {1, 0}}, ""};
  EXPECT_TRUE(separated(Weight{-1, 5}, L, Direction{1, 0}));
  EXPECT_FALSE(separated(Weight{0, 5}, L, Direction{1, 0}));
}

TEST(Verify, CorpusFamiliesAndReplay) {
  for (const auto& f : oracle::gorenstein_posets()) {
    auto p = oracle::corpus_poset(f);
    auto r = verify_nccr(p);
    ASSERT_EQ(r.verdict, Verdict::verified) << f << ": " << r.message;
    ASSERT_TRUE(r.gldim);
    ClassGroupData w{r.rank, {}, r.weights, {}};
    auto replayed = oracle::replay(r.gldim->certificate, r.L.chars, w);
    EXPECT_TRUE(replayed.ok) << f << ": " << replayed.failure;
    // every conic class outside L is a goal
    std::size_t outside = std::count_if(r.conic.begin(), r.conic.end(), [&](const Weight& c) { return !r.L.contains(c); });
    EXPECT_EQ(r.gldim->certificate.goal.size(), outside) << f;
    if (r.type) {
      EXPECT_EQ(r.L.chars.size(), closed_form_size(*r.type)) << f;
    }
  }
}

TEST(Verify, CertificateIsDeterministic) {
  auto p = oracle::corpus_poset("type1_m2_n3.poset");
  auto a = verify_nccr(p), b = verify_nccr(p);
  ASSERT_TRUE(a.gldim && b.gldim);
  ASSERT_EQ(a.gldim->certificate.steps.size(), b.gldim->certificate.steps.size());
  for (std::size_t i = 0; i < a.gldim->certificate.steps.size(); ++i) {
    EXPECT_EQ(a.gldim->certificate.steps[i].chi, b.gldim->certificate.steps[i].chi);
    EXPECT_EQ(a.gldim->certificate.steps[i].lambda, b.gldim->certificate.steps[i].lambda);
    EXPECT_EQ(a.gldim->certificate.steps[i].deps, b.gldim->certificate.steps[i].deps);
  }
}

TEST(Verify, ReplayerRejectsTamperedCertificates) {
  auto r = verify_nccr(oracle::corpus_poset("type1_m0_n1.poset"));
  ASSERT_TRUE(r.gldim);
  ClassGroupData w{2, {}, r.weights, {}};
  auto cert = r.gldim->certificate;
  ASSERT_GE(cert.steps.size(), 2u);
  auto swapped = cert;
  std::reverse(swapped.steps.begin(), swapped.steps.end());
  EXPECT_FALSE(oracle::replay(swapped, r.L.chars, w).ok);
  auto truncated = cert;
  truncated.steps.pop_back();
  EXPECT_FALSE(oracle::replay(truncated, r.L.chars, w).ok);
  auto wrong = cert;
  wrong.steps[0].lambda = -wrong.steps[0].lambda;
  EXPECT_FALSE(oracle::replay(wrong, r.L.chars, w).ok);
}

TEST(Verify, TwoComponentExampleCertificate) {
  auto r = verify_nccr(oracle::corpus_poset("two_components.poset"));
  ASSERT_EQ(r.verdict, Verdict::verified);
  EXPECT_EQ(r.L.chars.size(), 6u);
  EXPECT_EQ(r.conic.size(), 13u);
  EXPECT_EQ(r.gldim->certificate.steps.size(), 7u);
}

TEST(Verify, NegativeControls) {
  auto nonpure = verify_nccr(oracle::corpus_poset("nonpure.poset"));
  EXPECT_EQ(nonpure.verdict, Verdict::not_gorenstein);
  EXPECT_FALSE(nonpure.gldim);
  auto ext = verify_nccr(oracle::corpus_poset("polyext.poset"));
  EXPECT_EQ(ext.verdict, Verdict::polynomial_extension);
  ASSERT_TRUE(ext.extension_edge);
  EXPECT_EQ(*ext.extension_edge, 0);
  EXPECT_EQ(verdict_name(ext.verdict), "polynomial-extension");
}

TEST(Gldim, SmallerSetLeavesGoalsUncovered) {
  auto t = TypeParams{Family::V, {0}};
  auto w = oracle::table_weights(t);
  CharacterSet L{{{0, 0}}, "origin only"};
  std::vector<Weight> goal{{1, 1}, {-1, -1}};
  auto out = certify_gldim(L, w, goal);
  EXPECT_FALSE(out.covered);
  EXPECT_FALSE(out.uncovered.empty());
  EXPECT_EQ(out.reasons.size(), out.uncovered.size());
}

TEST(AlignWeights, FindsUnimodularChange) {
  auto t = TypeParams{Family::I, {1, 1}};
  auto table = expected_weight_table(t);
  std::vector<Weight> ws;
  Mat u{{2, 1}, {1, 1}};
  for (const auto& [b, n] : table)
    for (int i = 0; i < n; ++i) ws.push_back(Weight(mat_times(u, b.coords)));
  auto back = align_weights(ws, table);
  ASSERT_TRUE(back);
  std::vector<Weight> mapped;
  for (const auto& b : ws) mapped.push_back(Weight(mat_times(*back, b.coords)));
  EXPECT_EQ(tally(mapped), sorted_table(table));
  EXPECT_FALSE(align_weights(ws, expected_weight_table({Family::V, {0}})));
}
