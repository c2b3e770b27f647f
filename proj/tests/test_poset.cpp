#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace hibi;

namespace {

const char* kTwoComponents = "elements: p1 p2 p3 p4 p5\ncover: p1 < p2\ncover: p3 < p4\ncover: p3 < p5\n";

std::string endpoints(const PosetHat& p, int e) { return p.name(p.edge(e).lower) + "<" + p.name(p.edge(e).upper); }

/// Same poset with elements renamed and declared in a shuffled order.
std::string relabeled(const PosetHat& p, std::mt19937& rng) {
  auto names = p.names();
  std::vector<int> order;
  for (int v = 1; v < p.top(); ++v) order.push_back(v);
  std::shuffle(order.begin(), order.end(), rng);
  std::string text = "elements:";
  for (int v : order) text += " z" + names[v];
  text += "\n";
  std::vector<std::string> covers;
  for (const auto& [a, b] : p.interior_covers()) covers.push_back("cover: z" + a + " < z" + b + "\n");
  std::shuffle(covers.begin(), covers.end(), rng);
  for (const auto& c : covers) text += c;
  return text;
}

}  // namespace

TEST(Parse, EdgeOrderFollowsDepthFirstWalk) {
  auto p = parse_poset(kTwoComponents);
  ASSERT_EQ(p.edge_count(), 8);
  std::vector<std::string> want{"0^<p1", "p1<p2", "p2<1^", "0^<p3", "p3<p4", "p4<1^", "p3<p5", "p5<1^"};
  for (int e = 0; e < 8; ++e) EXPECT_EQ(endpoints(p, e), want[e]) << edge_label(e);
  EXPECT_EQ(p.vertex_count(), 7);
  EXPECT_EQ(p.dimension(), 6);
  EXPECT_EQ(p.name(p.bottom()), "0^");
  EXPECT_EQ(p.name(p.top()), "1^");
}

TEST(Parse, CommentsAndBlankLines) {
  auto p = parse_poset("# a chain\n\nelements: a b   # two\ncover: a<b\n");
  EXPECT_EQ(p.edge_count(), 3);
}

TEST(Parse, EmptyPosetIsOneEdge) {
  auto p = parse_poset("elements:\n");
  EXPECT_EQ(p.vertex_count(), 2);
  EXPECT_EQ(p.edge_count(), 1);
}

TEST(Parse, Rejections) {
  EXPECT_THROW(parse_poset("cover: a < b\n"), Error);
  EXPECT_THROW(parse_poset("elements: a a\n"), Error);
  EXPECT_THROW(parse_poset("elements: 0^\n"), Error);
  EXPECT_THROW(parse_poset("elements: a\ncover: a < b\n"), Error);
  EXPECT_THROW(parse_poset("elements: a b\ncover: a < b\ncover: a < b\n"), Error);
  EXPECT_THROW(parse_poset("elements: a b\ncover: a < b\ncover: b < a\n"), Error);
  EXPECT_THROW(parse_poset("elements: a\ncover: a < a\n"), Error);
  EXPECT_THROW(parse_poset("elements: a b c\ncover: a < b\ncover: b < c\ncover: a < c\n"), Error);
  EXPECT_THROW(parse_poset("elements: a b\nrelation: a < b\n"), Error);
  EXPECT_THROW(parse_poset("elements: a b\ncover: a b\n"), Error);
}

TEST(Serialize, RoundTripOnCorpus) {
  for (const auto& f : oracle::corpus_posets()) {
    auto p = oracle::corpus_poset(f);
    auto q = parse_poset(serialize(p));
    EXPECT_TRUE(same_structure(p, q)) << f;
    EXPECT_EQ(serialize(q), serialize(p)) << f;
  }
}

TEST(Flip, IsAnInvolution) {
  for (const auto& f : oracle::corpus_posets()) {
    auto p = oracle::corpus_poset(f);
    EXPECT_TRUE(same_structure(flip(flip(p)), p)) << f;
    EXPECT_EQ(flip(p).edge_count(), p.edge_count());
  }
}

TEST(Purity, ChainLengths) {
  auto p = parse_poset(kTwoComponents);
  auto pure = is_pure(p);
  EXPECT_TRUE(pure.pure);
  EXPECT_EQ(pure.chain_length, 3);
  auto q = oracle::corpus_poset("nonpure.poset");
  EXPECT_FALSE(is_pure(q).pure);
  EXPECT_FALSE(is_pure(q).chain_length);
}

TEST(PolynomialExtension, NamesTheBridge) {
  EXPECT_FALSE(polynomial_extension_edge(parse_poset(kTwoComponents)));
  auto p = oracle::corpus_poset("polyext.poset");
  auto e = polynomial_extension_edge(p);
  ASSERT_TRUE(e);
  EXPECT_EQ(endpoints(p, *e), "0^<a");
  auto chain = parse_poset("elements: a b\ncover: a < b\n");
  EXPECT_TRUE(polynomial_extension_edge(chain));
}

TEST(Circuits, MatchSubsetOracleOnCorpus) {
  for (const auto& f : oracle::corpus_posets()) {
    auto p = oracle::corpus_poset(f);
    if (p.edge_count() > 20) continue;
    auto want = oracle::induced_cycles(p);
    std::set<std::vector<int>> got;
    for (const auto& c : chordless_circuits(p)) {
      std::vector<int> edges = c.x_plus;
      edges.insert(edges.end(), c.x_minus.begin(), c.x_minus.end());
      std::sort(edges.begin(), edges.end());
      EXPECT_EQ(edges.size(), c.vertex_cycle.size()) << f;
      EXPECT_TRUE(got.insert(edges).second) << f << ": circuit listed twice";
    }
    EXPECT_EQ(got, want) << f;
  }
}

TEST(Circuits, UpAndDownEdgesBalance) {
  // Walking the cycle, up edges raise the rank by one and down edges lower it.
  for (const auto& f : oracle::gorenstein_posets()) {
    auto p = oracle::corpus_poset(f);
    for (const auto& c : chordless_circuits(p)) {
      EXPECT_EQ(c.x_plus.size(), c.x_minus.size()) << f;
      const auto& cyc = c.vertex_cycle;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        auto e = p.edge_between(a, b);
        ASSERT_TRUE(e);
        bool up = p.edge(*e).lower == a;
        const auto& side = up ? c.x_plus : c.x_minus;
        EXPECT_TRUE(std::find(side.begin(), side.end(), *e) != side.end()) << f;
      }
    }
  }
}

TEST(Circuits, TwoComponentExample) {
  auto p = parse_poset(kTwoComponents);
  EXPECT_EQ(chordless_circuits(p).size(), 3u);
}

TEST(SpanningTree, DefaultAndHint) {
  auto p = parse_poset(kTwoComponents);
  auto t = spanning_tree(p);
  EXPECT_EQ(t.tree_edges, (std::vector<int>{0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(t.cotree_edges, (std::vector<int>{5, 7}));
  auto h = spanning_tree(p, std::vector<int>{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(h.cotree_edges, (std::vector<int>{0, 7}));
  EXPECT_THROW(spanning_tree(p, std::vector<int>{0, 1, 2, 3, 4, 5}), Error);  // contains a cycle
  EXPECT_THROW(spanning_tree(p, std::vector<int>{0, 1}), Error);
}

TEST(Relabel, InvariantsSurviveRenamingAndShuffling) {
  std::mt19937 rng(11);
  for (const auto& f : oracle::gorenstein_posets()) {
    auto p = oracle::corpus_poset(f);
    auto cg = class_group(p);
    auto conic = enumerate_conic(conic_polytope(p, spanning_tree(p)));
    for (int trial = 0; trial < 3; ++trial) {
      auto q = parse_poset(relabeled(p, rng));
      EXPECT_EQ(q.edge_count(), p.edge_count());
      EXPECT_EQ(is_pure(q).chain_length, is_pure(p).chain_length) << f;
      EXPECT_EQ(chordless_circuits(q).size(), chordless_circuits(p).size()) << f;
      auto cq = class_group(q);
      EXPECT_EQ(cq.rank, cg.rank) << f;
      EXPECT_EQ(enumerate_conic(conic_polytope(q, spanning_tree(q))).size(), conic.size()) << f;
      auto cls = classify(p), clq = classify(q);
      EXPECT_EQ(cls.type.has_value(), clq.type.has_value()) << f;
      if (cls.type && clq.type) {
        EXPECT_EQ(cls.type->family, clq.type->family) << f;
        EXPECT_EQ(cls.type->params, clq.type->params) << f;
      }
    }
  }
}
