#include <random>

#include <gtest/gtest.h>

#include "hibi/integer.hpp"

using namespace hibi;

TEST(Checked, OverflowThrows) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_THROW(add(big, 1), Error);
  EXPECT_THROW(sub(-big - 1, 1), Error);
  EXPECT_THROW(mul(big / 2 + 1, 2), Error);
  EXPECT_EQ(mul(-3, 7), -21);
}

TEST(Checked, FloorAndCeilDivision) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(6, 3), 2);
}

TEST(Lattice, ArithmeticAndOrder) {
  Weight a{1, -2}, b{3, 4};
  EXPECT_EQ(a + b, (Weight{4, 2}));
  EXPECT_EQ(b - a, (Weight{2, 6}));
  EXPECT_EQ(-a, (Weight{-1, 2}));
  EXPECT_EQ(3 * a, (Weight{3, -6}));
  EXPECT_LT(a, b);
  EXPECT_EQ(pairing(Direction{2, 1}, a), 0);
  EXPECT_EQ(to_string(a), "(1,-2)");
}

TEST(Lattice, Primitive) {
  EXPECT_EQ(primitive({4, -6}), (Vec{2, -3}));
  EXPECT_EQ(primitive({0, 0}), (Vec{0, 0}));
  EXPECT_EQ(gcd_of({0, -9, 6}), 3);
}

TEST(ExtGcd, Bezout) {
  for (Int a = -12; a <= 12; ++a)
    for (Int b = -12; b <= 12; ++b) {
      auto [g, x, y] = ext_gcd(a, b);
      EXPECT_EQ(g, std::gcd(a, b));
      EXPECT_EQ(a * x + b * y, g);
    }
}

namespace {
Mat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-5, 5);
  Mat a(rows, Vec(cols));
  for (auto& r : a)
    for (auto& x : r) x = d(rng);
  return a;
}

Int det2(const Mat& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
}  // namespace

TEST(Smith, DecomposesRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 4;
    Mat a = random_matrix(rng, rows, cols);
    auto s = smith_normal_form(a);
    Mat d = multiply(multiply(s.left, a), s.right);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Int expect = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : 0;
        ASSERT_EQ(d[i][j], expect) << "trial " << trial;
      }
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
      if (s.diagonal[i + 1] != 0) {
        EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
      }
    for (Int x : s.diagonal) EXPECT_GE(x, 0);
    EXPECT_EQ(std::count_if(s.diagonal.begin(), s.diagonal.end(), [](Int x) { return x != 0; }),
              static_cast<long>(rank_of(a)));
  }
}

TEST(Smith, UnimodularFactors) {
  Mat a{{2, 4}, {6, 8}};
  auto s = smith_normal_form(a);
  EXPECT_EQ(std::abs(det2(s.left)), 1);
  EXPECT_EQ(std::abs(det2(s.right)), 1);
  EXPECT_EQ(s.diagonal, (Vec{2, 4}));
}

TEST(Hermite, EchelonAndSameRowSpace) {
  Mat a{{2, 4, 6}, {1, 1, 1}, {3, 5, 7}};
  Mat h = hermite_rows(a);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_GT(h[0][0], 0);
  EXPECT_EQ(h[1][0], 0);
  // each original row is an integer combination of h
  for (const auto& row : a) {
    auto sol = solve_rational({{h[0][0], h[1][0]}, {h[0][1], h[1][1]}}, {{row[0]}, {row[1]}});
    ASSERT_TRUE(sol);
    EXPECT_TRUE(as_integer((*sol)[0][0]));
    EXPECT_TRUE(as_integer((*sol)[1][0]));
  }
}

TEST(SolveRational, SingularHasNoSolution) {
  EXPECT_FALSE(solve_rational({{1, 2}, {2, 4}}, {{1}, {3}}));
  auto s = solve_rational({{2, 0}, {0, 3}}, {{1}, {1}});
  ASSERT_TRUE(s);
  EXPECT_EQ((*s)[0][0], Rational(1, 2));
  EXPECT_FALSE(as_integer((*s)[1][0]));
}
