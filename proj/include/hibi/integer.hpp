#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hibi {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

/// Every failure the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}
inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}
inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow");
  return r;
}

/// Floor division, rounding towards negative infinity.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

/// Integer vector tagged by what it means, so characters and directions do not mix.
template <class Tag>
struct Lattice {
  Vec coords;

  Lattice() = default;
  explicit Lattice(Vec c) : coords(std::move(c)) {}
  Lattice(std::initializer_list<Int> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
  }

  Lattice& operator+=(const Lattice& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = add(coords[i], o.coords[i]);
    return *this;
  }
  Lattice& operator-=(const Lattice& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = sub(coords[i], o.coords[i]);
    return *this;
  }
  friend Lattice operator+(Lattice a, const Lattice& b) { return a += b; }
  friend Lattice operator-(Lattice a, const Lattice& b) { return a -= b; }
  friend Lattice operator-(Lattice a) {
    for (auto& x : a.coords) x = sub(0, x);
    return a;
  }
  friend Lattice operator*(Int k, Lattice a) {
    for (auto& x : a.coords) x = mul(k, x);
    return a;
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice& a, const Lattice& b) { return a.coords <=> b.coords; }
};

struct WeightTag;
struct DirectionTag;

/// A class group element; doubles as a torus character.
using Weight = Lattice<WeightTag>;
/// A one-parameter subgroup, stored as a primitive integer vector.
using Direction = Lattice<DirectionTag>;

inline Int pairing(const Direction& l, const Weight& w) {
  Int s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s = add(s, mul(l[i], w[i]));
  return s;
}

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = add(s, mul(a[i], b[i]));
  return s;
}

inline Int gcd_of(const Vec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

/// Divides out the content; zero stays zero.
inline Vec primitive(Vec v) {
  Int g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}
template <class Tag>
std::string to_string(const Lattice<Tag>& v) {
  return to_string(v.coords);
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, sub(old_r, mul(q, r)));
    old_s = std::exchange(s, sub(old_s, mul(q, s)));
    old_t = std::exchange(t, sub(old_t, mul(q, t)));
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Mat identity(std::size_t n) {
  Mat m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat multiply(const Mat& a, const Mat& b) {
  std::size_t cols = b.empty() ? 0 : b[0].size();
  Mat c(a.size(), Vec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < cols; ++j) c[i][j] = add(c[i][j], mul(a[i][k], b[k][j]));
  return c;
}

inline Vec mat_times(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) y[i] = dot(a[i], x);
  return y;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
  Mat left;
  Mat right;
  Vec diagonal;  // min(rows, cols) entries, non-negative
};

inline SmithForm smith_normal_form(Mat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Mat u = identity(rows), v = identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  };
  // row_i -= q * row_j
  auto row_op = [&](std::size_t i, std::size_t j, Int q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = sub(a[i][c], mul(q, a[j][c]));
    for (std::size_t c = 0; c < rows; ++c) u[i][c] = sub(u[i][c], mul(q, u[j][c]));
  };
  auto col_op = [&](std::size_t i, std::size_t j, Int q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] = sub(a[r][i], mul(q, a[r][j]));
    for (std::size_t r = 0; r < cols; ++r) v[r][i] = sub(v[r][i], mul(q, v[r][j]));
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 &&
              (!pivot || std::abs(a[i][j]) < std::abs(a[pivot->first][pivot->second])))
            pivot = {i, j};
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_op(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_op(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_op(t, *bad_row, -1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }

  Vec diag(steps);
  for (std::size_t t = 0; t < steps; ++t) diag[t] = a[t][t];
  return {std::move(u), std::move(v), std::move(diag)};
}

inline std::size_t rank_of(const Mat& a) {
  auto s = smith_normal_form(a);
  return static_cast<std::size_t>(
      std::count_if(s.diagonal.begin(), s.diagonal.end(), [](Int x) { return x != 0; }));
}

/// Row Hermite normal form (zero rows dropped). Pivots positive, entries above reduced.
inline Mat hermite_rows(Mat a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      while (a[i][c] != 0) {
        Int q = a[r][c] == 0 ? 0 : a[i][c] / a[r][c];
        if (a[r][c] != 0)
          for (std::size_t k = 0; k < cols; ++k) a[i][k] = sub(a[i][k], mul(q, a[r][k]));
        if (a[i][c] != 0) std::swap(a[r], a[i]);
      }
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = sub(a[i][k], mul(q, a[r][k]));
    }
    ++r;
  }
  a.resize(r);
  return a;
}

/// Exact solution of A X = B over the rationals when A is square and invertible.
inline std::optional<std::vector<std::vector<Rational>>> solve_rational(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    for (std::size_t j = 0; j < m; ++j) t[i][n + j] = b[i][j];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && t[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(t[p], t[c]);
    Rational inv = 1 / t[c][c];
    for (auto& x : t[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && t[i][c] != 0) {
        Rational f = t[i][c];
        for (std::size_t j = c; j < n + m; ++j) t[i][j] -= f * t[c][j];
      }
  }
  std::vector<std::vector<Rational>> x(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) x[i][j] = t[i][n + j];
  return x;
}

inline std::optional<Int> as_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  return static_cast<Int>(boost::multiprecision::numerator(q));
}

}  // namespace hibi
