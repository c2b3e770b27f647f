#pragma once

#include <optional>
#include <vector>

#include "hibi/integer.hpp"

namespace hibi {

/// maximize c.x subject to A x = b, x >= 0, over exact rationals.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
};

namespace detail {

/// Dense tableau simplex with Bland's rule; the last row holds reduced costs.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows), rows_(rows), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  Rational& cost(std::size_t j) { return t_[rows_][j]; }
  Rational& objective() { return t_[rows_][cols_]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  /// Runs to optimality over columns below `usable`; false when unbounded.
  bool optimize(std::size_t usable) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < usable; ++j)
        if (t_[rows_][j] < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  std::size_t rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t rows_, cols_;
};

}  // namespace detail

inline LpResult maximize(const LinearProgram& lp) {
  const std::size_t m = lp.b.size(), n = lp.c.size();
  detail::Tableau t(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = lp.b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
    t.rhs(i) = flip ? Rational(-lp.b[i]) : lp.b[i];
    t.at(i, n + i) = 1;
    t.basis()[i] = n + i;
  }
  // Phase one: maximize minus the artificial sum.
  for (std::size_t j = 0; j < n + m; ++j) t.cost(j) = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.cost(j) -= t.at(i, j);
    t.objective() -= t.rhs(i);
  }
  t.optimize(n + m);
  if (t.objective() != 0) return {LpStatus::infeasible, {}, {}};

  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
  }

  // Phase two: reduced costs of the real objective against the current basis.
  for (std::size_t j = 0; j < n + m; ++j) t.cost(j) = j < n ? Rational(-lp.c[j]) : Rational(0);
  t.objective() = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bj = t.basis()[i];
    if (bj >= n || lp.c[bj] == 0) continue;
    Rational f = lp.c[bj];
    for (std::size_t j = 0; j < n + m; ++j) t.cost(j) += f * t.at(i, j);
    t.objective() += f * t.rhs(i);
  }
  // Artificial columns stay out; a redundant row keeps its artificial basic at zero.
  if (!t.optimize(n)) return {LpStatus::unbounded, {}, {}};

  LpResult out{LpStatus::optimal, t.objective(), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis()[i] < n) out.x[t.basis()[i]] = t.rhs(i);
  return out;
}

}  // namespace hibi
