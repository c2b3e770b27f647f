#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hibi/class_group.hpp"
#include "hibi/lp.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// lo <= <coeffs, z> <= hi
struct Inequality {
  Vec coeffs;
  Int lo;
  Int hi;
  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Lattice points of this system are the conic classes.
struct ConicPolytope {
  std::size_t dimension = 0;
  std::vector<Inequality> ineqs;

  bool contains(const Weight& z) const {
    return std::all_of(ineqs.begin(), ineqs.end(), [&](const Inequality& q) {
      Int v = dot(q.coeffs, z.coords);
      return q.lo <= v && v <= q.hi;
    });
  }
};

/// One two-sided inequality per circuit, in cotree coordinates.
///
/// Rows are normalized to a positive leading coefficient, identical rows are
/// intersected, and the result is ordered by support size, then descending.
inline ConicPolytope conic_polytope(const std::vector<Circuit>& circuits, const TreeSelection& tree,
                                    const ClassGroupData& weights) {
  const std::size_t r = static_cast<std::size_t>(weights.rank);
  std::map<int, std::size_t> coordinate;
  for (std::size_t k = 0; k < tree.cotree_edges.size(); ++k) coordinate[tree.cotree_edges[k]] = k;

  std::map<Vec, std::pair<Int, Int>> merged;
  for (const auto& c : circuits) {
    Vec coeffs(r, 0);
    for (int e : c.x_plus)
      if (auto it = coordinate.find(e); it != coordinate.end()) coeffs[it->second] += 1;
    for (int e : c.x_minus)
      if (auto it = coordinate.find(e); it != coordinate.end()) coeffs[it->second] -= 1;
    Int lo = -static_cast<Int>(c.x_minus.size()) + 1;
    Int hi = static_cast<Int>(c.x_plus.size()) - 1;
    auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](Int x) { return x != 0; });
    if (lead == coeffs.end()) continue;
    if (*lead < 0) {
      for (auto& x : coeffs) x = -x;
      std::tie(lo, hi) = std::pair{-hi, -lo};
    }
    auto [it, fresh] = merged.try_emplace(coeffs, lo, hi);
    if (!fresh) {
      it->second.first = std::max(it->second.first, lo);
      it->second.second = std::min(it->second.second, hi);
    }
  }

  ConicPolytope cp{r, {}};
  for (const auto& [coeffs, bounds] : merged) cp.ineqs.push_back({coeffs, bounds.first, bounds.second});
  auto support = [](const Vec& v) { return std::count_if(v.begin(), v.end(), [](Int x) { return x != 0; }); };
  std::sort(cp.ineqs.begin(), cp.ineqs.end(), [&](const Inequality& a, const Inequality& b) {
    auto sa = support(a.coeffs), sb = support(b.coeffs);
    if (sa != sb) return sa < sb;
    return a.coeffs > b.coeffs;
  });
  return cp;
}

inline ConicPolytope conic_polytope(const PosetHat& p, const TreeSelection& tree) {
  return conic_polytope(chordless_circuits(p), tree, class_group(p, tree));
}

/// Integer bounding box of the polytope, per coordinate.
inline std::vector<std::pair<Int, Int>> bounding_box(const ConicPolytope& cp) {
  // Variables: z = zp - zm, then one slack pair per inequality.
  const std::size_t r = cp.dimension, q = cp.ineqs.size();
  LinearProgram lp;
  const std::size_t vars = 2 * r + 2 * q;
  for (std::size_t i = 0; i < q; ++i) {
    const auto& in = cp.ineqs[i];
    std::vector<Rational> upper(vars), lower(vars);
    for (std::size_t k = 0; k < r; ++k) {
      upper[k] = in.coeffs[k];
      upper[r + k] = -in.coeffs[k];
      lower[k] = in.coeffs[k];
      lower[r + k] = -in.coeffs[k];
    }
    upper[2 * r + i] = 1;
    lower[2 * r + q + i] = -1;
    lp.a.push_back(upper);
    lp.b.push_back(in.hi);
    lp.a.push_back(lower);
    lp.b.push_back(in.lo);
  }
  std::vector<std::pair<Int, Int>> box;
  for (std::size_t k = 0; k < r; ++k) {
    std::pair<Int, Int> range;
    for (int sign : {1, -1}) {
      lp.c.assign(vars, 0);
      lp.c[k] = sign;
      lp.c[r + k] = -sign;
      auto res = maximize(lp);
      if (res.status == LpStatus::infeasible) throw Error("conic polytope is empty");
      if (res.status == LpStatus::unbounded) throw Error("conic polytope is unbounded");
      auto num = static_cast<Int>(boost::multiprecision::numerator(res.value));
      auto den = static_cast<Int>(boost::multiprecision::denominator(res.value));
      if (sign == 1)
        range.second = floor_div(num, den);
      else
        range.first = -floor_div(num, den);
    }
    box.push_back(range);
  }
  return box;
}

/// All lattice points, lexicographically sorted.
inline std::vector<Weight> enumerate_conic(const ConicPolytope& cp) {
  auto box = bounding_box(cp);
  std::vector<Weight> out;
  Weight z(Vec(cp.dimension, 0));
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == cp.dimension) {
      if (cp.contains(z)) out.push_back(z);
      return;
    }
    for (Int v = box[k].first; v <= box[k].second; ++v) {
      z[k] = v;
      self(self, k + 1);
    }
  };
  walk(walk, 0);
  return out;
}

/// Whether z = sum a_i beta_i for some T(a) of the form T(ceil(sigma(x))).
///
/// Equivalently -z is strongly critical: z = sum t_i beta_i with every t_i in [0,1).
/// Decided by maximizing the slack s in  sum t_i beta_i = z,  t_i + s <= 1.
inline bool strongly_critical_conic(const Weight& z, const ClassGroupData& weights) {
  const std::size_t n = weights.weight_of_divisor.size(), r = z.size();
  if (r == 0) return true;
  // Variables: t_0..t_{n-1}, s, then slacks u_i with t_i + s + u_i = 1.
  const std::size_t vars = 2 * n + 1;
  LinearProgram lp;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Rational> row(vars);
    for (std::size_t i = 0; i < n; ++i) row[i] = weights.weight_of_divisor[i][k];
    lp.a.push_back(row);
    lp.b.push_back(z[k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(vars);
    row[i] = 1;
    row[n] = 1;
    row[n + 1 + i] = 1;
    lp.a.push_back(row);
    lp.b.push_back(1);
  }
  lp.c.assign(vars, 0);
  lp.c[n] = 1;
  auto res = maximize(lp);
  return res.status == LpStatus::optimal && res.value > 0;
}

/// Conic classes straight from the weights, for cones without a circuit description.
inline std::vector<Weight> zonotope_conic(const ClassGroupData& weights) {
  const auto r = static_cast<std::size_t>(weights.rank);
  std::vector<std::pair<Int, Int>> box(r, {0, 0});
  for (const auto& b : weights.weight_of_divisor)
    for (std::size_t k = 0; k < r; ++k) (b[k] < 0 ? box[k].first : box[k].second) += b[k];
  std::vector<Weight> out;
  Weight z(Vec(r, 0));
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == r) {
      if (strongly_critical_conic(z, weights)) out.push_back(z);
      return;
    }
    for (Int v = box[k].first; v <= box[k].second; ++v) {
      z[k] = v;
      self(self, k + 1);
    }
  };
  walk(walk, 0);
  return out;
}

}  // namespace hibi
