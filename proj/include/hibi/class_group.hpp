#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hibi/integer.hpp"
#include "hibi/poset.hpp"

namespace hibi {

enum class ConeSource { hibi, raw };

/// Ray generators of the cone, one row per prime divisor.
struct SigmaMatrix {
  Mat rows;
  ConeSource source = ConeSource::raw;

  std::size_t divisor_count() const { return rows.size(); }
  std::size_t dimension() const { return rows.empty() ? 0 : rows[0].size(); }
};

/// One row per edge: x_lower - x_upper, or x_lower alone when the upper end is the maximum.
inline SigmaMatrix sigma_matrix(const PosetHat& p) {
  const int d = p.dimension();
  SigmaMatrix s{Mat(p.edge_count(), Vec(d, 0)), ConeSource::hibi};
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [lo, up] = p.edge(e);
    s.rows[e][lo] = 1;
    if (up != d) s.rows[e][up] = -1;
  }
  return s;
}

/// Reads `dim: d` followed by `ray: c1 ... cd` lines.
inline SigmaMatrix parse_cone(std::string_view text) {
  std::optional<std::size_t> dim;
  Mat rays;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::string body = detail::trim(line);
    if (body.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    auto colon = body.find(':');
    if (colon == std::string::npos) throw Error(where + "expected 'dim:' or 'ray:'");
    std::string key = detail::trim(std::string_view(body).substr(0, colon));
    auto fields = detail::split_ws(std::string_view(body).substr(colon + 1));
    Vec values;
    for (const auto& f : fields) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(f, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != f.size()) throw Error(where + "'" + f + "' is not an integer");
      values.push_back(v);
    }
    if (key == "dim") {
      if (dim || values.size() != 1 || values[0] <= 0) throw Error(where + "bad 'dim:' line");
      dim = static_cast<std::size_t>(values[0]);
    } else if (key == "ray") {
      if (!dim) throw Error(where + "'ray:' before 'dim:'");
      if (values.size() != *dim) throw Error(where + "ray has the wrong length");
      for (const auto& r : rays)
        if (r == values) throw Error(where + "duplicate ray " + to_string(values));
      rays.push_back(std::move(values));
    } else {
      throw Error(where + "unknown key '" + key + "'");
    }
  }
  if (!dim) throw Error("missing 'dim:' line");
  if (rank_of(rays) != *dim) throw Error("rays do not span a full-dimensional cone");
  return {std::move(rays), ConeSource::raw};
}

/// Divisor classes in a chosen basis of the free class group.
struct ClassGroupData {
  int rank = 0;
  Vec torsion;
  std::vector<Weight> weight_of_divisor;
  std::vector<int> cotree_basis;

  /// Class of the divisor sum a_i D_i.
  Weight class_of(const Vec& a) const {
    Weight w(Vec(rank, 0));
    for (std::size_t i = 0; i < a.size(); ++i) w += a[i] * weight_of_divisor[i];
    return w;
  }
  Weight total() const { return class_of(Vec(weight_of_divisor.size(), 1)); }
};

namespace detail {

inline ClassGroupData check_free(const SigmaMatrix& s, SmithForm& snf) {
  const std::size_t d = s.dimension();
  ClassGroupData out;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] == 0) throw Error("ray matrix is not of full rank");
    if (snf.diagonal[i] != 1) out.torsion.push_back(snf.diagonal[i]);
  }
  if (snf.diagonal.size() != d) throw Error("ray matrix is not of full rank");
  if (!out.torsion.empty()) {
    std::string t;
    for (Int x : out.torsion) t += " " + std::to_string(x);
    throw Error("class group has torsion (invariant factors" + t + ")");
  }
  out.rank = static_cast<int>(s.divisor_count() - d);
  return out;
}

}  // namespace detail

/// Cokernel of the ray matrix with every divisor expressed as a weight.
///
/// With a tree, the cotree edges are the standard basis. Without one, the
/// basis is the row Hermite normal form of the relation lattice.
inline ClassGroupData class_group(const SigmaMatrix& s, const std::optional<TreeSelection>& tree = {}) {
  const std::size_t n = s.divisor_count(), d = s.dimension();
  auto snf = smith_normal_form(s.rows);
  ClassGroupData out = detail::check_free(s, snf);
  const std::size_t r = n - d;
  out.weight_of_divisor.assign(n, Weight(Vec(r, 0)));

  if (tree) {
    if (tree->tree_edges.size() != d || tree->cotree_edges.size() != r)
      throw Error("tree does not match the ray matrix");
    // Weights W = [X | I] with W * sigma = 0, solved on the tree rows.
    Mat tree_t(d, Vec(d)), rhs(d, Vec(r));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) tree_t[i][j] = s.rows[tree->tree_edges[j]][i];
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < r; ++k) rhs[i][k] = -s.rows[tree->cotree_edges[k]][i];
    auto x = solve_rational(tree_t, rhs);
    if (!x) throw Error("tree rows are not independent");
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        auto v = as_integer((*x)[j][k]);
        if (!v) throw Error("tree is not unimodular");
        out.weight_of_divisor[tree->tree_edges[j]][k] = *v;
      }
    for (std::size_t k = 0; k < r; ++k) out.weight_of_divisor[tree->cotree_edges[k]][k] = 1;
    out.cotree_basis = tree->cotree_edges;
    return out;
  }

  Mat relations(snf.left.begin() + d, snf.left.end());
  Mat basis = hermite_rows(relations);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < n; ++i) out.weight_of_divisor[i][k] = basis[k][i];
  return out;
}

/// Hibi weights with the given (or default) spanning tree.
inline ClassGroupData class_group(const PosetHat& p, const std::optional<TreeSelection>& tree = {}) {
  return class_group(sigma_matrix(p), tree ? *tree : spanning_tree(p));
}

/// Whether T(a) and T(b) are isomorphic, i.e. a - b is an integer image of the ray matrix.
inline bool same_class(const Vec& a, const Vec& b, const SigmaMatrix& s) {
  auto snf = smith_normal_form(s.rows);
  Vec diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = sub(a[i], b[i]);
  Vec c = mat_times(snf.left, diff);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int di = i < snf.diagonal.size() ? snf.diagonal[i] : 0;
    if (di == 0 ? c[i] != 0 : c[i] % di != 0) return false;
  }
  return true;
}

}  // namespace hibi
