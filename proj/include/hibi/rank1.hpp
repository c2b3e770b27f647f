#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hibi/class_group.hpp"

namespace hibi {

/// Weights of a Gorenstein toric ring with class group Z.
class Rank1Weights {
 public:
  explicit Rank1Weights(Vec weights) : weights_(std::move(weights)) {
    int pos = 0, neg = 0;
    Int g = 0, sum = 0;
    for (Int w : weights_) {
      if (w == 0) throw Error("zero weight");
      (w > 0 ? pos : neg) += 1;
      g = std::gcd(g, w);
      sum = add(sum, w);
    }
    if (pos < 2 || neg < 2) throw Error("needs at least two positive and two negative weights");
    if (g != 1) throw Error("weights have a common factor " + std::to_string(g));
    if (sum != 0) throw Error("weights do not sum to zero (not Gorenstein)");
  }

  static Rank1Weights from(const ClassGroupData& c) {
    if (c.rank != 1) throw Error("class group rank is " + std::to_string(c.rank) + ", not 1");
    Vec w;
    for (const auto& b : c.weight_of_divisor) w.push_back(b[0]);
    return Rank1Weights(std::move(w));
  }

  const Vec& weights() const { return weights_; }
  /// Negative weights, ascending by absolute value.
  Vec negatives() const {
    Vec out;
    for (Int w : weights_)
      if (w < 0) out.push_back(w);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
  Vec positives() const {
    Vec out;
    for (Int w : weights_)
      if (w > 0) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
  }
  int negative_count() const { return static_cast<int>(negatives().size()); }

 private:
  Vec weights_;
};

struct BetaInvariant {
  Int beta;
  Int lo;
  Int hi;
};

/// beta = -(sum of negative weights); MCM classes form [-beta+1, beta-1].
inline BetaInvariant beta_invariant(const Rank1Weights& w) {
  Int beta = 0;
  for (Int x : w.negatives()) beta = sub(beta, x);
  return {beta, 1 - beta, beta - 1};
}

/// Consecutive classes lo, lo+1, ..., lo+size-1.
struct Window {
  Int lo = 0;
  Int size = 0;

  Int hi() const { return lo + size - 1; }
  Vec classes() const {
    Vec out(size);
    std::iota(out.begin(), out.end(), lo);
    return out;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

inline std::string to_string(const Window& w) {
  return "{" + std::to_string(w.lo) + ".." + std::to_string(w.hi()) + "}";
}

inline Window base_window(const Rank1Weights& w) { return {0, beta_invariant(w).beta}; }

enum class WindowEnd { low, high };

/// Result of replacing an extremal summand, with its approximation sequence.
struct Mutation {
  Window result;
  Int removed;
  Int kernel;
  Vec middle;
};

namespace detail {
inline void require_four(const Rank1Weights& w) {
  if (w.weights().size() != 4)
    throw Error("mutations are computed for three-dimensional rings (four weights), got " +
                std::to_string(w.weights().size()) + " weights");
}
}  // namespace detail

/// Mutation at the lowest or highest class of the window.
inline Mutation mutate_window(const Window& win, WindowEnd end, const Rank1Weights& w) {
  detail::require_four(w);
  const Int beta = beta_invariant(w).beta;
  if (win.size != beta) throw Error("window size must be beta = " + std::to_string(beta));
  Mutation m;
  if (end == WindowEnd::low) {
    const Int c = win.lo;
    m.removed = c;
    m.result = {c + 1, beta};
    m.kernel = c + beta;
    for (Int b : w.negatives()) m.middle.push_back(c - b);
  } else {
    const Int h = win.hi();
    m.removed = h;
    m.result = {win.lo - 1, beta};
    m.kernel = h - beta;
    for (Int b : w.positives()) m.middle.push_back(h - b);
  }
  std::sort(m.middle.begin(), m.middle.end());
  auto inside = [&](Int x) { return m.result.lo <= x && x <= m.result.hi(); };
  if (!inside(m.kernel) || !std::all_of(m.middle.begin(), m.middle.end(), inside))
    throw Error("approximation leaves the mutated window");
  return m;
}

struct ExchangeEdge {
  std::size_t from;
  std::size_t to;
  Int mutated_class;
};

struct ExchangeGraph {
  std::vector<Window> vertices;
  std::vector<ExchangeEdge> edges;
};

/// Windows containing class 0, or those with lowest class in [-radius, radius].
inline std::vector<Window> exchange_vertices(const Rank1Weights& w, bool generators_only, Int radius = 2) {
  const Int beta = beta_invariant(w).beta;
  std::vector<Window> out;
  if (generators_only)
    for (Int a = 0; a < beta; ++a) out.push_back({-a, beta});
  else
    for (Int lo = -radius; lo <= radius; ++lo) out.push_back({lo, beta});
  return out;
}

/// Windows joined by extremal mutations.
inline ExchangeGraph exchange_graph(const Rank1Weights& w, bool generators_only, Int radius = 2) {
  detail::require_four(w);
  ExchangeGraph g{exchange_vertices(w, generators_only, radius), {}};
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    auto m = mutate_window(g.vertices[i], WindowEnd::low, w);
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
      if (g.vertices[j] == m.result) g.edges.push_back({i, j, m.removed});
  }
  return g;
}

inline bool is_path(const ExchangeGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0 || g.edges.size() != n - 1) return false;
  std::vector<int> deg(n, 0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  for (const auto& e : g.edges) {
    if (e.from == e.to) return false;
    ++deg[e.from];
    ++deg[e.to];
    auto a = root(e.from), b = root(e.to);
    if (a == b) return false;
    parent[a] = b;
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

/// Graphviz rendering; vertex names are the windows.
inline std::string to_dot(const ExchangeGraph& g) {
  std::string s = "graph exchange {\n";
  for (const auto& v : g.vertices) s += "  \"" + to_string(v) + "\";\n";
  for (const auto& e : g.edges)
    s += "  \"" + to_string(g.vertices[e.from]) + "\" -- \"" + to_string(g.vertices[e.to]) + "\" [label=\"" +
         std::to_string(e.mutated_class) + "\"];\n";
  return s + "}\n";
}

}  // namespace hibi
