#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hibi/integer.hpp"

namespace hibi {

inline constexpr std::string_view bottom_name = "0^";
inline constexpr std::string_view top_name = "1^";

/// A Hasse edge, lower < upper as vertex indices of the poset.
struct Edge {
  int lower;
  int upper;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge labels are 1-based in every user-facing string.
inline std::string edge_label(int e) { return "e" + std::to_string(e + 1); }

/// A finite poset with a minimum and a maximum adjoined.
///
/// Vertex 0 is the adjoined minimum, the declared elements follow in
/// declaration order, and the last vertex is the adjoined maximum.
class PosetHat {
 public:
  /// Builds from declared elements and cover pairs among them.
  PosetHat(std::vector<std::string> elements, const std::vector<std::pair<int, int>>& covers)
      : names_() {
    const int k = static_cast<int>(elements.size());
    names_.reserve(k + 2);
    names_.emplace_back(bottom_name);
    for (auto& e : elements) names_.push_back(std::move(e));
    names_.emplace_back(top_name);

    std::vector<std::vector<int>> up(k + 2);
    std::vector<bool> has_lower(k, false), has_upper(k, false);
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : covers) {
      if (a == b) throw Error("element '" + names_[a + 1] + "' covers itself");
      if (!seen.insert({a, b}).second)
        throw Error("duplicate cover " + names_[a + 1] + " < " + names_[b + 1]);
      up[a + 1].push_back(b + 1);
      has_upper[a] = true;
      has_lower[b] = true;
    }
    check_acyclic(up, k + 2);
    for (auto [a, b] : covers)
      if (reachable_avoiding(up, a + 1, b + 1))
        throw Error("cover " + names_[a + 1] + " < " + names_[b + 1] + " is implied by transitivity");

    for (int i = 0; i < k; ++i) {
      if (!has_lower[i]) up[0].push_back(i + 1);
      if (!has_upper[i]) up[i + 1].push_back(k + 1);
    }
    if (k == 0) up[0].push_back(1);
    for (auto& u : up) std::sort(u.begin(), u.end());

    std::vector<bool> visited(k + 2, false);
    visited[0] = true;
    collect_edges(up, 0, visited);

    adjacency_.assign(k + 2, {});
    for (int e = 0; e < edge_count(); ++e) {
      adjacency_[edges_[e].lower].push_back(e);
      adjacency_[edges_[e].upper].push_back(e);
    }
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Number of declared elements plus one; the lattice dimension of the cone.
  int dimension() const { return vertex_count() - 1; }
  int bottom() const { return 0; }
  int top() const { return vertex_count() - 1; }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  /// Incident edge ids of a vertex, ascending.
  const std::vector<int>& incident(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int other_end(int e, int v) const { return edges_[e].lower == v ? edges_[e].upper : edges_[e].lower; }

  std::optional<int> find(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
      if (names_[v] == name) return v;
    return std::nullopt;
  }
  std::optional<int> edge_between(int a, int b) const {
    for (int e : adjacency_[a])
      if (other_end(e, a) == b) return e;
    return std::nullopt;
  }

  /// Up-neighbours in edge order.
  std::vector<int> upper_covers(int v) const {
    std::vector<int> out;
    for (int e : adjacency_[v])
      if (edges_[e].lower == v) out.push_back(edges_[e].upper);
    return out;
  }
  std::vector<int> lower_covers(int v) const {
    std::vector<int> out;
    for (int e : adjacency_[v])
      if (edges_[e].upper == v) out.push_back(edges_[e].lower);
    return out;
  }

  /// Declared elements with the covers among them (adjoined edges left out).
  std::set<std::pair<std::string, std::string>> interior_covers() const {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : edges_)
      if (e.lower != bottom() && e.upper != top()) out.insert({names_[e.lower], names_[e.upper]});
    return out;
  }
  std::set<std::string> interior_names() const { return {names_.begin() + 1, names_.end() - 1}; }

  friend bool same_structure(const PosetHat& a, const PosetHat& b) {
    return a.interior_names() == b.interior_names() && a.interior_covers() == b.interior_covers();
  }

 private:
  static void check_acyclic(const std::vector<std::vector<int>>& up, int n) {
    std::vector<int> indeg(n, 0);
    for (const auto& u : up)
      for (int w : u) ++indeg[w];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int w : up[v])
        if (--indeg[w] == 0) stack.push_back(w);
    }
    if (seen != n) throw Error("cover relation contains a cycle");
  }

  // Is b reachable from a by a path of length >= 2?
  static bool reachable_avoiding(const std::vector<std::vector<int>>& up, int a, int b) {
    std::vector<bool> seen(up.size(), false);
    std::vector<int> stack;
    for (int w : up[a])
      if (w != b) stack.push_back(w);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == b) return true;
      if (seen[v]) continue;
      seen[v] = true;
      for (int w : up[v]) stack.push_back(w);
    }
    return false;
  }

  void collect_edges(const std::vector<std::vector<int>>& up, int v, std::vector<bool>& visited) {
    for (int w : up[v]) {
      edges_.push_back({v, w});
      if (!visited[w]) {
        visited[w] = true;
        collect_edges(up, w, visited);
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace detail

/// Reads the `elements:` / `cover: x < y` format.
inline PosetHat parse_poset(std::string_view text) {
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> raw_covers;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::string body = detail::trim(line);
    if (body.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    auto colon = body.find(':');
    if (colon == std::string::npos) throw Error(where + "expected 'elements:' or 'cover:'");
    std::string key = detail::trim(std::string_view(body).substr(0, colon));
    std::string rest = body.substr(colon + 1);
    if (key == "elements") {
      if (elements) throw Error(where + "second 'elements:' line");
      elements = detail::split_ws(rest);
      std::set<std::string> uniq;
      for (const auto& e : *elements) {
        if (e == bottom_name || e == top_name) throw Error(where + "'" + e + "' is reserved");
        if (e.find('<') != std::string::npos) throw Error(where + "element names may not contain '<'");
        if (!uniq.insert(e).second) throw Error(where + "duplicate element '" + e + "'");
      }
    } else if (key == "cover") {
      auto lt = rest.find('<');
      if (lt == std::string::npos) throw Error(where + "cover needs the form 'x < y'");
      auto lo = detail::split_ws(std::string_view(rest).substr(0, lt));
      auto hi = detail::split_ws(std::string_view(rest).substr(lt + 1));
      if (lo.size() != 1 || hi.size() != 1) throw Error(where + "cover needs the form 'x < y'");
      raw_covers.emplace_back(lo[0], hi[0]);
    } else {
      throw Error(where + "unknown key '" + key + "'");
    }
  }
  if (!elements) throw Error("missing 'elements:' line");

  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(elements->size()); ++i) index[(*elements)[i]] = i;
  std::vector<std::pair<int, int>> covers;
  for (const auto& [a, b] : raw_covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw Error("cover references undeclared element '" + a + "'");
    if (ib == index.end()) throw Error("cover references undeclared element '" + b + "'");
    covers.emplace_back(ia->second, ib->second);
  }
  return PosetHat(std::move(*elements), covers);
}

/// Writes the poset back out with elements and covers sorted.
inline std::string serialize(const PosetHat& p) {
  std::string out = "elements:";
  for (const auto& n : p.interior_names()) out += " " + n;
  out += "\n";
  for (const auto& [a, b] : p.interior_covers()) out += "cover: " + a + " < " + b + "\n";
  return out;
}

/// The order dual, with elements declared in the same order.
inline PosetHat flip(const PosetHat& p) {
  std::vector<std::string> elements(p.names().begin() + 1, p.names().end() - 1);
  std::vector<std::pair<int, int>> covers;
  for (const auto& e : p.edges())
    if (e.lower != p.bottom() && e.upper != p.top()) covers.emplace_back(e.upper - 1, e.lower - 1);
  return PosetHat(std::move(elements), covers);
}

struct Purity {
  bool pure = false;
  std::optional<int> chain_length;
};

/// Pure when every maximal chain from the minimum to the maximum has the same length.
inline Purity is_pure(const PosetHat& p) {
  // Vertex indices are not a linear extension in general; relax in DFS order instead.
  const int n = p.vertex_count();
  std::vector<int> order, state(n, 0);
  auto visit = [&](auto&& self, int v) -> void {
    state[v] = 1;
    for (int w : p.upper_covers(v))
      if (!state[w]) self(self, w);
    order.push_back(v);
  };
  visit(visit, p.bottom());
  std::reverse(order.begin(), order.end());
  std::vector<int> shortest(n, 1 << 29), longest(n, -1);
  shortest[p.bottom()] = longest[p.bottom()] = 0;
  for (int v : order)
    for (int w : p.upper_covers(v)) {
      shortest[w] = std::min(shortest[w], shortest[v] + 1);
      longest[w] = std::max(longest[w], longest[v] + 1);
    }
  if (shortest[p.top()] != longest[p.top()]) return {false, std::nullopt};
  return {true, longest[p.top()]};
}

inline bool is_connected(const PosetHat& p) {
  std::vector<bool> seen(p.vertex_count(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int e : p.incident(v)) {
      int w = p.other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count == p.vertex_count();
}

/// A chordless cycle of the Hasse graph with its up/down edge split.
struct Circuit {
  std::vector<int> vertex_cycle;
  std::vector<int> x_plus;
  std::vector<int> x_minus;
};

/// Every chordless cycle, once each up to rotation and reflection.
///
/// The cycle starts at its smallest vertex and leaves towards the smaller of
/// its two neighbours on the cycle.
inline std::vector<Circuit> chordless_circuits(const PosetHat& p) {
  const int n = p.vertex_count();
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) {
    for (int e : p.incident(v)) nbrs[v].push_back(p.other_end(e, v));
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }
  auto adjacent = [&](int a, int b) { return std::binary_search(nbrs[a].begin(), nbrs[a].end(), b); };

  std::vector<std::vector<int>> found;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  // Paths stay induced away from the root; the root's chords are filtered below.
  auto extend = [&](auto&& self, int root) -> void {
    int last = path.back();
    for (int w : nbrs[last]) {
      if (w == root && path.size() >= 3 && path[1] < last) {
        found.push_back(path);
        continue;
      }
      if (w <= root || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = adjacent(path[i], w);
      if (chord) continue;
      path.push_back(w);
      on_path[w] = true;
      self(self, root);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (int root = 0; root < n; ++root) {
    path = {root};
    on_path[root] = true;
    extend(extend, root);
    on_path[root] = false;
  }

  std::vector<Circuit> out;
  for (const auto& cyc : found) {
    bool chordless = true;
    const std::size_t len = cyc.size();
    for (std::size_t i = 0; i < len && chordless; ++i)
      for (std::size_t j = i + 2; j < len; ++j) {
        if (i == 0 && j == len - 1) continue;
        if (adjacent(cyc[i], cyc[j])) {
          chordless = false;
          break;
        }
      }
    if (!chordless) continue;
    Circuit c;
    c.vertex_cycle = cyc;
    for (std::size_t i = 0; i < len; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % len];
      int e = *p.edge_between(a, b);
      (p.edge(e).lower == a ? c.x_plus : c.x_minus).push_back(e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// A spanning tree of the Hasse graph; the remaining edges index class group coordinates.
struct TreeSelection {
  std::vector<int> tree_edges;
  std::vector<int> cotree_edges;
};

inline TreeSelection tree_from_edges(const PosetHat& p, std::vector<int> tree) {
  std::sort(tree.begin(), tree.end());
  if (std::adjacent_find(tree.begin(), tree.end()) != tree.end())
    throw Error("spanning tree hint repeats an edge");
  for (int e : tree)
    if (e < 0 || e >= p.edge_count()) throw Error("spanning tree hint names an unknown edge");
  if (static_cast<int>(tree.size()) != p.dimension())
    throw Error("spanning tree needs " + std::to_string(p.dimension()) + " edges, got " +
                std::to_string(tree.size()));
  std::vector<int> parent(p.vertex_count());
  for (int v = 0; v < p.vertex_count(); ++v) parent[v] = v;
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : tree) {
    int a = root(p.edge(e).lower), b = root(p.edge(e).upper);
    if (a == b) throw Error("spanning tree hint contains a cycle through " + edge_label(e));
    parent[a] = b;
  }
  TreeSelection t;
  t.tree_edges = std::move(tree);
  for (int e = 0; e < p.edge_count(); ++e)
    if (!std::binary_search(t.tree_edges.begin(), t.tree_edges.end(), e)) t.cotree_edges.push_back(e);
  return t;
}

/// Uses the hint when given, otherwise breadth-first search from the minimum.
inline TreeSelection spanning_tree(const PosetHat& p, const std::optional<std::vector<int>>& hint = {}) {
  if (hint) return tree_from_edges(p, *hint);
  std::vector<bool> seen(p.vertex_count(), false);
  std::queue<int> q;
  q.push(p.bottom());
  seen[p.bottom()] = true;
  std::vector<int> tree;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : p.incident(v)) {
      int w = p.other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        tree.push_back(e);
        q.push(w);
      }
    }
  }
  if (static_cast<int>(tree.size()) != p.dimension()) throw Error("Hasse graph is disconnected");
  return tree_from_edges(p, std::move(tree));
}

/// First edge lying on every maximal chain, if any.
inline std::optional<int> polynomial_extension_edge(const PosetHat& p) {
  for (int cut = 0; cut < p.edge_count(); ++cut) {
    std::vector<bool> seen(p.vertex_count(), false);
    std::vector<int> stack{p.bottom()};
    seen[p.bottom()] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : p.incident(v)) {
        if (e == cut || p.edge(e).lower != v) continue;
        int w = p.edge(e).upper;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (!seen[p.top()]) return cut;
  }
  return std::nullopt;
}

}  // namespace hibi
