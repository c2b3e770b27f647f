#pragma once

// Brute-force oracles and corpus access shared by the test binaries.

#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hibi/hibi.hpp"

namespace oracle {

using namespace hibi;

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::filesystem::path corpus_dir() { return HIBI_CORPUS_DIR; }

inline PosetHat corpus_poset(const std::string& name) { return parse_poset(read_file(corpus_dir() / name)); }
inline SigmaMatrix corpus_cone(const std::string& name) { return parse_cone(read_file(corpus_dir() / name)); }

/// Every .poset file in the corpus, sorted by name.
inline std::vector<std::string> corpus_posets() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".poset") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Pure posets without a polynomial-extension edge.
inline std::vector<std::string> gorenstein_posets() {
  std::vector<std::string> out;
  for (const auto& f : corpus_posets()) {
    auto p = corpus_poset(f);
    if (is_pure(p).pure && !polynomial_extension_edge(p)) out.push_back(f);
  }
  return out;
}

/// Breadth-first closure of 0 under adding generators, inside a box.
///
/// If t is a sum of generators, the summands can be reordered so every partial
/// sum stays within (dimension) * max|g| of the segment [0, t] in the sup norm
/// (Steinitz). The box below is at least that large, so the search is exact.
inline bool bfs_member(const Weight& target, const std::vector<Weight>& gens) {
  const std::size_t r = target.size();
  Int gmax = 0, tmax = 0;
  for (const auto& g : gens)
    for (Int x : g.coords) gmax = std::max(gmax, x < 0 ? -x : x);
  for (Int x : target.coords) tmax = std::max(tmax, x < 0 ? -x : x);
  const Int radius = tmax + static_cast<Int>(r) * gmax + 1;
  auto inside = [&](const Weight& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [&](Int x) { return -radius <= x && x <= radius; });
  };
  std::set<Weight> seen{Weight(Vec(r, 0))};
  std::deque<Weight> queue{Weight(Vec(r, 0))};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    if (cur == target) return true;
    for (const auto& g : gens) {
      Weight next = cur + g;
      if (inside(next) && seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

/// Classes of ceil(sigma(x)) for x with fractional parts on a grid of step 1/(d+1).
///
/// For Hibi rows x_p - x_q, x_p, -x_q the ceiling only depends on the integer
/// parts and on how the fractional parts compare, and this grid realizes every
/// weak order of d fractional parts, zero included.
inline std::set<Weight> ceiling_grid_conic(const SigmaMatrix& s, const ClassGroupData& cg) {
  const std::size_t d = s.dimension();
  const Int steps = static_cast<Int>(d) + 1;
  std::set<Weight> out;
  Vec k(d, 0);
  for (;;) {
    Weight z(Vec(cg.rank, 0));
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      Int num = 0;
      for (std::size_t j = 0; j < d; ++j) num += s.rows[i][j] * k[j];
      Int a = ceil_div(num, steps);
      z += a * cg.weight_of_divisor[i];
    }
    out.insert(z);
    std::size_t j = 0;
    while (j < d && ++k[j] == steps) k[j++] = 0;
    if (j == d) break;
  }
  return out;
}

/// Edge sets of induced cycles, by testing every subset of edges.
inline std::set<std::vector<int>> induced_cycles(const PosetHat& p) {
  const int m = p.edge_count();
  if (m > 22) throw std::runtime_error("too many edges for the subset oracle");
  std::set<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    std::vector<int> deg(p.vertex_count(), 0);
    std::vector<int> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        edges.push_back(e);
        ++deg[p.edge(e).lower];
        ++deg[p.edge(e).upper];
      }
    if (edges.size() < 3) continue;
    if (std::any_of(deg.begin(), deg.end(), [](int x) { return x != 0 && x != 2; })) continue;
    // connected?
    std::vector<int> comp(p.vertex_count(), -1);
    int start = p.edge(edges[0]).lower;
    std::vector<int> stack{start};
    comp[start] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : edges) {
        int a = p.edge(e).lower, b = p.edge(e).upper;
        int u = a == v ? b : b == v ? a : -1;
        if (u >= 0 && comp[u] < 0) comp[u] = 0, stack.push_back(u);
      }
    }
    bool connected = true;
    for (int v = 0; v < p.vertex_count(); ++v)
      if (deg[v] && comp[v] < 0) connected = false;
    if (!connected) continue;
    bool chord = false;
    for (int e = 0; e < m && !chord; ++e)
      if (!(mask >> e & 1) && deg[p.edge(e).lower] && deg[p.edge(e).upper]) chord = true;
    if (!chord) out.insert(edges);
  }
  return out;
}

struct ReplayResult {
  bool ok = true;
  std::string failure;
};

/// Re-checks a certificate with its own Koszul expansion over index subsets.
inline ReplayResult replay(const GldimCertificate& cert, const std::vector<Weight>& L, const ClassGroupData& w) {
  std::set<Weight> base(L.begin(), L.end());
  std::set<Weight> known = base;
  auto fail = [](std::string why) { return ReplayResult{false, std::move(why)}; };
  for (const auto& step : cert.steps) {
    const auto& lam = step.lambda;
    Int v = pairing(lam, step.chi);
    for (const auto& nu : L)
      if (!(v < pairing(lam, nu))) return fail(to_string(step.chi) + " is not separated by " + to_string(lam));
    if (known.count(step.chi)) return fail(to_string(step.chi) + " proven twice");
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < w.weight_of_divisor.size(); ++i)
      if (pairing(lam, w.weight_of_divisor[i]) > 0) positive.push_back(i);
    if (positive.empty() || positive.size() > 24) return fail("direction " + to_string(lam) + " unusable");
    std::set<Weight> terms;
    for (unsigned long mask = 1; mask < (1ul << positive.size()); ++mask) {
      Weight t = step.chi;
      for (std::size_t k = 0; k < positive.size(); ++k)
        if (mask >> k & 1) t += w.weight_of_divisor[positive[k]];
      terms.insert(t);
    }
    std::set<Weight> deps(step.deps.begin(), step.deps.end());
    if (deps != terms) return fail("dependency list of " + to_string(step.chi) + " is not the Koszul complex");
    for (const auto& t : terms)
      if (!known.count(t)) return fail(to_string(step.chi) + " uses unproven " + to_string(t));
    known.insert(step.chi);
  }
  for (const auto& g : cert.goal)
    if (!known.count(g)) return fail("goal " + to_string(g) + " not reached");
  return {};
}

/// The weight table as a class group in the family basis.
inline ClassGroupData table_weights(const TypeParams& t) {
  ClassGroupData w{2, {}, {}, {}};
  for (const auto& [b, n] : expected_weight_table(t))
    for (int i = 0; i < n; ++i) w.weight_of_divisor.push_back(b);
  return w;
}

/// Conic region of each family read off the closed forms, family basis.
inline bool family_conic(const TypeParams& t, const Weight& z) {
  const Int l = t.l(), m = t.m(), n = t.n(), c1 = z[0], c2 = z[1];
  auto within = [](Int v, Int r) { return -r <= v && v <= r; };
  switch (t.family) {
    case Family::I:
      return within(c1, m + n + 1) && within(c2, n) && within(c1 - c2, m + n + 1);
    case Family::II:
      return within(c1, l + m) && within(c2, m + n) && within(c1 - c2, l + m + n + 1);
    case Family::III:
      return within(c2, m - 1) && within(c1, l + m + n + 1) && within(c1 - c2, l + m + n + 1);
    case Family::IV:
      return within(c1, m) && within(c2, n);
    case Family::V:
      return within(c1, n + 1) && within(c2, n + 1) && within(c1 - c2, n + 1);
  }
  return false;
}

/// MCM region of each family from the closed forms, family basis.
inline bool family_mcm(const TypeParams& t, const Weight& z) {
  const Int l = t.l(), m = t.m(), n = t.n(), c1 = z[0], c2 = z[1];
  /// hexagon through (s+h,h), (s,0), (s,-h) and their negatives, taken in that order
  auto hexagon = [c1, c2](Int s, Int h) {
    return std::abs(c2) <= h && -s + std::min<Int>(c2, 0) <= c1 && c1 <= s + std::max<Int>(c2, 0);
  };
  switch (t.family) {
    case Family::I:
      return hexagon(m + n + 1, n);
    case Family::II:
      return std::abs(c1) <= l + m && std::abs(c2) <= m + n;
    case Family::III:
      return hexagon(l + m + n + 1, m - 1);
    case Family::IV:
      return std::abs(c1) <= m && std::abs(c2) <= n;
    case Family::V: {
      const Int k = n + 1;
      auto corner = [k](Int a, Int b) { return 0 <= a && a <= k && k <= b && b <= k + a; };
      return (std::abs(c1) <= k && std::abs(c2) <= k) || corner(c1, c2) || corner(c2, c1) || corner(-c1, -c2) ||
             corner(-c2, -c1);
    }
  }
  return false;
}

/// The parameter sets exercised throughout.
inline std::vector<TypeParams> family_grid() {
  return {{Family::I, {0, 1}},     {Family::I, {1, 1}},      {Family::I, {2, 3}},  {Family::II, {1, 1, 1}},
          {Family::III, {0, 2, 0}}, {Family::III, {1, 2, 1}}, {Family::IV, {1, 1}}, {Family::IV, {2, 3}},
          {Family::V, {0}},         {Family::V, {1}},         {Family::V, {2}}};
}

}  // namespace oracle
