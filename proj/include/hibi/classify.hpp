#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hibi/integer.hpp"
#include "hibi/poset.hpp"

namespace hibi {

enum class Family { I, II, III, IV, V };
enum class Orientation { as_given, flipped };

inline std::string family_name(Family f) {
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  return names[static_cast<int>(f)];
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V})
    if (family_name(f) == s) return f;
  throw Error("unknown family '" + s + "', expected one of I II III IV V");
}

/// The shape of a poset whose class group has rank two.
///
/// Parameters by family: I (m,n); II and III (l,m,n); IV (m,n); V (n).
struct TypeParams {
  Family family = Family::I;
  std::vector<int> params;
  Orientation orientation = Orientation::as_given;

  int l() const { return params.size() == 3 ? params[0] : 0; }
  int m() const {
    if (params.size() == 3) return params[1];
    return params.size() == 2 ? params[0] : 0;
  }
  int n() const { return params.back(); }

  friend bool operator==(const TypeParams&, const TypeParams&) = default;
};

inline std::string describe(const TypeParams& t) {
  std::string s = "(" + family_name(t.family) + ")";
  const char* keys2[] = {"m", "n"};
  const char* keys3[] = {"l", "m", "n"};
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    std::string key = t.params.size() == 3 ? keys3[i] : t.params.size() == 2 ? keys2[i] : "n";
    s += " " + key + "=" + std::to_string(t.params[i]);
  }
  if (t.orientation == Orientation::flipped) s += " flipped";
  return s;
}

/// Throws unless the parameters are in the range the family is defined for.
inline void check_params(const TypeParams& t) {
  const auto& p = t.params;
  auto fail = [&](const std::string& why) { throw Error("parameters out of range for " + describe(t) + ": " + why); };
  std::size_t want = t.family == Family::V ? 1 : (t.family == Family::II || t.family == Family::III) ? 3 : 2;
  if (p.size() != want) fail("expected " + std::to_string(want) + " parameters");
  switch (t.family) {
    case Family::I:
      if (p[0] < 0 || p[1] < 1) fail("needs m >= 0, n >= 1");
      break;
    case Family::II:
      if (p[0] < 0 || p[1] < 1 || p[2] < 0) fail("needs l >= 0, m >= 1, n >= 0");
      break;
    case Family::III:
      if (p[0] < 0 || p[1] < 2 || p[2] < 0) fail("needs l >= 0, m >= 2, n >= 0");
      break;
    case Family::IV:
      if (p[0] < 1 || p[1] < 1) fail("needs m >= 1, n >= 1");
      break;
    case Family::V:
      if (p[0] < 0) fail("needs n >= 0");
      break;
  }
}

/// A weight with its multiplicity.
struct WeightCount {
  Weight weight;
  int count;
  friend bool operator==(const WeightCount&, const WeightCount&) = default;
};

/// The weight multiset of a family, in the basis given by edges a and b.
inline std::vector<WeightCount> expected_weight_table(const TypeParams& t) {
  check_params(t);
  const int l = t.l(), m = t.m(), n = t.n();
  switch (t.family) {
    case Family::I:
      return {{{1, 0}, m + n + 2}, {{0, 1}, n + 1}, {{-1, 0}, m + 1}, {{-1, -1}, n + 1}};
    case Family::II:
      return {{{1, 0}, l + m + 1}, {{0, 1}, m + n + 1}, {{-1, 0}, l + 1}, {{0, -1}, n + 1}, {{-1, -1}, m}};
    case Family::III:
      return {{{1, 0}, l + m + n + 2}, {{0, 1}, m}, {{-1, 0}, l + n + 2}, {{-1, -1}, m}};
    case Family::IV:
      return {{{1, 0}, m + 1}, {{-1, 0}, m + 1}, {{0, 1}, n + 1}, {{0, -1}, n + 1}};
    case Family::V:
      return {{{1, 0}, n + 2}, {{0, 1}, n + 2}, {{-1, -1}, n + 2}};
  }
  return {};
}

/// Sorted (weight, multiplicity) list of a weight sequence.
inline std::vector<WeightCount> tally(const std::vector<Weight>& ws) {
  std::map<Weight, int> counts;
  for (const auto& w : ws) ++counts[w];
  std::vector<WeightCount> out;
  for (const auto& [w, c] : counts) out.push_back({w, c});
  return out;
}

inline std::vector<WeightCount> sorted_table(std::vector<WeightCount> t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  return t;
}

/// A generated family member together with its two basis edges.
struct GeneratedPoset {
  std::string text;
  std::pair<std::string, std::string> edge_a;
  std::pair<std::string, std::string> edge_b;
};

namespace detail {

class PosetWriter {
 public:
  /// Adds a chain of `length` covers from `from` to `to`; empty names stand for the adjoined ends.
  /// Returns the names along the chain, ends included.
  std::vector<std::string> chain(const std::string& from, const std::string& to, int length,
                                 const std::string& prefix) {
    std::vector<std::string> names{from};
    for (int i = 1; i < length; ++i) {
      names.push_back(prefix + std::to_string(i));
      elements_.push_back(names.back());
    }
    names.push_back(to);
    for (std::size_t i = 0; i + 1 < names.size(); ++i)
      if (!names[i].empty() && !names[i + 1].empty()) covers_.emplace_back(names[i], names[i + 1]);
    return names;
  }
  void element(const std::string& e) { elements_.push_back(e); }

  std::string text() const {
    std::string s = "elements:";
    for (const auto& e : elements_) s += " " + e;
    s += "\n";
    for (const auto& [a, b] : covers_) s += "cover: " + a + " < " + b + "\n";
    return s;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<std::string, std::string>> covers_;
};

inline std::pair<std::string, std::string> named(const std::string& a, const std::string& b) {
  return {a.empty() ? std::string(bottom_name) : a, b.empty() ? std::string(top_name) : b};
}

}  // namespace detail

/// Poset file for a family member.
inline GeneratedPoset generate(const TypeParams& t) {
  check_params(t);
  const int l = t.l(), m = t.m(), n = t.n();
  detail::PosetWriter w;
  GeneratedPoset g;
  const std::string lo, hi;  // adjoined ends
  switch (t.family) {
    case Family::I: {
      auto left = w.chain(lo, hi, m + n + 2, "a");
      w.chain(lo, "x", m + 1, "b");
      w.element("x");
      w.chain("x", hi, n + 1, "c");
      auto right = w.chain("x", hi, n + 1, "d");
      g.edge_a = detail::named(left[0], left[1]);
      g.edge_b = detail::named(right[n], right[n + 1]);
      break;
    }
    case Family::II: {
      w.chain(lo, "v", l + 1, "f");
      w.element("v");
      auto to_w = w.chain(lo, "w", l + m + 1, "g");
      w.element("w");
      w.chain("v", "w", m, "h");
      auto up = w.chain("v", hi, m + n + 1, "k");
      w.chain("w", hi, n + 1, "q");
      g.edge_a = detail::named(to_w[0], to_w[1]);
      g.edge_b = detail::named(up[m + n], up[m + n + 1]);
      break;
    }
    case Family::III: {
      auto left = w.chain(lo, hi, l + m + n + 2, "a");
      w.chain(lo, "v", l + 1, "f");
      w.element("v");
      w.element("w");
      w.chain("v", "w", m, "h");
      auto branch = w.chain("v", "w", m, "k");
      w.chain("w", hi, n + 1, "q");
      g.edge_a = detail::named(left[0], left[1]);
      g.edge_b = detail::named(branch[m - 1], branch[m]);
      break;
    }
    case Family::IV: {
      auto low = w.chain(lo, "v", m + 1, "a");
      w.chain(lo, "v", m + 1, "b");
      w.element("v");
      w.chain("v", hi, n + 1, "c");
      auto high = w.chain("v", hi, n + 1, "d");
      g.edge_a = detail::named(low[0], low[1]);
      g.edge_b = detail::named(high[n], high[n + 1]);
      break;
    }
    case Family::V: {
      auto first = w.chain(lo, hi, n + 2, "a");
      auto second = w.chain(lo, hi, n + 2, "b");
      w.chain(lo, hi, n + 2, "c");
      g.edge_a = detail::named(first[0], first[1]);
      g.edge_b = detail::named(second[0], second[1]);
      break;
    }
  }
  g.text = w.text();
  return g;
}

/// Poset file for the Segre product of two chains of `m + 1` covers each.
inline std::string segre_two_chains(int m) {
  if (m < 1) throw Error("needs m >= 1");
  detail::PosetWriter w;
  w.chain("", "", m + 1, "a");
  w.chain("", "", m + 1, "b");
  return w.text();
}

/// A maximal monotone path between special vertices.
struct Segment {
  int lower;
  int upper;
  int length;
  int first_edge;
  int last_edge;
};

/// Segments between the adjoined ends and vertices of degree at least three.
inline std::vector<Segment> segments(const PosetHat& p) {
  auto special = [&](int v) { return v == p.bottom() || v == p.top() || p.degree(v) >= 3; };
  std::vector<Segment> out;
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (!special(v)) continue;
    for (int e : p.incident(v)) {
      if (p.edge(e).lower != v) continue;
      int cur = p.edge(e).upper, last = e, len = 1;
      while (!special(cur)) {
        auto ups = p.upper_covers(cur);
        last = *p.edge_between(cur, ups.front());
        cur = ups.front();
        ++len;
      }
      out.push_back({v, cur, len, e, last});
    }
  }
  return out;
}

enum class Rejection { none, disconnected, rank_not_two, polynomial_extension, low_degree, not_gorenstein, unrecognized };

struct Classification {
  std::optional<TypeParams> type;
  Rejection rejection = Rejection::none;
  std::string reason;
  std::optional<int> extension_edge;
};

namespace detail {

inline Classification reject(Rejection r, std::string why) { return {std::nullopt, r, std::move(why), {}}; }

/// Smaller of a parameter triple and its mirror; records which was taken.
inline TypeParams canonical(Family f, std::vector<int> p, Orientation o) {
  std::vector<int> mirror(p.rbegin(), p.rend());
  if (mirror < p) return {f, mirror, o == Orientation::as_given ? Orientation::flipped : Orientation::as_given};
  return {f, p, o};
}

}  // namespace detail

/// Matches the Hasse diagram against the five rank-two families.
///
/// Families II, III and IV are closed under flipping, and report the smaller of
/// the two parameter lists; family I reports the orientation it was found in.
inline Classification classify(const PosetHat& p) {
  if (!is_connected(p)) return detail::reject(Rejection::disconnected, "Hasse graph is disconnected");
  if (p.edge_count() - p.vertex_count() != 1)
    return detail::reject(Rejection::rank_not_two,
                          "class group rank " + std::to_string(p.edge_count() - p.vertex_count() + 1) + " != 2");
  if (auto e = polynomial_extension_edge(p)) {
    auto c = detail::reject(Rejection::polynomial_extension,
                            "edge " + edge_label(*e) + " lies on every maximal chain (polynomial extension)");
    c.extension_edge = e;
    return c;
  }
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.degree(v) < 2) return detail::reject(Rejection::low_degree, "vertex " + p.name(v) + " has degree 1");
  if (!is_pure(p).pure) return detail::reject(Rejection::not_gorenstein, "poset is not pure (not Gorenstein)");

  const int bot = p.bottom(), top = p.top();
  std::vector<int> inner3, inner4;
  for (int v = 1; v < top; ++v) {
    if (p.degree(v) == 3) inner3.push_back(v);
    if (p.degree(v) == 4) inner4.push_back(v);
  }
  auto segs = segments(p);
  auto between = [&](int a, int b) {
    std::vector<int> lens;
    for (const auto& s : segs)
      if (s.lower == a && s.upper == b) lens.push_back(s.length);
    std::sort(lens.begin(), lens.end());
    return lens;
  };
  auto ups = [&](int v) { return static_cast<int>(p.upper_covers(v).size()); };
  auto unrecognized = detail::reject(Rejection::unrecognized, "degree profile matches none of the five families");

  Classification out;
  if (p.degree(bot) == 3 && p.degree(top) == 3) {
    auto lens = between(bot, top);
    if (lens.size() != 3 || lens[0] != lens[2]) return unrecognized;
    out.type = TypeParams{Family::V, {lens[0] - 2}, Orientation::as_given};
  } else if (inner3.size() == 1 && (p.degree(top) == 3 || p.degree(bot) == 3)) {
    const int x = inner3[0];
    const bool given = p.degree(top) == 3;
    auto low = given ? between(bot, x) : between(x, top);
    auto high = given ? between(x, top) : between(bot, x);
    auto side = between(bot, top);
    if (low.size() != 1 || high.size() != 2 || side.size() != 1 || high[0] != high[1]) return unrecognized;
    int m = low[0] - 1, n = high[0] - 1;
    if (side[0] != m + n + 2) return unrecognized;
    out.type = TypeParams{Family::I, {m, n}, given ? Orientation::as_given : Orientation::flipped};
  } else if (inner3.size() == 2) {
    int v = inner3[0], w = inner3[1];
    if (ups(v) != 2) std::swap(v, w);
    if (ups(v) != 2 || ups(w) != 1) return unrecognized;
    auto cross = between(v, w);
    auto below_v = between(bot, v), above_w = between(w, top);
    if (below_v.size() != 1 || above_w.size() != 1) return unrecognized;
    int l = below_v[0] - 1, n = above_w[0] - 1;
    if (cross.size() == 1) {
      int m = cross[0];
      auto below_w = between(bot, w), above_v = between(v, top);
      if (below_w != std::vector<int>{l + m + 1} || above_v != std::vector<int>{m + n + 1}) return unrecognized;
      out.type = detail::canonical(Family::II, {l, m, n}, Orientation::as_given);
    } else if (cross.size() == 2 && cross[0] == cross[1]) {
      int m = cross[0];
      if (between(bot, top) != std::vector<int>{l + m + n + 2}) return unrecognized;
      out.type = detail::canonical(Family::III, {l, m, n}, Orientation::as_given);
    } else {
      return unrecognized;
    }
  } else if (inner4.size() == 1) {
    int v = inner4[0];
    auto low = between(bot, v), high = between(v, top);
    if (low.size() != 2 || high.size() != 2 || low[0] != low[1] || high[0] != high[1]) return unrecognized;
    out.type = detail::canonical(Family::IV, {low[0] - 1, high[0] - 1}, Orientation::as_given);
  } else {
    return unrecognized;
  }
  check_params(*out.type);
  return out;
}

}  // namespace hibi
