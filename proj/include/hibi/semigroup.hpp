#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hibi/integer.hpp"

namespace hibi {

/// Membership in the additive monoid generated by finitely many vectors of Z or Z^2.
class AffineSemigroup {
 public:
  explicit AffineSemigroup(std::vector<Weight> generators, std::size_t rank) : rank_(rank) {
    if (rank > 2) throw Error("semigroup membership is implemented for rank 1 and 2 only");
    for (auto& g : generators) {
      if (g.size() != rank) throw Error("generator of the wrong length");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (rank == 2) classify_plane();
  }

  bool contains(const Weight& t) const {
    if (t.size() != rank_) throw Error("target of the wrong length");
    if (gens_.empty()) return t.is_zero();
    if (rank_ == 0) return true;
    if (rank_ == 1) return contains_line(t[0]);
    switch (shape_) {
      case Shape::plane:
        return in_lattice(t);
      case Shape::half_plane:
        return in_half_plane(t);
      case Shape::pointed:
        return in_pointed(t);
    }
    return false;
  }

 private:
  enum class Shape { plane, half_plane, pointed };

  static Int cross(const Vec& a, const Vec& b) { return sub(mul(a[0], b[1]), mul(a[1], b[0])); }
  static int half(const Vec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; }

  bool contains_line(Int t) const {
    bool pos = false, neg = false;
    Int g = 0;
    for (const auto& w : gens_) {
      (w[0] > 0 ? pos : neg) = true;
      g = std::gcd(g, w[0]);
    }
    if (pos && neg) return t % g == 0;
    Int sign = pos ? 1 : -1;
    Int goal = sign * t;
    if (goal < 0) return false;
    std::vector<bool> reach(goal + 1, false);
    reach[0] = true;
    for (Int v = 1; v <= goal; ++v)
      for (const auto& w : gens_) {
        Int step = sign * w[0];
        if (step <= v && reach[v - step]) {
          reach[v] = true;
          break;
        }
      }
    return reach[goal];
  }

  void classify_plane() {
    if (gens_.empty()) return;
    std::vector<Vec> dirs;
    for (const auto& g : gens_) dirs.push_back(primitive(g.coords));
    std::sort(dirs.begin(), dirs.end(), [](const Vec& a, const Vec& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return cross(a, b) > 0;
    });
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

    if (dirs.size() == 1) {
      shape_ = Shape::pointed;
      first_ = last_ = dirs[0];
      return;
    }
    shape_ = Shape::plane;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const Vec& a = dirs[i];
      const Vec& b = dirs[(i + 1) % dirs.size()];
      Int c = cross(a, b);
      if (c < 0) {
        shape_ = Shape::pointed;
        first_ = b;
        last_ = a;
        return;
      }
      if (c == 0) {
        // a and b are opposite: a gap of exactly half a turn
        shape_ = Shape::half_plane;
        line_ = a;
      }
    }
    if (shape_ == Shape::plane) lattice_ = hermite_rows(as_rows());
    if (shape_ == Shape::half_plane) prepare_half_plane();
  }

  Mat as_rows() const {
    Mat m;
    for (const auto& g : gens_) m.push_back(g.coords);
    return m;
  }

  bool in_lattice(const Weight& t) const {
    Vec rest = t.coords;
    for (const auto& row : lattice_) {
      std::size_t c = 0;
      while (row[c] == 0) ++c;
      if (rest[c] % row[c] != 0) return false;
      Int k = rest[c] / row[c];
      for (std::size_t j = 0; j < rest.size(); ++j) rest[j] = sub(rest[j], mul(k, row[j]));
    }
    return std::all_of(rest.begin(), rest.end(), [](Int x) { return x == 0; });
  }

  // Coordinates: along the line (alpha) and across it (gamma >= 0 on the generators).
  void prepare_half_plane() {
    auto [g, x, y] = ext_gcd(line_[0], line_[1]);
    across_ = {-y, x};
    side_ = 1;
    line_step_ = 0;
    for (const auto& w : gens_) {
      Int gamma = cross(line_, w.coords);
      if (gamma == 0) {
        line_step_ = std::gcd(line_step_, cross(w.coords, across_));
      } else {
        side_ = gamma > 0 ? 1 : -1;
      }
    }
    for (const auto& w : gens_) {
      Int gamma = side_ * cross(line_, w.coords);
      if (gamma != 0) off_line_.push_back({gamma, cross(w.coords, across_)});
    }
  }

  bool in_half_plane(const Weight& t) const {
    Int gamma = side_ * cross(line_, t.coords);
    Int alpha = cross(t.coords, across_);
    if (gamma < 0) return false;
    const Int m = line_step_;
    auto mod = [m](Int a) { return ((a % m) + m) % m; };
    std::vector<std::vector<bool>> reach(gamma + 1, std::vector<bool>(m, false));
    reach[0][0] = true;
    for (Int c = 0; c <= gamma; ++c)
      for (Int r = 0; r < m; ++r) {
        if (!reach[c][r]) continue;
        for (auto [dg, da] : off_line_)
          if (c + dg <= gamma) reach[c + dg][mod(r + da)] = true;
      }
    return reach[gamma][mod(alpha)];
  }

  // Inside the cone from first_ counter-clockwise to last_.
  bool in_cone(const Vec& t) const {
    if (first_ == last_) return cross(first_, t) == 0 && dot(first_, t) >= 0;
    return cross(first_, t) >= 0 && cross(t, last_) >= 0;
  }

  bool in_pointed(const Weight& t) const {
    std::set<Vec> dead;
    auto reach = [&](auto&& self, const Vec& v) -> bool {
      if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; })) return true;
      if (!in_cone(v) || dead.count(v)) return false;
      for (const auto& g : gens_) {
        Vec w{sub(v[0], g[0]), sub(v[1], g[1])};
        if (self(self, w)) return true;
      }
      dead.insert(v);
      return false;
    };
    return reach(reach, t.coords);
  }

  std::size_t rank_;
  std::vector<Weight> gens_;
  Shape shape_ = Shape::plane;
  Mat lattice_;
  Vec first_, last_;
  Vec line_, across_;
  Int side_ = 1, line_step_ = 0;
  std::vector<std::pair<Int, Int>> off_line_;
};

/// Whether target = sum c_g g with non-negative integers c_g.
inline bool semigroup_member(const Weight& target, const std::vector<Weight>& generators) {
  return AffineSemigroup(generators, target.size()).contains(target);
}

}  // namespace hibi
