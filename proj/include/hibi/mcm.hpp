#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hibi/class_group.hpp"
#include "hibi/semigroup.hpp"

namespace hibi {

enum class ChamberKind { empty, one_ray, open };

inline std::string kind_name(ChamberKind k) {
  switch (k) {
    case ChamberKind::empty:
      return "empty";
    case ChamberKind::one_ray:
      return "bullet";
    case ChamberKind::open:
      return "double-bullet";
  }
  return "";
}

/// Directions with the same set of negatively pairing divisors.
struct Chamber {
  std::vector<int> t_set;
  ChamberKind kind = ChamberKind::empty;
  Direction witness;
  int boundary_rays_included = 0;
  /// Angular extent, counter-clockwise: the first and last ray or sector boundary.
  Direction from;
  Direction to;
};

struct ChamberDecomposition {
  std::vector<Chamber> chambers;
  bool hypothesis_holds = true;
  std::string hypothesis_failure;
};

/// Divisors pairing negatively with a direction.
inline std::vector<int> negative_set(const Direction& l, const ClassGroupData& w) {
  std::vector<int> t;
  for (std::size_t i = 0; i < w.weight_of_divisor.size(); ++i)
    if (pairing(l, w.weight_of_divisor[i]) < 0) t.push_back(static_cast<int>(i));
  return t;
}

namespace detail {

inline Int cross2(const Vec& a, const Vec& b) { return sub(mul(a[0], b[1]), mul(a[1], b[0])); }

/// Angle order on Z^2 starting at the positive x-axis.
inline bool angle_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross2(a, b) > 0;
}

struct Piece {
  bool is_ray;
  Vec from, to;  // equal for rays
  Vec witness;
  std::vector<int> t;
};

}  // namespace detail

/// Splits the space of one-parameter subgroups into classes of equal negative set.
///
/// Pieces are listed counter-clockwise from the sector just after the positive
/// x-axis, with that axis (when it is a wall) last; cyclically adjacent pieces
/// with equal sets merge, and the class holding the first piece comes first.
inline ChamberDecomposition chamber_decomposition(const ClassGroupData& w) {
  ChamberDecomposition out;
  auto check = [&](const Chamber& c, std::size_t index) {
    std::size_t need = c.kind == ChamberKind::empty ? 2 : c.kind == ChamberKind::open ? 3 : 0;
    if (need && c.t_set.size() < need && out.hypothesis_holds) {
      out.hypothesis_holds = false;
      out.hypothesis_failure = "chamber " + std::to_string(index + 1) + " has |T| = " +
                               std::to_string(c.t_set.size()) + ", needs at least " + std::to_string(need);
    }
  };

  if (w.rank == 1) {
    for (Int s : {1, -1}) {
      Chamber c;
      c.witness = Direction{s};
      c.from = c.to = c.witness;
      c.t_set = negative_set(c.witness, w);
      c.kind = ChamberKind::empty;
      c.boundary_rays_included = 1;
      out.chambers.push_back(c);
    }
    for (std::size_t i = 0; i < out.chambers.size(); ++i) check(out.chambers[i], i);
    return out;
  }
  if (w.rank != 2) throw Error("chamber decomposition needs class group rank 1 or 2");

  std::vector<Vec> rays;
  for (const auto& b : w.weight_of_divisor) {
    if (b.is_zero()) continue;
    Vec perp = primitive({-b[1], b[0]});
    rays.push_back(perp);
    rays.push_back({-perp[0], -perp[1]});
  }
  std::sort(rays.begin(), rays.end(), detail::angle_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.empty()) throw Error("all weights vanish");

  auto sector_witness = [](const Vec& a, const Vec& b) -> Vec {
    if (detail::cross2(a, b) == 0) return {-a[1], a[0]};
    return primitive({add(a[0], b[0]), add(a[1], b[1])});
  };
  std::vector<detail::Piece> pieces;
  const std::size_t k = rays.size();
  const bool axis_is_wall = rays[0][1] == 0 && rays[0][0] > 0;
  auto push_sector = [&](const Vec& a, const Vec& b) { pieces.push_back({false, a, b, sector_witness(a, b), {}}); };
  auto push_ray = [&](const Vec& a) { pieces.push_back({true, a, a, a, {}}); };
  if (axis_is_wall) {
    for (std::size_t i = 0; i < k; ++i) {
      push_sector(rays[i], rays[(i + 1) % k]);
      push_ray(rays[(i + 1) % k]);
    }
  } else {
    push_sector(rays[k - 1], rays[0]);
    for (std::size_t i = 0; i < k; ++i) {
      push_ray(rays[i]);
      if (i + 1 < k) push_sector(rays[i], rays[i + 1]);
    }
  }
  for (auto& p : pieces) p.t = negative_set(Direction(p.witness), w);

  // Rotate so no class straddles the start of the list, then group.
  const std::size_t n = pieces.size();
  std::size_t start = 0;
  bool all_equal = std::all_of(pieces.begin(), pieces.end(), [&](const auto& p) { return p.t == pieces[0].t; });
  if (!all_equal)
    while (pieces[(start + n - 1) % n].t == pieces[start].t) start = (start + n - 1) % n;

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t i = (start + step) % n;
    if (groups.empty() || pieces[groups.back().back()].t != pieces[i].t)
      groups.push_back({i});
    else
      groups.back().push_back(i);
  }

  for (const auto& g : groups) {
    const auto& first = pieces[g.front()];
    const auto& last = pieces[g.back()];
    Chamber c;
    c.t_set = first.t;
    c.witness = Direction(first.witness);
    if (g.size() > 1) {
      // prefer an interior sector as witness
      for (std::size_t i : g)
        if (!pieces[i].is_ray) {
          c.witness = Direction(pieces[i].witness);
          break;
        }
    }
    c.from = Direction(first.from);
    c.to = Direction(last.to);
    if (g.size() == 1 && first.is_ray) {
      c.kind = ChamberKind::empty;
      c.boundary_rays_included = 1;
    } else {
      int rays_in = (first.is_ray ? 1 : 0) + (last.is_ray ? 1 : 0);
      if (all_equal) rays_in = 2;
      c.boundary_rays_included = rays_in;
      c.kind = rays_in == 2 ? ChamberKind::empty : rays_in == 1 ? ChamberKind::one_ray : ChamberKind::open;
    }
    out.chambers.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < out.chambers.size(); ++i) check(out.chambers[i], i);
  return out;
}

/// Characters chi with a solution supported negatively exactly off T are offset + semigroup.
struct NonMcmCone {
  Weight offset;
  std::vector<Weight> generators;
};

inline NonMcmCone non_mcm_cone(const Chamber& c, const ClassGroupData& w) {
  if (c.kind == ChamberKind::one_ray) throw Error("chambers with one boundary ray carry no obstruction");
  NonMcmCone out{Weight(Vec(w.rank, 0)), {}};
  for (std::size_t i = 0; i < w.weight_of_divisor.size(); ++i) {
    const auto& b = w.weight_of_divisor[i];
    if (std::binary_search(c.t_set.begin(), c.t_set.end(), static_cast<int>(i))) {
      out.generators.push_back(b);
    } else {
      out.offset -= b;
      out.generators.push_back(-b);
    }
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  return out;
}

/// Decides the MCM property of rank one modules for a fixed weight system.
class McmCriterion {
 public:
  explicit McmCriterion(const ClassGroupData& w) : rank_(w.rank) {
    if (rank_ == 0) return;
    if (rank_ == 1) {
      for (const auto& b : w.weight_of_divisor)
        if (b[0] < 0) beta_ = sub(beta_, b[0]);
      return;
    }
    decomposition_ = chamber_decomposition(w);
    if (!decomposition_.hypothesis_holds)
      throw Error("criterion does not apply: " + decomposition_.hypothesis_failure);
    for (const auto& c : decomposition_.chambers) {
      if (c.kind == ChamberKind::one_ray) continue;
      auto cone = non_mcm_cone(c, w);
      obstructions_.push_back({cone.offset, AffineSemigroup(cone.generators, 2)});
    }
  }

  bool is_mcm(const Weight& chi) const {
    if (rank_ == 0) return true;
    if (rank_ == 1) return -beta_ < chi[0] && chi[0] < beta_;
    return std::none_of(obstructions_.begin(), obstructions_.end(),
                        [&](const auto& o) { return o.second.contains(chi - o.first); });
  }

  const ChamberDecomposition& decomposition() const { return decomposition_; }

 private:
  int rank_;
  Int beta_ = 0;
  ChamberDecomposition decomposition_;
  std::vector<std::pair<Weight, AffineSemigroup>> obstructions_;
};

inline bool is_mcm(const Weight& chi, const ClassGroupData& w) { return McmCriterion(w).is_mcm(chi); }

/// Coordinate bounds [lo_k, hi_k] for region queries.
using Box = std::vector<std::pair<Int, Int>>;

inline std::vector<Weight> lattice_points(const Box& box) {
  std::vector<Weight> out;
  Weight z(Vec(box.size(), 0));
  auto walk = [&](auto&& self, std::size_t k) -> void {
    if (k == box.size()) {
      out.push_back(z);
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

/// MCM classes inside the box, lexicographically sorted.
inline std::vector<Weight> mcm_region(const ClassGroupData& w, const Box& box) {
  McmCriterion crit(w);
  std::vector<Weight> out;
  for (auto& z : lattice_points(box))
    if (crit.is_mcm(z)) out.push_back(std::move(z));
  return out;
}

}  // namespace hibi
