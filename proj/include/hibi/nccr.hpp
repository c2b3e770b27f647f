#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hibi/class_group.hpp"
#include "hibi/classify.hpp"
#include "hibi/divisorial.hpp"
#include "hibi/mcm.hpp"
#include "hibi/rank1.hpp"

namespace hibi {

/// Characters whose modules of covariants are summed to form the candidate.
struct CharacterSet {
  std::vector<Weight> chars;
  std::string provenance;

  bool contains(const Weight& w) const { return std::binary_search(chars.begin(), chars.end(), w); }
};

/// The integer box of characters for a family member.
inline CharacterSet build_L(const TypeParams& t) {
  check_params(t);
  const int l = t.l(), m = t.m(), n = t.n();
  Int c1 = 0, c2 = 0;
  switch (t.family) {
    case Family::I:
      c1 = m + n + 1, c2 = n;
      break;
    case Family::II:
      c1 = l + m, c2 = m + n;
      break;
    case Family::III:
      c1 = l + m + n + 1, c2 = m - 1;
      break;
    case Family::IV:
      c1 = m, c2 = n;
      break;
    case Family::V:
      c1 = n + 1, c2 = n + 1;
      break;
  }
  CharacterSet out{lattice_points({{0, c1}, {0, c2}}), describe(t)};
  return out;
}

/// Every pairwise difference must be MCM; reports the first that is not.
struct EndReport {
  bool ok = true;
  std::size_t checks = 0;
  std::optional<Weight> from, to;
};

inline EndReport end_is_mcm(const CharacterSet& L, const ClassGroupData& w) {
  McmCriterion crit(w);
  EndReport r;
  for (const auto& a : L.chars)
    for (const auto& b : L.chars) {
      ++r.checks;
      if (!crit.is_mcm(b - a)) {
        r.ok = false;
        r.from = a;
        r.to = b;
        return r;
      }
    }
  return r;
}

/// <lambda, chi> < <lambda, nu> for every nu in L.
inline bool separated(const Weight& chi, const CharacterSet& L, const Direction& lambda) {
  Int v = pairing(lambda, chi);
  return std::all_of(L.chars.begin(), L.chars.end(), [&](const Weight& nu) { return v < pairing(lambda, nu); });
}

namespace detail {

/// Sums of nonempty sub-multisets of the weights pairing positively with lambda.
inline std::vector<Weight> koszul_shifts(const Direction& lambda, const ClassGroupData& w) {
  std::map<Weight, int> positive;
  for (const auto& b : w.weight_of_divisor)
    if (pairing(lambda, b) > 0) ++positive[b];
  if (positive.empty()) throw Error("no weight pairs positively with direction " + to_string(lambda));
  std::set<Weight> shifts{Weight(Vec(w.rank, 0))};
  for (const auto& [b, mult] : positive) {
    std::set<Weight> next;
    for (const auto& s : shifts) {
      Weight cur = s;
      for (int c = 0; c <= mult; ++c) {
        next.insert(cur);
        cur += b;
      }
    }
    shifts = std::move(next);
  }
  shifts.erase(Weight(Vec(w.rank, 0)));
  return {shifts.begin(), shifts.end()};
}

}  // namespace detail

/// chi plus every sum of distinct weights pairing positively with lambda, at least one summand.
inline std::vector<Weight> koszul_terms(const Weight& chi, const Direction& lambda, const ClassGroupData& w) {
  auto shifts = detail::koszul_shifts(lambda, w);
  for (auto& s : shifts) s += chi;
  return shifts;
}

struct CertificateStep {
  Weight chi;
  Direction lambda;
  std::vector<Weight> deps;
};

/// Replayable proof that every goal character has finite projective dimension.
struct GldimCertificate {
  std::vector<CertificateStep> steps;
  std::vector<Weight> goal;
};

struct GldimOutcome {
  bool covered = false;
  GldimCertificate certificate;
  std::vector<Weight> uncovered;
  std::vector<std::string> reasons;
};

/// Axis and diagonal directions, then the inward edge normals of the hull of L.
inline std::vector<Direction> default_directions(const CharacterSet& L, int rank) {
  if (rank == 1) return {Direction{1}, Direction{-1}};
  std::vector<Direction> dirs{{0, 1}, {1, 0}, {0, -1}, {-1, 0}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  std::vector<Vec> pts;
  for (const auto& c : L.chars) pts.push_back(c.coords);
  std::sort(pts.begin(), pts.end());
  if (pts.size() >= 2) {
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Vec> hull;
    for (int pass = 0; pass < 2; ++pass) {
      std::size_t base = hull.size();
      for (const auto& p : pts) {
        while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vec& a = hull[i];
      const Vec& b = hull[(i + 1) % hull.size()];
      Direction normal(primitive({-(b[1] - a[1]), b[0] - a[0]}));
      if (!normal.is_zero() && std::find(dirs.begin(), dirs.end(), normal) == dirs.end()) dirs.push_back(normal);
    }
  }
  return dirs;
}

/// Admits characters by separation and Koszul induction until a fixpoint.
///
/// Works in the bounding box of goal and L widened by the largest Koszul shift.
/// Admission order within a pass: Chebyshev distance to the box of L, then
/// coordinates. The certificate keeps only what the goal needs.
inline GldimOutcome certify_gldim(const CharacterSet& L, const ClassGroupData& w, const std::vector<Weight>& goal,
                                  std::vector<Direction> directions = {}) {
  const int r = w.rank;
  if (directions.empty()) directions = default_directions(L, r);

  std::vector<std::vector<Weight>> shifts;
  std::vector<Direction> usable;
  Int reach = 0;
  for (const auto& d : directions) {
    bool any = std::any_of(w.weight_of_divisor.begin(), w.weight_of_divisor.end(),
                           [&](const Weight& b) { return pairing(d, b) > 0; });
    if (!any) continue;
    usable.push_back(d);
    shifts.push_back(detail::koszul_shifts(d, w));
    for (const auto& s : shifts.back())
      for (Int x : s.coords) reach = std::max(reach, x < 0 ? -x : x);
  }

  Box lbox(r, {0, 0}), window;
  for (int k = 0; k < r; ++k) {
    Int lo = L.chars.front()[k], hi = lo;
    for (const auto& c : L.chars) lo = std::min(lo, c[k]), hi = std::max(hi, c[k]);
    lbox[k] = {lo, hi};
    Int wlo = lo, whi = hi;
    for (const auto& g : goal) wlo = std::min(wlo, g[k]), whi = std::max(whi, g[k]);
    window.push_back({wlo - reach, whi + reach});
  }
  auto distance = [&](const Weight& c) {
    Int d = 0;
    for (int k = 0; k < r; ++k) d = std::max({d, lbox[k].first - c[k], c[k] - lbox[k].second});
    return d;
  };
  std::vector<Weight> order;
  for (auto& c : lattice_points(window))
    if (!L.contains(c)) order.push_back(std::move(c));
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return distance(a) < distance(b); });

  std::vector<Int> lmin(usable.size());
  for (std::size_t j = 0; j < usable.size(); ++j) {
    lmin[j] = pairing(usable[j], L.chars.front());
    for (const auto& c : L.chars) lmin[j] = std::min(lmin[j], pairing(usable[j], c));
  }

  std::map<Weight, std::size_t> admitted;  // character -> admission index
  auto known = [&](const Weight& c) { return L.contains(c) || admitted.count(c); };
  auto goal_left = [&] {
    return std::count_if(goal.begin(), goal.end(), [&](const Weight& g) { return !known(g); });
  };
  for (bool changed = true; changed && goal_left() > 0;) {
    changed = false;
    for (const auto& c : order) {
      if (admitted.count(c)) continue;
      for (std::size_t j = 0; j < usable.size(); ++j) {
        if (pairing(usable[j], c) >= lmin[j]) continue;
        bool ready = std::all_of(shifts[j].begin(), shifts[j].end(), [&](const Weight& s) { return known(c + s); });
        if (ready) {
          admitted.emplace(c, admitted.size());
          changed = true;
          break;
        }
      }
    }
  }

  GldimOutcome out;
  out.certificate.goal = goal;
  for (const auto& g : goal)
    if (!known(g)) out.uncovered.push_back(g);
  if (!out.uncovered.empty()) {
    for (const auto& g : out.uncovered) {
      std::string why = to_string(g) + ":";
      for (std::size_t j = 0; j < usable.size(); ++j) {
        why += " " + to_string(usable[j]);
        if (pairing(usable[j], g) >= lmin[j]) {
          why += " not separating;";
          continue;
        }
        for (const auto& s : shifts[j])
          if (!known(g + s)) {
            why += " needs " + to_string(g + s) + ";";
            break;
          }
      }
      out.reasons.push_back(why);
    }
    return out;
  }
  out.covered = true;

  std::set<Weight> in_goal(goal.begin(), goal.end());
  std::map<std::size_t, CertificateStep> steps;
  std::vector<Weight> pending;
  for (const auto& g : goal)
    if (!L.contains(g)) pending.push_back(g);
  std::set<Weight> done;
  while (!pending.empty()) {
    Weight c = pending.back();
    pending.pop_back();
    if (!done.insert(c).second) continue;
    const std::size_t idx = admitted.at(c);
    std::optional<std::size_t> best;
    std::size_t best_extra = 0;
    for (std::size_t j = 0; j < usable.size(); ++j) {
      if (pairing(usable[j], c) >= lmin[j]) continue;
      std::size_t extra = 0;
      bool valid = true;
      for (const auto& s : shifts[j]) {
        Weight t = c + s;
        if (L.contains(t)) continue;
        auto it = admitted.find(t);
        if (it == admitted.end() || it->second >= idx) {
          valid = false;
          break;
        }
        if (!in_goal.count(t)) ++extra;
      }
      if (valid && (!best || extra < best_extra)) best = j, best_extra = extra;
    }
    CertificateStep step{c, usable[*best], {}};
    for (const auto& s : shifts[*best]) {
      step.deps.push_back(c + s);
      if (!L.contains(c + s)) pending.push_back(c + s);
    }
    steps.emplace(idx, std::move(step));
  }
  for (auto& [idx, step] : steps) out.certificate.steps.push_back(std::move(step));
  return out;
}

/// A unimodular matrix U with U * (computed weights) = expected weights as multisets.
inline std::optional<Mat> align_weights(const std::vector<Weight>& computed, const std::vector<WeightCount>& expected) {
  auto target = sorted_table(expected);
  auto have = tally(computed);
  std::optional<std::pair<Weight, Weight>> basis;
  for (std::size_t i = 0; i < have.size() && !basis; ++i)
    for (std::size_t j = i + 1; j < have.size(); ++j) {
      const auto& a = have[i].weight;
      const auto& b = have[j].weight;
      if (sub(mul(a[0], b[1]), mul(a[1], b[0])) != 0) {
        basis = {a, b};
        break;
      }
    }
  if (!basis) return std::nullopt;
  const auto& [a, b] = *basis;
  for (const auto& ea : target)
    for (const auto& eb : target) {
      if (ea.weight == eb.weight) continue;
      // U * src = dst, i.e. src^T * U^T = dst^T.
      Mat src_t{{a[0], a[1]}, {b[0], b[1]}};
      Mat dst_t{{ea.weight[0], ea.weight[1]}, {eb.weight[0], eb.weight[1]}};
      auto sol = solve_rational(src_t, dst_t);
      if (!sol) continue;
      Mat u(2, Vec(2));
      bool integral = true;
      for (int i = 0; i < 2 && integral; ++i)
        for (int j = 0; j < 2; ++j) {
          auto v = as_integer((*sol)[j][i]);
          if (!v) {
            integral = false;
            break;
          }
          u[i][j] = *v;
        }
      if (!integral) continue;
      Int det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
      if (det != 1 && det != -1) continue;
      std::vector<Weight> mapped;
      for (const auto& w : computed) mapped.push_back(Weight(mat_times(u, w.coords)));
      if (tally(mapped) == target) return u;
    }
  return std::nullopt;
}

enum class Verdict {
  verified,
  not_gorenstein,
  polynomial_extension,
  unsupported_rank,
  unclassified,
  criterion_inapplicable,
  end_not_mcm,
  gldim_incomplete
};

inline std::string verdict_name(Verdict v) {
  static const char* names[] = {"verified",        "not-gorenstein",         "polynomial-extension",
                                "unsupported-rank", "unclassified",           "criterion-inapplicable",
                                "end-not-mcm",      "gldim-incomplete"};
  return names[static_cast<int>(v)];
}

/// Everything the pipeline produced on the way to its verdict.
struct NccrReport {
  Verdict verdict = Verdict::unclassified;
  std::string message;
  int rank = 0;
  std::optional<TypeParams> type;
  std::optional<int> extension_edge;
  std::vector<Weight> weights;
  std::optional<Mat> basis_change;
  CharacterSet L;
  std::vector<Weight> conic;
  EndReport end;
  std::optional<GldimOutcome> gldim;
};

namespace detail {

inline NccrReport finish(NccrReport r, const ClassGroupData& w) {
  try {
    r.end = end_is_mcm(r.L, w);
  } catch (const Error& e) {
    r.verdict = Verdict::criterion_inapplicable;
    r.message = e.what();
    return r;
  }
  if (!r.end.ok) {
    r.verdict = Verdict::end_not_mcm;
    r.message = "difference " + to_string(*r.end.to - *r.end.from) + " is not MCM";
    return r;
  }
  std::vector<Weight> goal;
  for (const auto& c : r.conic)
    if (!r.L.contains(c)) goal.push_back(c);
  r.gldim = certify_gldim(r.L, w, goal);
  if (!r.gldim->covered) {
    r.verdict = Verdict::gldim_incomplete;
    r.message = std::to_string(r.gldim->uncovered.size()) + " conic classes not covered";
    return r;
  }
  r.verdict = Verdict::verified;
  r.message = "splitting NCCR verified on all conic classes";
  return r;
}

}  // namespace detail

/// classify, weights, L, End MCM check, global dimension certificate.
inline NccrReport verify_nccr(const PosetHat& p) {
  NccrReport r;
  if (!is_pure(p).pure) {
    r.verdict = Verdict::not_gorenstein;
    r.message = "poset is not pure: non-Gorenstein Hibi rings do not admit an NCCR";
    return r;
  }
  if (auto e = polynomial_extension_edge(p)) {
    r.verdict = Verdict::polynomial_extension;
    r.extension_edge = e;
    r.message = "edge " + edge_label(*e) + " lies on every maximal chain (polynomial extension)";
    return r;
  }
  auto tree = spanning_tree(p);
  auto cg = class_group(p, tree);
  r.rank = cg.rank;
  auto native_conic = enumerate_conic(conic_polytope(chordless_circuits(p), tree, cg));

  if (cg.rank == 1) {
    auto w1 = Rank1Weights::from(cg);
    auto win = base_window(w1);
    r.weights = cg.weight_of_divisor;
    for (Int c : win.classes()) r.L.chars.push_back(Weight{c});
    r.L.provenance = "window " + to_string(win);
    r.conic = native_conic;
    return detail::finish(std::move(r), cg);
  }
  if (cg.rank != 2) {
    r.verdict = Verdict::unsupported_rank;
    r.message = "class group rank " + std::to_string(cg.rank) + " is outside ranks 1 and 2";
    return r;
  }
  auto cls = classify(p);
  if (!cls.type) {
    r.verdict = Verdict::unclassified;
    r.message = cls.reason;
    return r;
  }
  r.type = cls.type;
  auto u = align_weights(cg.weight_of_divisor, expected_weight_table(*cls.type));
  if (!u) {
    r.verdict = Verdict::unclassified;
    r.message = "weights do not match the table of " + describe(*cls.type);
    return r;
  }
  r.basis_change = u;
  ClassGroupData aligned = cg;
  for (auto& b : aligned.weight_of_divisor) b = Weight(mat_times(*u, b.coords));
  r.weights = aligned.weight_of_divisor;
  for (const auto& c : native_conic) r.conic.push_back(Weight(mat_times(*u, c.coords)));
  std::sort(r.conic.begin(), r.conic.end());
  r.L = build_L(*cls.type);
  return detail::finish(std::move(r), aligned);
}

}  // namespace hibi
