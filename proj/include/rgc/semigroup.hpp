#pragma once

// Semigroups of highest weights L-generated by a list of L-dominant
// weights: every highest weight of a tensor monomial in the generators.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"
#include "rgc/polytope.hpp"
#include "rgc/representation.hpp"
#include "rgc/weyl.hpp"

namespace rgc {

struct SemigroupOptions {
  int degree_cap = 8;
  /// Covector positive on every generator and zero on the roots of the
  /// subsystem. When set, weights of grade above max_grade are not explored.
  std::optional<ZVec> grading;
  std::optional<Z> max_grade;
  std::size_t max_elements = 2'000'000;
};

struct HighestWeightSemigroup {
  std::vector<Weight> generators;
  std::map<Weight, int> explored;  // weight -> smallest total degree found
  int degree_cap = 0;
  std::optional<ZVec> grading;
  std::optional<Z> max_grade;
  /// Every element of grade <= max_grade was reached within the degree cap.
  bool complete = false;
  bool budget_exhausted = false;
  std::size_t tensor_products = 0;

  bool contains(const Weight& w) const { return w.is_zero() || explored.count(w) > 0; }
  std::optional<int> degree(const Weight& w) const {
    auto it = explored.find(w);
    if (it == explored.end()) return std::nullopt;
    return it->second;
  }
  /// Whether absence of w is proven: w lies within the exhaustively explored grades.
  bool certifies_absence(const Weight& w) const {
    return complete && grading && max_grade && dot(*grading, to_zvec(w)) <= *max_grade && !contains(w);
  }
};

inline Z grade_of(const ZVec& grading, const Weight& w) { return dot(grading, to_zvec(w)); }

/// A grading for the subsystem: zero on its roots and positive on gens.
/// `seed` must already be positive on every generator; it is projected onto
/// the functionals vanishing on the subsystem roots (the W_sub average).
inline ZVec subsystem_grading(const Subsystem& sub, const QVec& seed, const std::vector<Weight>& gens) {
  const RootSystem& rs = sub.root_system();
  const auto& s = sub.simple();
  QVec f = seed;
  if (!s.empty()) {
    // f' = f - sum c_j alpha_j^vee with f'(alpha_k) = 0 for k in S.
    QMat a(s.size(), QVec(s.size()));
    QVec b(s.size());
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (std::size_t c = 0; c < s.size(); ++c) a[r][c] = rs.cartan[s[c]][s[r]];
      b[r] = dot(f, to_qvec(rs.simple_root(s[r])));
    }
    QMat inv = *inverse(a);
    QVec c = mat_vec(inv, b);
    for (std::size_t k = 0; k < s.size(); ++k) f[s[k]] -= c[k];
  }
  ZVec g = primitive_integer(f);
  for (const auto& w : gens)
    if (grade_of(g, w) <= 0)
      throw DomainError("subsystem_grading: functional is not positive on generator " + to_string(w));
  return g;
}

inline HighestWeightSemigroup generate_semigroup(const Subsystem& sub, const std::vector<Weight>& gens,
                                                 const SemigroupOptions& opt = {}) {
  if (opt.degree_cap < 1) throw DomainError("generate_semigroup: degree cap must be at least 1");
  HighestWeightSemigroup out;
  out.degree_cap = opt.degree_cap;
  out.grading = opt.grading;
  out.max_grade = opt.max_grade;
  for (const auto& g : gens) {
    detail::require_dominant(sub, g, "generate_semigroup");
    if (!g.is_zero()) out.generators.push_back(g);
  }
  std::sort(out.generators.begin(), out.generators.end());
  out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
  const bool graded = opt.grading && opt.max_grade;
  if (graded)
    for (const auto& g : out.generators)
      if (grade_of(*opt.grading, g) <= 0)
        throw DomainError("generate_semigroup: grading is not positive on " + to_string(g));
  std::vector<std::map<Weight, Multiplicity>> systems;
  for (const auto& g : out.generators) systems.push_back(weight_system(sub, g).entries);

  auto within = [&](const Weight& w) { return !graded || grade_of(*opt.grading, w) <= *opt.max_grade; };
  std::vector<Weight> frontier;
  for (const auto& g : out.generators)
    if (within(g) && out.explored.emplace(g, 1).second) frontier.push_back(g);
  bool truncated = false;
  for (int deg = 1; !frontier.empty(); ++deg) {
    if (deg == opt.degree_cap) {
      // Anything left to expand means the cap cut the search short.
      for (const auto& nu : frontier)
        for (const auto& g : out.generators)
          if (within(nu + g)) truncated = true;
      break;
    }
    std::vector<Weight> next;
    for (const auto& nu : frontier) {
      for (std::size_t gi = 0; gi < out.generators.size(); ++gi) {
        if (!within(nu + out.generators[gi])) continue;  // every component has the grade of nu + g
        ++out.tensor_products;
        for (const auto& [w, m] : klimyk(sub, nu, systems[gi])) {
          (void)m;
          if (out.explored.emplace(w, deg + 1).second) next.push_back(w);
        }
        if (out.explored.size() > opt.max_elements) {
          out.budget_exhausted = true;
          return out;
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  out.complete = graded && !truncated;
  return out;
}

/// Smallest n <= cap with V(n mu) inside V^{tensor n}, V the sum of V(lambda_i).
inline std::optional<int> moment_witness(const RootSystem& rs, const std::vector<Weight>& lambdas, const Weight& mu,
                                         int cap = 8) {
  if (!rs.is_dominant(mu)) throw DomainError("moment_witness: " + to_string(mu) + " is not dominant");
  WeightPolytope p = polytope_from_orbits(rs, lambdas);
  ZMat hom;
  for (const auto& v : p.vertices) hom.push_back(homogenize(v));
  if (!cone_from_generators(hom, rs.dim() + 1).contains(homogenize(mu)))
    throw DomainError("moment_witness: " + to_string(mu) + " lies outside the weight polytope");
  Subsystem g = Subsystem::full(rs);
  std::vector<std::map<Weight, Multiplicity>> systems;
  for (const auto& l : lambdas) systems.push_back(weight_system(g, l).entries);
  std::set<Weight> level(lambdas.begin(), lambdas.end());
  for (int n = 1; n <= cap; ++n) {
    if (level.count(n * mu)) return n;
    if (n == cap) break;
    std::set<Weight> next;
    for (const auto& nu : level)
      for (const auto& sys : systems)
        for (const auto& [w, m] : klimyk(g, nu, sys)) next.insert(w);
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace rgc
