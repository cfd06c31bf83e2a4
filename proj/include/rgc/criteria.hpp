#pragma once

// Local criteria at a closed orbit Y_0 (dominant vertex lambda_0 of P):
// normality through the slice semigroup, smoothness through the four
// root/weight conditions, torus-closure normality and the minuscule shortcut.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgc/compactification.hpp"
#include "rgc/cone.hpp"
#include "rgc/errors.hpp"
#include "rgc/polytope.hpp"
#include "rgc/semigroup.hpp"
#include "rgc/weyl.hpp"

namespace rgc {

enum class Verdict { Normal, NotNormal, Smooth, NotSmooth, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Normal: return "Normal";
    case Verdict::NotNormal: return "NotNormal";
    case Verdict::Smooth: return "Smooth";
    case Verdict::NotSmooth: return "NotSmooth";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

inline std::optional<Verdict> verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Normal, Verdict::NotNormal, Verdict::Smooth, Verdict::NotSmooth, Verdict::Unknown})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

struct CriterionReport {
  Weight vertex;
  Verdict verdict = Verdict::Unknown;
  // Normality witness: `missing` is not in S, `multiple` * missing is.
  std::optional<Weight> missing;
  std::optional<int> multiple;
  std::optional<int> multiple_degree;
  bool absence_certified = false;
  std::vector<Weight> all_missing;
  // Smoothness: first violated condition (1..4).
  std::optional<int> failed_condition;
  std::vector<std::vector<Weight>> partition;  // pi^(k)_1..pi^(k)_{n_k} when condition (3) holds
  int degree_cap = 0;
  std::size_t hilbert_basis_size = 0;
  std::string method;
  std::optional<std::string> shortcut;

  bool operator==(const CriterionReport&) const = default;
};

struct NormalityOptions {
  int degree_cap = 8;
  int max_multiple = 3;
  bool use_branching = false;  // generate from all L-highest weights instead of the short list
  std::size_t max_elements = 2'000'000;
};

namespace detail {

inline std::vector<Weight> lattice_points_as_weights(const std::vector<QVec>& pts) {
  std::vector<Weight> out;
  for (const auto& p : pts) {
    Weight w(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].get_den() != 1) throw ConsistencyError("non-integral lattice point in weight coordinates");
      w[i] = static_cast<std::int32_t>(p[i].get_num().get_si());
    }
    out.push_back(w);
  }
  return out;
}

inline Lattice model_lattice(const Model& m) {
  QMat rows;
  for (const auto& b : m.lattice().basis) rows.push_back(to_qvec(b));
  return Lattice::from_rows(rows);
}

}  // namespace detail

/// Minimal generators of the saturated semigroup X intersected with Sigma_0.
inline std::vector<Weight> saturated_generators(const Model& m, const Weight& l0) {
  require_vertex(m, l0, "saturated_generators");
  RationalCone sigma = cone_at_vertex(m.root_system(), m.polytope(), l0);
  return detail::lattice_points_as_weights(hilbert_basis(sigma, detail::model_lattice(m)));
}

/// The slice grading at l0: zero on the Levi roots, positive on the vertex cone.
inline ZVec slice_grading(const Model& m, const Weight& l0, const std::vector<Weight>& gens) {
  const ChamberVertex& cv = require_vertex(m, l0, "slice_grading");
  return subsystem_grading(levi_subsystem(m.root_system(), levi_datum(m.root_system(), l0)), cv.certificate, gens);
}

inline CriterionReport normality_at(const Model& m, const Weight& l0, const NormalityOptions& opt = {}) {
  require_vertex(m, l0, "normality_at");
  const RootSystem& rs = m.root_system();
  CriterionReport r;
  r.vertex = l0;
  r.degree_cap = opt.degree_cap;
  LeviDatum levi = levi_datum(rs, l0);
  Subsystem sub = levi_subsystem(rs, levi);
  std::vector<Weight> hb = saturated_generators(m, l0);
  r.hilbert_basis_size = hb.size();

  std::vector<Weight> diffs;
  for (const auto& l : m.highest())
    if (l != l0) diffs.push_back(l - l0);
  ZMat diff_rows;
  for (const auto& d : diffs) diff_rows.push_back(to_zvec(d));
  if (!diff_rows.empty() && std::all_of(hb.begin(), hb.end(), [&](const Weight& h) {
        return in_semigroup(to_zvec(h), diff_rows);
      })) {
    r.verdict = Verdict::Normal;
    r.method = "differences of highest weights generate the saturated semigroup";
    return r;
  }

  std::vector<Weight> gens;
  if (opt.use_branching) {
    gens = local_slice(m, l0).slice_weights;
  } else {
    gens = lgens_generators(rs, m.highest(), l0, levi);
  }
  ZVec grading = slice_grading(m, l0, gens);
  ZMat gen_rows;
  for (const auto& g : gens) gen_rows.push_back(to_zvec(g));

  // Elements already sums of generators need no tensor search.
  std::vector<Weight> open;
  for (const auto& h : hb)
    if (!in_semigroup(to_zvec(h), gen_rows)) open.push_back(h);
  r.method = "tensor search";
  if (open.empty()) {
    r.verdict = Verdict::Normal;
    return r;
  }
  Z top = 0;
  for (const auto& h : open) top = std::max(top, grade_of(grading, h));
  SemigroupOptions so;
  so.degree_cap = opt.degree_cap;
  so.grading = grading;
  so.max_grade = top;
  so.max_elements = opt.max_elements;
  HighestWeightSemigroup s = generate_semigroup(sub, gens, so);
  for (const auto& h : open)
    if (!s.contains(h)) r.all_missing.push_back(h);
  if (r.all_missing.empty()) {
    r.verdict = Verdict::Normal;
    return r;
  }
  std::stable_sort(r.all_missing.begin(), r.all_missing.end(), [&](const Weight& a, const Weight& b) {
    return grade_of(grading, a) < grade_of(grading, b);
  });
  for (int k = 2; k <= opt.max_multiple; ++k) {
    Z need = 0;
    for (const auto& h : r.all_missing) need = std::max(need, Z(k * grade_of(grading, h)));
    so.max_grade = need;
    HighestWeightSemigroup big = generate_semigroup(sub, gens, so);
    for (const auto& h : r.all_missing) {
      if (auto d = big.degree(k * h)) {
        r.verdict = Verdict::NotNormal;
        r.missing = h;
        r.multiple = k;
        r.multiple_degree = *d;
        r.absence_certified = big.certifies_absence(h);
        return r;
      }
    }
  }
  r.verdict = Verdict::Unknown;
  r.missing = r.all_missing.front();
  r.absence_certified = s.certifies_absence(*r.missing);
  return r;
}

/// Normality of the closure of T in the slice: saturation of the semigroup
/// generated by mu - lambda_0 over the weights mu of V, in the lattice X.
inline ToricNormality torus_closure_details(const Model& m, const Weight& l0) {
  require_vertex(m, l0, "torus_closure_normal");
  std::vector<ZVec> weights;
  for (const auto& w : m.weights_of_v()) weights.push_back(to_zvec(w));
  return toric_orbit_normal(weights, detail::model_lattice(m), {to_zvec(l0)});
}

inline bool torus_closure_normal(const Model& m, const Weight& l0) { return torus_closure_details(m, l0).normal; }

namespace detail {

/// Coordinates of the primitive lattice vectors on the rays of sigma, or
/// nullopt if they do not form a basis of the lattice.
inline std::optional<std::vector<Weight>> basis_rays(const Model& m, const RationalCone& sigma) {
  const CharacterLattice& lat = m.lattice();
  if (!sigma.pointed() || sigma.rays.size() != lat.rank() || sigma.dimension() != lat.rank()) return std::nullopt;
  QMat coords;
  std::vector<Weight> out;
  for (const auto& ray : sigma.rays) {
    QMat rows;
    for (const auto& b : lat.basis) rows.push_back(to_qvec(b));
    auto c = solve_combination(rows, to_qvec(ray));
    if (!c) return std::nullopt;
    ZVec prim = primitive_integer(*c);
    ZVec v(ray.size(), Z(0));
    for (std::size_t i = 0; i < prim.size(); ++i)
      for (std::size_t t = 0; t < v.size(); ++t) v[t] += prim[i] * lat.basis[i][t];
    coords.push_back(to_qvec(prim));
    Weight w(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) w[t] = static_cast<std::int32_t>(v[t].get_si());
    out.push_back(w);
  }
  Q det = determinant(coords);
  if (det != 1 && det != -1) return std::nullopt;
  return out;
}

struct PartitionSearch {
  bool found3 = false;
  bool found4 = false;
  std::vector<std::vector<Weight>> partition;
};

inline PartitionSearch search_partitions(const RootSystem& rs, const LeviDatum& levi, const std::vector<Weight>& basis,
                                         const std::set<Weight>& allowed_first) {
  PartitionSearch res;
  const auto& pil = levi.simple_root_indices;
  std::map<std::size_t, std::size_t> attached;  // simple root -> basis index
  std::vector<std::size_t> free;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<std::size_t> ones;
    bool bad = false;
    for (auto j : pil) {
      if (basis[b][j] == 1) ones.push_back(j);
      else if (basis[b][j] != 0) bad = true;
    }
    if (bad || ones.size() > 1) return res;
    if (ones.empty()) free.push_back(b);
    else if (!attached.emplace(ones[0], b).second) return res;
  }
  if (attached.size() != pil.size()) return res;
  const std::size_t q = levi.components.size();
  if (free.size() < q) return res;

  // Orientation bits times injective choices of terminals among the free vectors.
  std::vector<std::size_t> perm(free.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::size_t>> tried;
  do {
    std::vector<std::size_t> term(perm.begin(), perm.begin() + static_cast<long>(q));
    if (!tried.insert(term).second) continue;
    for (std::uint64_t orient = 0; orient < (std::uint64_t{1} << q); ++orient) {
      std::vector<std::vector<Weight>> groups;
      std::vector<bool> used(free.size(), false);
      bool skip = false;
      for (std::size_t k = 0; k < q; ++k) {
        auto nodes = levi.components[k].nodes;
        if (orient >> k & 1) {
          if (nodes.size() == 1) {
            skip = true;
            break;
          }
          std::reverse(nodes.begin(), nodes.end());
        }
        std::vector<Weight> g;
        for (auto j : nodes) g.push_back(basis[attached[j]]);
        g.push_back(basis[free[term[k]]]);
        used[term[k]] = true;
        groups.push_back(std::move(g));
      }
      if (skip) continue;
      for (std::size_t f = 0; f < free.size(); ++f)
        if (!used[f]) groups.push_back({basis[free[f]]});
      bool ok = true;
      for (const auto& g : groups) {
        const long nk = static_cast<long>(g.size());
        for (long j = 1; j <= nk && ok; ++j) {
          QVec x(rs.dim());
          for (std::size_t t = 0; t < rs.dim(); ++t)
            x[t] = Q(nk * g[static_cast<std::size_t>(j - 1)][t] - j * g.back()[t]);
          for (const auto& h : groups)
            if (rs.inner_product(x, to_qvec(h.back())) != 0) ok = false;
        }
      }
      if (!ok) continue;
      if (!res.found3) res.partition = groups;
      res.found3 = true;
      bool firsts = std::all_of(groups.begin(), groups.end(), [&](const auto& g) { return allowed_first.count(g.front()); });
      if (firsts) {
        res.found4 = true;
        res.partition = groups;
        return res;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

}  // namespace detail

struct SmoothnessOptions {
  bool regular_fast_path = true;
};

inline CriterionReport smoothness_at(const Model& m, const Weight& l0, const SmoothnessOptions& opt = {}) {
  require_vertex(m, l0, "smoothness_at");
  const RootSystem& rs = m.root_system();
  CriterionReport r;
  r.vertex = l0;
  LeviDatum levi = levi_datum(rs, l0);
  auto fail = [&](int c) {
    r.verdict = Verdict::NotSmooth;
    r.failed_condition = c;
    return r;
  };
  const long center = static_cast<long>(m.lattice().rank()) - static_cast<long>(levi.simple_root_indices.size());
  RationalCone sigma = cone_at_vertex(rs, m.polytope(), l0);

  if (opt.regular_fast_path && levi.simple_root_indices.empty()) {
    r.method = "regular weight";
    auto basis = detail::basis_rays(m, sigma);
    if (!basis) return fail(2);
    for (const auto& p : *basis)
      if (!m.weights_of_v().count(l0 + p)) return fail(4);
    r.verdict = Verdict::Smooth;
    for (const auto& p : *basis) r.partition.push_back({p});
    return r;
  }
  r.method = "conditions (1)-(4)";
  for (const auto& c : levi.components)
    if (c.series != Series::A) return fail(1);
  if (static_cast<long>(levi.components.size()) > center) return fail(1);
  auto basis = detail::basis_rays(m, sigma);
  if (!basis) return fail(2);
  auto gens = lgens_generators(rs, m.highest(), l0, levi);
  auto search = detail::search_partitions(rs, levi, *basis, std::set<Weight>(gens.begin(), gens.end()));
  r.partition = search.partition;
  if (!search.found3) return fail(3);
  if (!search.found4) return fail(4);
  r.verdict = Verdict::Smooth;
  return r;
}

/// Normal verdicts from the minuscule cases, split over simple factors:
/// the slice is L-generated by one weight whose restriction to every simple
/// factor of L is minuscule or trivial and which is nontrivial on the center.
inline std::optional<std::string> known_normal_shortcuts(const Model& m, const Weight& l0) {
  require_vertex(m, l0, "known_normal_shortcuts");
  const RootSystem& rs = m.root_system();
  LeviDatum levi = levi_datum(rs, l0);
  auto gens = lgens_generators(rs, m.highest(), l0, levi);
  if (gens.size() != 1) return std::nullopt;
  const Weight& g = gens[0];
  Subsystem sub = levi_subsystem(rs, levi);
  for (std::size_t k = 0; k < sub.num_positive(); ++k)
    if (coroot_pairing(sub.positive_root(k), g) > 1) return std::nullopt;
  QMat roots;
  for (auto j : levi.simple_root_indices) roots.push_back(to_qvec(rs.simple_root(j)));
  QMat with = roots;
  with.push_back(to_qvec(g));
  if (rank(with, rs.dim()) == roots.size()) return std::nullopt;  // trivial on the center
  // Each factor is named with the simple roots on which g pairs to 1.
  std::string name;
  for (const auto& c : levi.components) {
    std::string nodes;
    for (auto j : c.nodes)
      if (g[j] != 0) nodes += (nodes.empty() ? "" : ",") + std::string("a") + std::to_string(j + 1);
    if (!name.empty()) name += " x ";
    name += std::string(1, static_cast<char>(c.series)) + std::to_string(c.rank);
    name += nodes.empty() ? "(trivial)" : "(" + nodes + ")";
  }
  if (name.empty()) name = "torus";
  return "minuscule slice: " + name;
}

}  // namespace rgc
