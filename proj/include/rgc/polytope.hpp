#pragma once

// Weight polytopes P = conv(W.lambda_0, ..., W.lambda_m), their faces
// meeting the dominant chamber, tangent cones, and toric normality tests.
// Everything lives in fundamental-weight coordinates; linear functionals are
// written in the dual (coroot) coordinates and paired by the plain dot
// product.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgc/cone.hpp"
#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"
#include "rgc/representation.hpp"
#include "rgc/root_system.hpp"
#include "rgc/weyl.hpp"

namespace rgc {

inline constexpr std::size_t kMaxGenericPoints = 50'000;

struct ChamberVertex {
  Weight weight;
  /// A strictly antidominant functional whose minimum over P is attained
  /// exactly at this vertex.
  QVec certificate;
};

struct WeightPolytope {
  std::vector<Weight> highest;  // input order
  std::vector<Weight> points;   // union of the orbits, sorted
  std::vector<Weight> vertices; // sorted
  std::size_t ambient = 0;

  bool single_weight() const { return highest.size() == 1; }
  bool is_vertex(const Weight& w) const { return std::binary_search(vertices.begin(), vertices.end(), w); }
};

inline ZVec homogenize(const Weight& w) {
  ZVec v = to_zvec(w);
  v.push_back(Z(1));
  return v;
}

/// The chamber C = { x : <x, alpha_i^vee> >= 0 } in weight coordinates.
inline RationalCone chamber_cone(const RootSystem& rs) {
  ZMat ineqs;
  for (std::size_t i = 0; i < rs.ss_rank; ++i) {
    ZVec e(rs.dim(), Z(0));
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  return cone_from_inequalities(ineqs, {}, rs.dim());
}

inline WeightPolytope polytope_from_orbits(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  if (lambdas.empty()) throw DomainError("polytope_from_orbits: empty weight list");
  for (const auto& l : lambdas) {
    if (l.size() != rs.dim()) throw DomainError("polytope_from_orbits: weight " + to_string(l) + " has wrong length");
    if (!rs.is_dominant(l)) throw DomainError("polytope_from_orbits: weight " + to_string(l) + " is not dominant");
  }
  WeightPolytope p;
  p.highest = lambdas;
  p.ambient = rs.dim();
  std::set<Weight> pts;
  std::map<Weight, std::vector<Weight>> orbits;
  for (const auto& l : lambdas) {
    auto o = weyl_orbit(rs, l);
    pts.insert(o.begin(), o.end());
    orbits.emplace(l, std::move(o));
    if (pts.size() > kMaxGenericPoints && lambdas.size() > 1)
      throw CapabilityError("polytope_from_orbits: more than " + std::to_string(kMaxGenericPoints) +
                            " orbit points for a multi-weight input");
  }
  p.points.assign(pts.begin(), pts.end());
  if (lambdas.size() == 1) {
    p.vertices = p.points;
    return p;
  }
  ZMat hom;
  for (const auto& w : p.points) hom.push_back(homogenize(w));
  RationalCone k = cone_from_generators(hom, rs.dim() + 1);
  std::set<ZVec> rays(k.rays.begin(), k.rays.end());
  for (const auto& [l, o] : orbits) {
    if (!rays.count(make_primitive(homogenize(l)))) continue;
    p.vertices.insert(p.vertices.end(), o.begin(), o.end());
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  return p;
}

/// Tangent cone of P at one of its vertices: generated by the differences
/// p - v. For a single highest weight and a dominant vertex the edges
/// -beta (beta > 0, <v, beta^vee> > 0) are used instead of the whole orbit.
inline RationalCone vertex_tangent_cone(const RootSystem& rs, const WeightPolytope& p, const Weight& v) {
  if (!p.is_vertex(v)) throw DomainError("vertex_tangent_cone: " + to_string(v) + " is not a vertex of P");
  ZMat gens;
  if (p.single_weight() && rs.is_dominant(v)) {
    for (const auto& beta : rs.positive_roots)
      if (coroot_pairing(beta, v) > 0) gens.push_back(to_zvec(-beta.weight));
  } else {
    for (const auto& q : p.vertices)
      if (q != v) gens.push_back(to_zvec(q - v));
  }
  return cone_from_generators(gens, rs.dim());
}

inline std::vector<ChamberVertex> vertices_in_chamber(const RootSystem& rs, const WeightPolytope& p) {
  std::vector<ChamberVertex> out;
  std::set<Weight> done;
  for (const auto& l : p.highest) {
    if (!p.is_vertex(l) || !done.insert(l).second) continue;
    // Normal cone at l intersected with the dominant coweights.
    RationalCone t = vertex_tangent_cone(rs, p, l);
    RationalCone normal = dual_cone(t);  // f >= 0 on T: f is minimized at l
    ZMat ineqs = normal.facets, eqs = normal.equations;
    for (std::size_t j = 0; j < rs.ss_rank; ++j) {
      ZVec a = to_zvec(rs.simple_root(j));
      for (auto& x : a) x = -x;  // f . alpha_j <= 0: antidominant
      ineqs.push_back(std::move(a));
    }
    RationalCone k = cone_from_inequalities(ineqs, eqs, rs.dim());
    ZVec f = interior_point(k);
    QVec cert = to_qvec(f);
    for (std::size_t j = 0; j < rs.ss_rank; ++j)
      if (dot(f, to_zvec(rs.simple_root(j))) >= 0)
        throw ConsistencyError("vertices_in_chamber: no strictly antidominant certificate at " + to_string(l));
    const Z base = dot(f, to_zvec(l));
    for (const auto& q : p.vertices)
      if (q != l && dot(f, to_zvec(q)) <= base)
        throw ConsistencyError("vertices_in_chamber: certificate does not isolate " + to_string(l));
    out.push_back({l, std::move(cert)});
  }
  std::sort(out.begin(), out.end(), [](const ChamberVertex& a, const ChamberVertex& b) { return a.weight > b.weight; });
  return out;
}

// ---------------------------------------------------------------------------
// Faces

struct Face {
  std::vector<Weight> vertices;        // sorted
  std::vector<Weight> highest;         // input highest weights lying in the face
  std::optional<std::vector<std::size_t>> pi_gamma;  // set when built from the simple-root lemma
  std::vector<std::size_t> direction_roots;  // simple roots lying in |Gamma|
  std::vector<std::size_t> colors;           // simple roots orthogonal to <Gamma>
  QVec support;                              // minimal exactly on the face
  QMat direction;                            // |Gamma|
  QMat span;                                 // <Gamma>
  QMat norm_space;                           // ||Gamma|| = |Gamma| + (<Gamma>^perp within the root span)
  ZMat direction_lattice;                    // |Gamma|_Z
  ZMat span_lattice;                         // <Gamma>_Z

  std::size_t dimension() const { return direction.size(); }
  bool operator==(const Face& o) const { return vertices == o.vertices; }
};

namespace detail {

inline QMat basis_of(const std::vector<QVec>& rows, std::size_t n) {
  if (rows.empty()) return {};
  return row_space(rows, n);
}

inline bool in_span(const QMat& basis, const QVec& v, std::size_t n) {
  if (is_zero(v)) return true;
  QMat m = basis;
  m.push_back(v);
  return rank(m, n) == basis.size();
}

/// { x : (x, v)_W = 0 for all v in rows } where (,)_W is the invariant product.
inline QMat orthogonal_complement(const RootSystem& rs, const QMat& rows) {
  const std::size_t n = rs.dim();
  if (rows.empty()) {
    QMat id(n, QVec(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  QMat lin;
  for (const auto& v : rows) lin.push_back(mat_vec(rs.inner, v));
  return nullspace(lin, n);
}

/// Lattice points of the root lattice inside the subspace spanned by rows.
inline ZMat root_lattice_in(const RootSystem& rs, const QMat& rows) {
  const std::size_t n = rs.dim(), l = rs.ss_rank;
  if (rows.empty() || l == 0) return {};
  QMat normals = nullspace(rows, n);  // x in span iff x . y = 0 for y in normals
  ZMat a;
  for (std::size_t j = 0; j < l; ++j) a.push_back(to_zvec(rs.simple_root(j)));
  ZMat coeffs;
  if (normals.empty()) {
    coeffs = detail::identity_basis(l);
  } else {
    ZMat mt;  // k x l, entries (alpha_j . y_k), scaled to integers per row
    for (const auto& y : normals) {
      QVec row(l);
      for (std::size_t j = 0; j < l; ++j) row[j] = dot(to_qvec(a[j]), y);
      mt.push_back(primitive_integer(row));
    }
    coeffs = integer_kernel(mt, l);
  }
  ZMat out;
  for (const auto& c : coeffs) {
    ZVec v(n, Z(0));
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t t = 0; t < n; ++t) v[t] += c[j] * a[j][t];
    out.push_back(std::move(v));
  }
  return out.empty() ? out : hermite_basis(out, n);
}

inline Face make_face(const RootSystem& rs, const std::vector<Weight>& highest, std::vector<Weight> verts) {
  const std::size_t n = rs.dim();
  std::sort(verts.begin(), verts.end());
  Face f;
  f.vertices = std::move(verts);
  for (const auto& h : highest)
    if (std::binary_search(f.vertices.begin(), f.vertices.end(), h)) f.highest.push_back(h);
  std::vector<QVec> diffs, spans;
  for (const auto& v : f.vertices) {
    diffs.push_back(to_qvec(v - f.vertices.front()));
    spans.push_back(to_qvec(v));
  }
  f.direction = basis_of(diffs, n);
  f.span = basis_of(spans, n);
  for (std::size_t j = 0; j < rs.ss_rank; ++j) {
    QVec a = to_qvec(rs.simple_root(j));
    if (in_span(f.direction, a, n)) f.direction_roots.push_back(j);
    bool orth = true;
    for (const auto& v : f.span)
      if (rs.inner_product(a, v) != 0) orth = false;
    if (orth) f.colors.push_back(j);
  }
  QMat perp = orthogonal_complement(rs, f.span);
  {
    // Intersect with the root span, where the torus coordinates vanish.
    std::vector<QVec> in_root_span;
    if (rs.torus_rank == 0) {
      in_root_span = perp;
    } else if (!perp.empty()) {
      QMat sys;  // rows indexed by torus coordinate, columns by perp vectors
      for (std::size_t t = rs.ss_rank; t < n; ++t) {
        QVec row(perp.size());
        for (std::size_t k = 0; k < perp.size(); ++k) row[k] = perp[k][t];
        sys.push_back(row);
      }
      for (const auto& c : nullspace(sys, perp.size())) {
        QVec x(n, Q(0));
        for (std::size_t k = 0; k < perp.size(); ++k)
          for (std::size_t t = 0; t < n; ++t) x[t] += c[k] * perp[k][t];
        in_root_span.push_back(x);
      }
    }
    std::vector<QVec> all(f.direction.begin(), f.direction.end());
    all.insert(all.end(), in_root_span.begin(), in_root_span.end());
    f.norm_space = basis_of(all, n);
  }
  ZMat dl = root_lattice_in(rs, f.direction), sl = dl;
  for (std::size_t i = 0; i < f.highest.size(); ++i) {
    sl.push_back(to_zvec(f.highest[i]));
    for (std::size_t j = i + 1; j < f.highest.size(); ++j) dl.push_back(to_zvec(f.highest[j] - f.highest[i]));
  }
  f.direction_lattice = dl.empty() ? dl : hermite_basis(dl, n);
  f.span_lattice = sl.empty() ? sl : hermite_basis(sl, n);
  return f;
}

inline bool face_order(const Face& a, const Face& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return a.vertices < b.vertices;
}

/// Connected components of a set of simple roots in the Dynkin diagram.
inline std::vector<std::vector<std::size_t>> components(const RootSystem& rs, const std::vector<std::size_t>& s) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> used(s.size(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> comp{s[i]};
    used[i] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (!used[j] && rs.cartan[comp[k]][s[j]] != 0) {
          used[j] = true;
          comp.push_back(s[j]);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

}  // namespace detail

/// Faces of P(V(lambda0)) meeting C, labeled by admissible sets of simple
/// roots: no connected component lies inside Pi_L.
inline std::vector<Face> faces_via_pi_gamma(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  if (lambdas.size() != 1)
    throw CapabilityError("faces_via_pi_gamma: only a single highest weight is supported, got " +
                          std::to_string(lambdas.size()));
  const Weight& l0 = lambdas[0];
  if (!rs.is_dominant(l0)) throw DomainError("faces_via_pi_gamma: weight is not dominant");
  const std::size_t l = rs.ss_rank;
  if (l > 20) throw CapabilityError("faces_via_pi_gamma: rank too large");
  // Inverse transposed Cartan matrix: omega_i = sum_k M_ik alpha_k.
  QMat ct(l, QVec(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) ct[i][j] = rs.cartan[j][i];
  QMat m = l ? *inverse(ct) : QMat{};
  std::vector<Face> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < l; ++j)
      if (mask >> j & 1) s.push_back(j);
    bool admissible = true;
    for (const auto& comp : detail::components(rs, s)) {
      bool touches = std::any_of(comp.begin(), comp.end(), [&](std::size_t j) { return l0[j] > 0; });
      if (!touches) admissible = false;
    }
    if (!admissible) continue;
    Face f = detail::make_face(rs, lambdas, weyl_orbit(Subsystem(rs, s), l0));
    f.pi_gamma = s;
    // Support: minus the sum of the fundamental coweights outside S.
    f.support.assign(rs.dim(), Q(0));
    for (std::size_t j = 0; j < l; ++j) {
      if (mask >> j & 1) continue;
      for (std::size_t i = 0; i < l; ++i) f.support[i] -= m[i][j];
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), detail::face_order);
  return out;
}

/// Facets of the homogenized cone over P: rows (a, b) with a.x + b >= 0.
inline RationalCone homogenized_cone(const RootSystem& rs, const WeightPolytope& p) {
  ZMat hom;
  for (const auto& w : p.vertices) hom.push_back(homogenize(w));
  return cone_from_generators(hom, rs.dim() + 1);
}

namespace detail {

/// A rational point in the relative interior of (face) intersected with C,
/// or nullopt when the relative interior of the face misses C.
inline std::optional<QVec> relint_point_in_chamber(const RootSystem& rs, const std::vector<Weight>& verts) {
  const std::size_t n = rs.dim();
  ZMat hom;
  for (const auto& w : verts) hom.push_back(homogenize(w));
  RationalCone k = cone_from_generators(hom, n + 1);
  ZMat ineqs = k.facets, eqs = k.equations;
  for (std::size_t i = 0; i < rs.ss_rank; ++i) {
    ZVec e(n + 1, Z(0));
    e[i] = 1;
    ineqs.push_back(std::move(e));
  }
  RationalCone m = cone_from_inequalities(ineqs, eqs, n + 1);
  ZVec s = interior_point(m);
  if (s.empty() || s[n] <= 0) return std::nullopt;
  QVec sq = to_qvec(s);
  if (!k.relative_interior(sq)) return std::nullopt;
  QVec x(n);
  for (std::size_t t = 0; t < n; ++t) x[t] = sq[t] / sq[n];
  return x;
}

}  // namespace detail

/// All faces of P whose relative interior meets C, from the facet
/// description of P. Sorted by dimension.
inline std::vector<Face> faces_meeting_chamber(const RootSystem& rs, const WeightPolytope& p) {
  if (p.vertices.size() > kMaxGenericPoints) throw CapabilityError("faces_meeting_chamber: polytope too large");
  const std::size_t n = rs.dim();
  RationalCone k = homogenized_cone(rs, p);
  std::vector<std::vector<std::size_t>> tight;
  for (const auto& f : k.facets) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
      if (dot(f, homogenize(p.vertices[i])) == 0) t.push_back(i);
    tight.push_back(std::move(t));
  }
  std::vector<std::size_t> all(p.vertices.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> faces{all};
  std::vector<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& t : tight) {
      std::vector<std::size_t> inter;
      std::set_intersection(cur.begin(), cur.end(), t.begin(), t.end(), std::back_inserter(inter));
      if (inter.empty() || inter.size() == cur.size()) continue;
      if (faces.insert(inter).second) queue.push_back(inter);
    }
  }
  std::vector<Face> out;
  for (const auto& idx : faces) {
    std::vector<Weight> verts;
    for (auto i : idx) verts.push_back(p.vertices[i]);
    if (!detail::relint_point_in_chamber(rs, verts)) continue;
    Face f = detail::make_face(rs, p.highest, verts);
    f.support.assign(n, Q(0));
    for (std::size_t fi = 0; fi < k.facets.size(); ++fi)
      if (std::includes(tight[fi].begin(), tight[fi].end(), idx.begin(), idx.end()))
        for (std::size_t t = 0; t < n; ++t) f.support[t] += k.facets[fi][t];
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), detail::face_order);
  return out;
}

/// Cone of C intersected with P at the face C intersected with Gamma: the
/// tangent cone of P along Gamma cut by the walls of C through a relative
/// interior point of the face.
inline RationalCone cone_at_face(const RootSystem& rs, const WeightPolytope& p, const Face& face) {
  auto x = detail::relint_point_in_chamber(rs, face.vertices);
  if (!x) throw DomainError("cone_at_face: face does not meet the chamber in its relative interior");
  Weight v = face.vertices.front();
  for (const auto& w : face.vertices)
    if (rs.is_dominant(w)) {
      v = w;
      break;
    }
  RationalCone t = vertex_tangent_cone(rs, p, v);
  ZMat gens = t.rays;
  for (const auto& l : t.lineality) {
    gens.push_back(l);
    ZVec neg = l;
    for (auto& c : neg) c = -c;
    gens.push_back(neg);
  }
  for (const auto& d : face.direction) {
    ZVec z = primitive_integer(d), neg = z;
    for (auto& c : neg) c = -c;
    gens.push_back(z);
    gens.push_back(neg);
  }
  RationalCone tangent = cone_from_generators(gens, rs.dim());
  ZMat walls;
  for (std::size_t i = 0; i < rs.ss_rank; ++i)
    if ((*x)[i] == 0) {
      ZVec e(rs.dim(), Z(0));
      e[i] = 1;
      walls.push_back(std::move(e));
    }
  if (walls.empty()) return tangent;
  return intersect(tangent, cone_from_inequalities(walls, {}, rs.dim()));
}

/// Cone of C intersected with P at a dominant vertex.
inline RationalCone cone_at_vertex(const RootSystem& rs, const WeightPolytope& p, const Weight& v) {
  if (!rs.is_dominant(v) || !p.is_vertex(v))
    throw DomainError("cone_at_vertex: " + to_string(v) + " is not a dominant vertex of P");
  RationalCone t = vertex_tangent_cone(rs, p, v);
  ZMat walls;
  for (std::size_t i = 0; i < rs.ss_rank; ++i)
    if (v[i] == 0) {
      ZVec e(rs.dim(), Z(0));
      e[i] = 1;
      walls.push_back(std::move(e));
    }
  if (walls.empty()) return t;
  return intersect(t, cone_from_inequalities(walls, {}, rs.dim()));
}

// ---------------------------------------------------------------------------
// Toric closures

/// -conv(weights): its vertices, sorted.
inline std::vector<ZVec> toric_support_polytope(const std::vector<ZVec>& weights) {
  if (weights.empty()) throw DomainError("toric_support_polytope: empty weight list");
  const std::size_t d = weights[0].size();
  std::set<ZVec> pts;
  for (const auto& w : weights) {
    ZVec neg = w;
    for (auto& x : neg) x = -x;
    pts.insert(neg);
  }
  if (pts.size() == 1) return {*pts.begin()};
  ZMat hom;
  for (const auto& p : pts) {
    ZVec h = p;
    h.push_back(Z(1));
    hom.push_back(std::move(h));
  }
  RationalCone k = cone_from_generators(hom, d + 1);
  std::set<ZVec> rays(k.rays.begin(), k.rays.end());
  std::vector<ZVec> out;
  for (const auto& p : pts) {
    ZVec h = p;
    h.push_back(Z(1));
    if (rays.count(make_primitive(h))) out.push_back(p);
  }
  return out;
}

struct ToricNormality {
  bool normal = true;
  std::optional<ZVec> failing_vertex;   // a weight lambda_i
  std::optional<QVec> missing;          // Hilbert basis element outside S_i
};

/// Normality of the torus orbit closure with the given weights: at every
/// vertex lambda_i the semigroup generated by lambda_j - lambda_i must be
/// saturated in the lattice (Z^d unless given).
inline ToricNormality toric_orbit_normal(const std::vector<ZVec>& weights, std::optional<Lattice> lattice = std::nullopt,
                                         const std::vector<ZVec>& only_vertices = {}) {
  if (weights.empty()) throw DomainError("toric_orbit_normal: empty weight list");
  const std::size_t d = weights[0].size();
  std::set<ZVec> pts(weights.begin(), weights.end());
  std::vector<ZVec> verts;
  for (auto v : toric_support_polytope(weights)) {
    for (auto& x : v) x = -x;
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  Lattice lat = lattice ? *lattice : Lattice::standard(d);
  for (const auto& v : verts) {
    if (!only_vertices.empty() && std::find(only_vertices.begin(), only_vertices.end(), v) == only_vertices.end())
      continue;
    ZMat gens;
    for (const auto& p : pts) {
      if (p == v) continue;
      ZVec g(d);
      for (std::size_t t = 0; t < d; ++t) g[t] = p[t] - v[t];
      gens.push_back(std::move(g));
    }
    if (gens.empty()) continue;
    RationalCone k = cone_from_generators(gens, d);
    for (const auto& h : hilbert_basis(k, lat)) {
      ZVec hz(d);
      for (std::size_t t = 0; t < d; ++t) hz[t] = h[t].get_num();
      bool integral = std::all_of(h.begin(), h.end(), [](const Q& q) { return q.get_den() == 1; });
      if (!integral || !in_semigroup(hz, gens)) return {false, v, h};
    }
  }
  return {};
}

}  // namespace rgc
