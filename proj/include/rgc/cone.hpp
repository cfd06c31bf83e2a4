#pragma once

// Exact rational polyhedral cones: double description in both directions,
// duality, Hilbert bases of lattice points and affine semigroup membership.
// Vectors are integer (cones are rational, so generators can be scaled).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"

namespace rgc {

/// A rational polyhedral cone { x : facets.x >= 0, equations.x = 0 }, equal
/// to cone(rays) + span(lineality). All four lists are canonical: rays are
/// primitive and orthogonal to the lineality space, facets are primitive and
/// orthogonal to the equation space, bases are in Hermite form, lists sorted.
struct RationalCone {
  std::size_t ambient = 0;
  ZMat rays;
  ZMat lineality;
  ZMat facets;
  ZMat equations;

  std::size_t lineality_dim() const { return lineality.size(); }
  bool pointed() const { return lineality.empty(); }
  /// Dimension of the linear span.
  std::size_t dimension() const { return ambient - equations.size(); }
  bool full_dimensional() const { return equations.empty(); }
  bool simplicial() const { return pointed() && rays.size() == dimension(); }

  bool contains(const ZVec& x) const {
    for (const auto& e : equations)
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
      if (dot(f, x) < 0) return false;
    return true;
  }
  bool contains(const QVec& x) const {
    for (const auto& e : equations)
      if (dot(to_qvec(e), x) != 0) return false;
    for (const auto& f : facets)
      if (dot(to_qvec(f), x) < 0) return false;
    return true;
  }
  /// Strictly inside the relative interior.
  bool relative_interior(const QVec& x) const {
    if (!contains(x)) return false;
    for (const auto& f : facets)
      if (dot(to_qvec(f), x) == 0) return false;
    return true;
  }

  bool operator==(const RationalCone&) const = default;
};

namespace detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  void grow(std::size_t n) { w_.resize((n + 63) / 64, 0); }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w_.resize(std::min(w_.size(), o.w_.size()));
    for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t other = i < o.w_.size() ? o.w_[i] : 0;
      if (w_[i] & ~other) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

 private:
  std::vector<std::uint64_t> w_;
};

inline ZMat identity_basis(std::size_t d) {
  ZMat id(d, ZVec(d, Z(0)));
  for (std::size_t i = 0; i < d; ++i) id[i][i] = 1;
  return id;
}

/// Orthogonal projection of v onto the complement of span(basis), made primitive.
inline ZVec project_away(const ZVec& v, const ZMat& basis) {
  if (basis.empty()) return make_primitive(v);
  const std::size_t k = basis.size();
  QMat gram(k, QVec(k));
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Q(dot(basis[i], basis[j]));
    rhs[i] = Q(dot(basis[i], v));
  }
  auto inv = inverse(gram);
  if (!inv) throw ConsistencyError("project_away: dependent basis");
  QVec coef = mat_vec(*inv, rhs);
  QVec out = to_qvec(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t t = 0; t < out.size(); ++t) out[t] -= coef[i] * basis[i][t];
  return primitive_integer(out);
}

struct VRep {
  ZMat rays;
  ZMat lineality;
};

/// Double description: generators of { x : A x >= 0, E x = 0 }.
inline VRep double_description(const ZMat& ineqs, const ZMat& eqs, std::size_t d) {
  ZMat lin = eqs.empty() ? identity_basis(d) : integer_kernel(eqs, d);
  struct Ray {
    ZVec v;
    Bits tight;
  };
  std::vector<Ray> rays;
  std::size_t processed = 0;
  for (const auto& a : ineqs) {
    if (is_zero(a)) continue;
    const std::size_t idx = processed++;
    for (auto& r : rays) r.tight.grow(processed);
    // Lineality direction not orthogonal to a becomes a ray.
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < lin.size()) {
      ZVec l0 = lin[pivot];
      Z al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      ZMat rest;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        ZVec l = lin[i];
        Z al = dot(a, l);
        if (al != 0)
          for (std::size_t t = 0; t < d; ++t) l[t] = al0 * l[t] - al * l0[t];
        rest.push_back(make_primitive(l));
      }
      lin = std::move(rest);
      for (auto& r : rays) {
        Z ar = dot(a, r.v);
        if (ar != 0) {
          for (std::size_t t = 0; t < d; ++t) r.v[t] = al0 * r.v[t] - ar * l0[t];
          r.v = make_primitive(r.v);
        }
        r.tight.set(idx);
      }
      Ray nr{make_primitive(l0), Bits(processed)};
      for (std::size_t i = 0; i < idx; ++i) nr.tight.set(i);
      rays.push_back(std::move(nr));
      continue;
    }
    std::vector<Z> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else rays[i].tight.set(idx);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos)
      for (auto n : neg) {
        Bits common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && common.subset_of(rays[o].tight)) adjacent = false;
        if (!adjacent) continue;
        ZVec v(d);
        for (std::size_t t = 0; t < d; ++t) v[t] = val[p] * rays[n].v[t] - val[n] * rays[p].v[t];
        Ray nr{make_primitive(v), common};
        nr.tight.grow(processed);
        nr.tight.set(idx);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
  VRep out;
  out.lineality = lin.empty() ? ZMat{} : hermite_basis(lin, d);
  std::set<ZVec> uniq;
  for (const auto& r : rays) {
    ZVec v = project_away(r.v, out.lineality);
    if (!is_zero(v)) uniq.insert(v);
  }
  out.rays.assign(uniq.begin(), uniq.end());
  return out;
}

inline ZMat canonical_facets(const ZMat& raw, const ZMat& equations) {
  std::set<ZVec> uniq;
  for (const auto& f : raw) {
    ZVec v = project_away(f, equations);
    if (!is_zero(v)) uniq.insert(v);
  }
  return ZMat(uniq.begin(), uniq.end());
}

inline RationalCone assemble(std::size_t d, VRep v) {
  RationalCone c;
  c.ambient = d;
  c.rays = std::move(v.rays);
  c.lineality = std::move(v.lineality);
  VRep dual = double_description(c.rays, c.lineality, d);
  c.equations = dual.lineality;
  c.facets = canonical_facets(dual.rays, c.equations);
  return c;
}

inline ZMat to_integer_rows(const QMat& rows) {
  ZMat out;
  for (const auto& r : rows) out.push_back(primitive_integer(r));
  return out;
}

}  // namespace detail

/// cone(generators) in Q^d.
inline RationalCone cone_from_generators(const ZMat& generators, std::size_t d) {
  for (const auto& g : generators)
    if (g.size() != d) throw DomainError("cone_from_generators: dimension mismatch");
  // Facets are the extreme rays of the dual; the cone is then recovered from them.
  detail::VRep dual = detail::double_description(generators, {}, d);
  ZMat equations = dual.lineality;
  ZMat facets = detail::canonical_facets(dual.rays, equations);
  detail::VRep prim = detail::double_description(facets, equations, d);
  RationalCone c;
  c.ambient = d;
  c.rays = std::move(prim.rays);
  c.lineality = std::move(prim.lineality);
  c.facets = std::move(facets);
  c.equations = std::move(equations);
  return c;
}

inline RationalCone cone_from_generators(const QMat& generators, std::size_t d) {
  return cone_from_generators(detail::to_integer_rows(generators), d);
}

/// { x : A x >= 0, E x = 0 }.
inline RationalCone cone_from_inequalities(const ZMat& ineqs, const ZMat& eqs, std::size_t d) {
  return detail::assemble(d, detail::double_description(ineqs, eqs, d));
}

/// { y : y.x >= 0 for all x in K }.
inline RationalCone dual_cone(const RationalCone& k) {
  RationalCone c;
  c.ambient = k.ambient;
  c.rays = k.facets;
  c.lineality = k.equations;
  c.facets = k.rays;
  c.equations = k.lineality;
  return c;
}

/// Intersection of two cones in the same space.
inline RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient != b.ambient) throw DomainError("intersect: dimension mismatch");
  ZMat ineqs = a.facets, eqs = a.equations;
  ineqs.insert(ineqs.end(), b.facets.begin(), b.facets.end());
  eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
  return cone_from_inequalities(ineqs, eqs, a.ambient);
}

/// A point in the relative interior (sum of rays and nothing from lineality).
inline ZVec interior_point(const RationalCone& k) {
  ZVec s(k.ambient, Z(0));
  for (const auto& r : k.rays)
    for (std::size_t t = 0; t < k.ambient; ++t) s[t] += r[t];
  return s;
}

// ---------------------------------------------------------------------------
// Lattices and Hilbert bases

/// A full-rank sublattice of Q^d given by basis rows; empty basis means Z^d.
struct Lattice {
  ZMat basis;  // rows; may have rational entries scaled away, see from_rational
  Z scale = 1; // the lattice is (1/scale) * rowspan_Z(basis)

  static Lattice standard(std::size_t d) { return Lattice{detail::identity_basis(d), 1}; }
  static Lattice from_rows(const QMat& rows) {
    Z den = 1;
    for (const auto& r : rows)
      for (const auto& x : r) den = lcm(den, x.get_den());
    Lattice l;
    l.scale = den;
    for (const auto& r : rows) {
      ZVec z(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) z[i] = Q(r[i] * den).get_num();
      l.basis.push_back(std::move(z));
    }
    return l;
  }
  std::size_t rank() const { return basis.size(); }

  /// Coordinates of x in the basis, nullopt if x is not in the lattice.
  std::optional<ZVec> coordinates(const QVec& x) const {
    QMat rows;
    for (const auto& b : basis) {
      QVec q = to_qvec(b);
      for (auto& v : q) v /= scale;
      rows.push_back(std::move(q));
    }
    auto c = solve_combination(rows, x);
    if (!c) return std::nullopt;
    ZVec out;
    for (const auto& q : *c) {
      if (q.get_den() != 1) return std::nullopt;
      out.push_back(q.get_num());
    }
    return out;
  }
  QVec point(const ZVec& coords) const {
    QVec out(basis.empty() ? 0 : basis[0].size(), Q(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t t = 0; t < out.size(); ++t) out[t] += Q(coords[i] * basis[i][t], scale);
    for (auto& x : out) x.canonicalize();
    return out;
  }
};

namespace detail {

/// Rational coordinates of x in the lattice basis (x in its span).
inline std::optional<QVec> lattice_coords(const Lattice& lat, const QVec& x) {
  QMat rows;
  for (const auto& b : lat.basis) {
    QVec q = to_qvec(b);
    for (auto& v : q) v /= lat.scale;
    rows.push_back(std::move(q));
  }
  return solve_combination(rows, x);
}

/// Hilbert basis of Z^r intersected with a pointed cone given by primitive rays.
inline ZMat hilbert_basis_coords(const ZMat& rays, std::size_t r, std::size_t limit) {
  RationalCone k = cone_from_generators(rays, r);
  if (!k.pointed()) throw DomainError("hilbert_basis: cone is not pointed");
  const std::size_t dim = k.dimension();
  if (k.rays.empty()) return {};
  // Saturated lattice in the span of the cone.
  ZMat span_lat = k.equations.empty() ? identity_basis(r) : integer_kernel(k.equations, r);
  std::set<ZVec> cand(k.rays.begin(), k.rays.end());
  const std::size_t n = k.rays.size();
  std::vector<std::size_t> pick(dim);
  for (std::size_t i = 0; i < dim; ++i) pick[i] = i;
  std::size_t visited = 0;
  while (true) {
    ZMat s;
    for (auto i : pick) s.push_back(k.rays[i]);
    if (rank(s, r) == dim) {
      // S in coordinates of span_lat: S = A * span_lat.
      QMat lat_rows;
      for (const auto& b : span_lat) lat_rows.push_back(to_qvec(b));
      ZMat a;
      for (const auto& row : s) {
        auto c = solve_combination(lat_rows, to_qvec(row));
        if (!c) throw ConsistencyError("hilbert_basis: ray outside its span lattice");
        ZVec z;
        for (const auto& q : *c) z.push_back(q.get_num());
        a.push_back(std::move(z));
      }
      SmithForm snf = smith_form(a, dim);
      Z index = 1;
      for (const auto& d : snf.diag) index *= d;
      visited += index.get_ui();
      if (visited > limit) throw ResourceError("hilbert_basis: parallelepiped enumeration exceeds budget");
      ZMat vinv = unimodular_inverse(snf.v);
      QMat aq;
      for (const auto& row : a) aq.push_back(to_qvec(row));
      auto ainv = inverse(aq);
      std::vector<Z> y(dim, Z(0));
      while (true) {
        // x = y V^{-1} in span_lat coordinates; reduce modulo the rows of A.
        QVec x(dim, Q(0));
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j) x[j] += Q(y[i] * vinv[i][j]);
        QVec q = vec_mat(x, *ainv, dim);
        QVec pt(dim, Q(0));
        for (std::size_t i = 0; i < dim; ++i) {
          Q f = q[i] - Q(floor_div(q[i]));
          for (std::size_t j = 0; j < dim; ++j) pt[j] += f * aq[i][j];
        }
        if (!is_zero(pt)) {
          ZVec amb(r, Z(0));
          for (std::size_t j = 0; j < dim; ++j) {
            if (pt[j].get_den() != 1) throw ConsistencyError("hilbert_basis: non-integral parallelepiped point");
            for (std::size_t t = 0; t < r; ++t) amb[t] += pt[j].get_num() * span_lat[j][t];
          }
          cand.insert(std::move(amb));
        }
        std::size_t t = 0;
        while (t < dim && (y[t] += 1) == snf.diag[t]) y[t++] = 0;
        if (t == dim) break;
      }
    }
    // Next combination.
    std::size_t i = dim;
    while (i > 0 && pick[i - 1] == n - dim + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < dim; ++j) pick[j] = pick[j - 1] + 1;
  }
  ZMat out;
  for (const auto& h : cand) {
    bool reducible = false;
    for (const auto& b : cand) {
      if (b == h) continue;
      ZVec diff(r);
      for (std::size_t t = 0; t < r; ++t) diff[t] = h[t] - b[t];
      if (k.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(h);
  }
  return out;
}

}  // namespace detail

/// Minimal generating set of the semigroup (lattice intersected with K).
/// The cone must be pointed and lie in the span of the lattice.
inline std::vector<QVec> hilbert_basis(const RationalCone& k, const Lattice& lattice,
                                       std::size_t limit = 2'000'000) {
  if (!k.pointed()) throw DomainError("hilbert_basis: cone is not pointed");
  const std::size_t r = lattice.rank();
  ZMat rays;
  for (const auto& ray : k.rays) {
    auto c = detail::lattice_coords(lattice, to_qvec(ray));
    if (!c) throw DomainError("hilbert_basis: cone is not contained in the span of the lattice");
    rays.push_back(primitive_integer(*c));
  }
  std::vector<QVec> out;
  for (const auto& h : detail::hilbert_basis_coords(rays, r, limit)) out.push_back(lattice.point(h));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<QVec> hilbert_basis(const RationalCone& k) { return hilbert_basis(k, Lattice::standard(k.ambient)); }

/// A primitive integer covector positive on every nonzero element of the
/// pointed cone generated by gens (zero vectors ignored).
inline ZVec positive_grading(const ZMat& gens, std::size_t d) {
  RationalCone k = cone_from_generators(gens, d);
  if (!k.pointed()) throw DomainError("positive_grading: cone is not pointed");
  return make_primitive(interior_point(dual_cone(k)));
}

/// Whether x is a nonnegative integer combination of gens. Exhaustive over
/// the finitely many combinations of grade at most grade(x).
inline bool in_semigroup(const ZVec& x, const ZMat& gens, std::size_t limit = 5'000'000) {
  const std::size_t d = x.size();
  if (is_zero(x)) return true;
  ZMat nz;
  for (const auto& g : gens)
    if (!is_zero(g)) nz.push_back(g);
  if (nz.empty()) return false;
  ZVec f = positive_grading(nz, d);
  const Z target = dot(f, x);
  if (target <= 0) return false;
  std::set<ZVec> seen{ZVec(d, Z(0))};
  std::vector<ZVec> frontier{ZVec(d, Z(0))};
  while (!frontier.empty()) {
    std::vector<ZVec> next;
    for (const auto& p : frontier)
      for (const auto& g : nz) {
        ZVec s(d);
        for (std::size_t t = 0; t < d; ++t) s[t] = p[t] + g[t];
        if (dot(f, s) > target) continue;
        if (s == x) return true;
        if (seen.insert(s).second) next.push_back(std::move(s));
        if (seen.size() > limit) throw ResourceError("in_semigroup: search budget exhausted");
      }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace rgc
