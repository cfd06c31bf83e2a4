#pragma once

// The closure X of G in P(End V), V = sum of V(lambda_i): closed orbits,
// local slices at them, the orbit poset and the colored fan of the
// normalization.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rgc/cone.hpp"
#include "rgc/errors.hpp"
#include "rgc/lie_type.hpp"
#include "rgc/polytope.hpp"
#include "rgc/representation.hpp"
#include "rgc/root_system.hpp"
#include "rgc/weyl.hpp"

namespace rgc {

struct CompactificationInput {
  LieType type;
  std::vector<Weight> highest;
};

struct ClosedOrbit {
  Weight weight;
  LeviDatum levi;
  QVec certificate;  // one-parameter subgroup contracting onto the orbit
};

struct SliceDatum {
  Weight apex;
  LeviDatum levi;
  std::vector<Weight> slice_weights;  // mu_j - lambda_0 over the L-highest weights of V except lambda_0
  std::vector<Weight> lgens;          // lambda_i - lambda_0 and -alpha_j outside the Levi
  RationalCone sigma;                 // cone of C intersected with P at lambda_0
};

struct StabilizerRecord {
  std::vector<std::size_t> parabolic;    // simple roots of L_{||Gamma||}
  std::vector<std::size_t> levi_direction;  // simple roots of L_{|Gamma|}
  std::vector<std::size_t> levi_perp;       // simple roots of L'_{<Gamma>perp}
  ZMat torus_kernel;                        // |Gamma|_Z: T^{|Gamma|_Z} is the common kernel
  ZMat span_lattice;                        // <Gamma>_Z, the weight lattice of T on V_Gamma
};

struct OrbitDescriptor {
  Face face;
  RationalCone colored_cone;
  std::vector<std::size_t> colors;
  std::vector<Weight> representative;  // weights of V on the face (support of e_Gamma)
  StabilizerRecord stabilizer;
  long dimension = 0;
};

struct OrbitPoset {
  std::vector<OrbitDescriptor> orbits;             // sorted by face dimension
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (smaller, larger) covering pairs
};

struct ColoredCone {
  Weight vertex;
  RationalCone cone;
  std::vector<std::size_t> colors;
};

struct ColoredFan {
  std::vector<ColoredCone> maximal_cones;
  bool covers_valuation_cone = false;
};

class Model {
 public:
  Model(const LieType& type, std::vector<Weight> highest) : s_(std::make_shared<State>()) {
    s_->rs = std::make_shared<const RootSystem>(build_root_system(type));
    init(std::move(highest));
  }
  Model(std::shared_ptr<const RootSystem> rs, std::vector<Weight> highest) : s_(std::make_shared<State>()) {
    s_->rs = std::move(rs);
    init(std::move(highest));
  }

  const RootSystem& root_system() const { return *s_->rs; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return s_->rs; }
  const std::vector<Weight>& highest() const { return s_->highest; }
  const CharacterLattice& lattice() const { return s_->lattice; }
  const std::vector<std::string>& warnings() const { return s_->warnings; }
  bool single_weight() const { return s_->highest.size() == 1; }

  const WeightPolytope& polytope() const {
    std::call_once(s_->poly_once, [&] { s_->poly = polytope_from_orbits(*s_->rs, s_->highest); });
    return s_->poly;
  }
  const std::vector<ChamberVertex>& chamber_vertices() const {
    std::call_once(s_->vert_once, [&] { s_->verts = vertices_in_chamber(*s_->rs, polytope()); });
    return s_->verts;
  }
  /// Faces of P meeting C in their relative interior, sorted by dimension.
  const std::vector<Face>& faces() const {
    std::call_once(s_->face_once, [&] {
      s_->faces = single_weight() ? faces_via_pi_gamma(*s_->rs, s_->highest) : faces_meeting_chamber(*s_->rs, polytope());
    });
    return s_->faces;
  }
  /// Weights of V without multiplicities.
  const std::set<Weight>& weights_of_v() const {
    std::call_once(s_->wt_once, [&] {
      for (const auto& l : s_->highest)
        for (const auto& [w, m] : weight_system(*s_->rs, l).entries) s_->weights.insert(w);
    });
    return s_->weights;
  }

 private:
  struct State {
    std::shared_ptr<const RootSystem> rs;
    std::vector<Weight> highest;
    CharacterLattice lattice;
    std::vector<std::string> warnings;
    std::once_flag poly_once, vert_once, face_once, wt_once;
    WeightPolytope poly;
    std::vector<ChamberVertex> verts;
    std::vector<Face> faces;
    std::set<Weight> weights;
  };

  void init(std::vector<Weight> highest) {
    const RootSystem& rs = *s_->rs;
    if (highest.empty()) throw DomainError("compactification: no highest weights given");
    std::set<Weight> seen;
    for (const auto& l : highest) {
      if (l.size() != rs.dim())
        throw DomainError("compactification: weight " + to_string(l) + " has " + std::to_string(l.size()) +
                          " coordinates, expected " + std::to_string(rs.dim()));
      if (!rs.is_dominant(l)) throw DomainError("compactification: weight " + to_string(l) + " is not dominant");
      if (!seen.insert(l).second) throw DomainError("compactification: weight " + to_string(l) + " repeated");
    }
    s_->highest = std::move(highest);
    s_->lattice = character_lattice(rs, s_->highest);
    if (!s_->lattice.full_rank)
      s_->warnings.push_back("the projective representation is not faithful: a central torus acts trivially");
  }

  std::shared_ptr<State> s_;
};

inline Model build_model(const CompactificationInput& in) { return Model(in.type, in.highest); }

inline std::vector<ClosedOrbit> closed_orbits(const Model& m) {
  std::vector<ClosedOrbit> out;
  for (const auto& cv : m.chamber_vertices())
    out.push_back({cv.weight, levi_datum(m.root_system(), cv.weight), cv.certificate});
  return out;
}

inline const ChamberVertex& require_vertex(const Model& m, const Weight& l0, const char* who) {
  for (const auto& cv : m.chamber_vertices())
    if (cv.weight == l0) return cv;
  throw DomainError(std::string(who) + ": " + to_string(l0) + " is not a dominant vertex of the weight polytope");
}

inline SliceDatum local_slice(const Model& m, const Weight& l0) {
  require_vertex(m, l0, "local_slice");
  const RootSystem& rs = m.root_system();
  SliceDatum s;
  s.apex = l0;
  s.levi = levi_datum(rs, l0);
  std::set<Weight> mus;
  for (const auto& l : m.highest())
    for (const auto& [label, mult] : branch_to_levi(rs, l, s.levi)) {
      (void)mult;
      if (label.highest_weight != l0) mus.insert(label.highest_weight - l0);
    }
  s.slice_weights.assign(mus.begin(), mus.end());
  s.lgens = lgens_generators(rs, m.highest(), l0, s.levi);
  s.sigma = cone_at_vertex(rs, m.polytope(), l0);
  for (const auto& w : s.slice_weights)
    if (!s.sigma.contains(to_zvec(w)))
      throw ConsistencyError("local_slice: slice weight " + to_string(w) + " lies outside the vertex cone");
  return s;
}

namespace detail {

inline std::size_t roots_orthogonal_to(const RootSystem& rs, const QMat& span) {
  std::size_t n = 0;
  for (const auto& b : rs.positive_roots) {
    QVec v = to_qvec(b.weight);
    bool orth = std::all_of(span.begin(), span.end(), [&](const QVec& x) { return rs.inner_product(v, x) == 0; });
    if (orth) n += 2;
  }
  return n;
}

}  // namespace detail

inline long orbit_dimension(const RootSystem& rs, const Face& f) {
  const long dim_l = static_cast<long>(detail::roots_orthogonal_to(rs, f.span) + rs.dim());
  return static_cast<long>(rs.group_dimension()) - dim_l + static_cast<long>(f.dimension());
}

inline OrbitDescriptor orbit_descriptor(const Model& m, const Face& face) {
  const auto& fs = m.faces();
  if (std::find(fs.begin(), fs.end(), face) == fs.end())
    throw DomainError("orbit_descriptor: face is not a face of this model's polytope meeting the chamber");
  const RootSystem& rs = m.root_system();
  OrbitDescriptor d;
  d.face = face;
  d.colors = face.colors;
  d.colored_cone = dual_cone(cone_at_face(rs, m.polytope(), face));
  for (const auto& w : m.weights_of_v()) {
    Q val = dot(face.support, to_qvec(w)), ref = dot(face.support, to_qvec(face.vertices.front()));
    if (val == ref) d.representative.push_back(w);
  }
  d.stabilizer.levi_direction = face.direction_roots;
  d.stabilizer.levi_perp = face.colors;
  std::set_union(face.direction_roots.begin(), face.direction_roots.end(), face.colors.begin(), face.colors.end(),
                 std::back_inserter(d.stabilizer.parabolic));
  d.stabilizer.torus_kernel = face.direction_lattice;
  d.stabilizer.span_lattice = face.span_lattice;
  d.dimension = orbit_dimension(rs, face);
  return d;
}

inline OrbitPoset orbit_poset(const Model& m) {
  OrbitPoset p;
  for (const auto& f : m.faces()) p.orbits.push_back(orbit_descriptor(m, f));
  const std::size_t n = p.orbits.size();
  auto sub = [&](std::size_t a, std::size_t b) {
    const auto& va = p.orbits[a].face.vertices;
    const auto& vb = p.orbits[b].face.vertices;
    return va.size() < vb.size() && std::includes(vb.begin(), vb.end(), va.begin(), va.end());
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!sub(a, b)) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n && covering; ++c)
        if (sub(a, c) && sub(c, b)) covering = false;
      if (covering) p.hasse.emplace_back(a, b);
    }
  return p;
}

namespace detail {

inline bool cone_inside(const RationalCone& piece, const RationalCone& k) {
  for (const auto& r : piece.rays)
    if (!k.contains(r)) return false;
  for (const auto& l : piece.lineality) {
    ZVec neg = l;
    for (auto& x : neg) x = -x;
    if (!k.contains(l) || !k.contains(neg)) return false;
  }
  return true;
}

inline bool splits(const RationalCone& piece, const ZVec& h) {
  bool pos = false, neg = false;
  for (const auto& r : piece.rays) {
    Z v = dot(h, r);
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  for (const auto& l : piece.lineality)
    if (dot(h, l) != 0) pos = neg = true;
  return pos && neg;
}

inline bool covered_by(const RationalCone& piece, const std::vector<RationalCone>& cones, const ZMat& hyperplanes) {
  for (const auto& k : cones)
    if (cone_inside(piece, k)) return true;
  for (const auto& h : hyperplanes) {
    if (!splits(piece, h)) continue;
    ZVec neg = h;
    for (auto& x : neg) x = -x;
    RationalCone plus = intersect(piece, cone_from_inequalities({h}, {}, piece.ambient));
    RationalCone minus = intersect(piece, cone_from_inequalities({neg}, {}, piece.ambient));
    return covered_by(plus, cones, hyperplanes) && covered_by(minus, cones, hyperplanes);
  }
  return false;
}

}  // namespace detail

/// The antidominant chamber -C of coweights: f(alpha_j) <= 0.
inline RationalCone valuation_cone(const RootSystem& rs) {
  ZMat ineqs;
  for (std::size_t j = 0; j < rs.ss_rank; ++j) {
    ZVec a = to_zvec(rs.simple_root(j));
    for (auto& x : a) x = -x;
    ineqs.push_back(std::move(a));
  }
  return cone_from_inequalities(ineqs, {}, rs.dim());
}

/// Whether the union of the cones contains the target cone; exact.
inline bool cones_cover(const RationalCone& target, const std::vector<RationalCone>& cones) {
  ZMat hyperplanes;
  for (const auto& k : cones) {
    hyperplanes.insert(hyperplanes.end(), k.facets.begin(), k.facets.end());
    hyperplanes.insert(hyperplanes.end(), k.equations.begin(), k.equations.end());
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  return detail::covered_by(target, cones, hyperplanes);
}

inline ColoredFan colored_fan(const Model& m) {
  const RootSystem& rs = m.root_system();
  ColoredFan fan;
  std::vector<RationalCone> cones;
  for (const auto& co : closed_orbits(m)) {
    ColoredCone cc{co.weight, dual_cone(cone_at_vertex(rs, m.polytope(), co.weight)), co.levi.simple_root_indices};
    cones.push_back(cc.cone);
    fan.maximal_cones.push_back(std::move(cc));
  }
  fan.covers_valuation_cone = cones_cover(valuation_cone(rs), cones);
  if (!fan.covers_valuation_cone)
    throw ConsistencyError("colored_fan: the cones of the closed orbits do not cover the valuation cone");
  return fan;
}

}  // namespace rgc
