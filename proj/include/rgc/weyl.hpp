#pragma once

// Weyl group actions on weights, standard Levi subsystems, and the
// character lattice of a projective representation.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"
#include "rgc/root_system.hpp"

namespace rgc {

/// The standard Levi subsystem spanned by a subset of simple roots. Holds a
/// pointer to its root system, which must outlive it.
class Subsystem {
 public:
  Subsystem() = default;
  Subsystem(const RootSystem& rs, std::vector<std::size_t> simple) : rs_(&rs), simple_(std::move(simple)) {
    std::sort(simple_.begin(), simple_.end());
    std::vector<bool> in(rs.ss_rank, false);
    for (auto j : simple_) {
      if (j >= rs.ss_rank) throw DomainError("subsystem index out of range");
      in[j] = true;
    }
    two_rho_ = rs.zero();
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
      const auto& r = rs.positive_roots[k];
      bool inside = true;
      for (std::size_t j = 0; j < rs.ss_rank; ++j)
        if (r.coords[j] != 0 && !in[j]) inside = false;
      if (!inside) continue;
      positive_.push_back(k);
      two_rho_ += r.weight;
    }
  }
  static Subsystem full(const RootSystem& rs) {
    std::vector<std::size_t> all(rs.ss_rank);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subsystem(rs, std::move(all));
  }

  const RootSystem& root_system() const { return *rs_; }
  const std::vector<std::size_t>& simple() const { return simple_; }
  const std::vector<std::size_t>& positive() const { return positive_; }
  const PositiveRoot& positive_root(std::size_t k) const { return rs_->positive_roots[positive_[k]]; }
  std::size_t num_positive() const { return positive_.size(); }
  /// Sum of the positive roots (twice rho), in weight coordinates.
  const Weight& two_rho() const { return two_rho_; }

  bool contains(std::size_t j) const { return std::binary_search(simple_.begin(), simple_.end(), j); }
  bool is_dominant(const Weight& w) const {
    return std::all_of(simple_.begin(), simple_.end(), [&](std::size_t j) { return w[j] >= 0; });
  }

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> positive_;
  Weight two_rho_;
};

/// s_j(mu) = mu - <mu, alpha_j^vee> alpha_j.
inline Weight reflect(const RootSystem& rs, const Weight& mu, std::size_t j) {
  Weight out = mu;
  const int k = mu[j];
  if (k == 0) return out;
  for (std::size_t i = 0; i < rs.ss_rank; ++i) out[i] -= k * rs.cartan[i][j];
  return out;
}

/// Orbit of mu under the Weyl group of the subsystem, sorted.
inline std::vector<Weight> weyl_orbit(const Subsystem& sub, const Weight& mu) {
  const RootSystem& rs = sub.root_system();
  std::unordered_set<Weight, WeightHash> seen{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (auto j : sub.simple()) {
        if (w[j] == 0) continue;
        Weight r = reflect(rs, w, j);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& mu) {
  return weyl_orbit(Subsystem::full(rs), mu);
}

struct DominantRep {
  Weight dominant;
  int sign = 1;  // det(w); 0 when mu lies on a wall
};

/// Dominant representative of mu and the determinant of the shortest Weyl
/// element reaching it. sign is 0 exactly when mu is fixed by a reflection.
inline DominantRep dominant_reflect(const Subsystem& sub, Weight mu) {
  const RootSystem& rs = sub.root_system();
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto j : sub.simple())
      if (mu[j] < 0) {
        mu = reflect(rs, mu, j);
        sign = -sign;
        moved = true;
      }
  }
  for (auto j : sub.simple())
    if (mu[j] == 0) sign = 0;
  return {mu, sign};
}

inline DominantRep dominant_reflect(const RootSystem& rs, const Weight& mu) {
  return dominant_reflect(Subsystem::full(rs), mu);
}

/// Dot action: returns (w.(mu+rho) - rho, det w) with w(mu+rho) dominant,
/// or nullopt when mu+rho is singular.
inline std::optional<std::pair<Weight, int>> dot_dominant(const Subsystem& sub, Weight mu) {
  const RootSystem& rs = sub.root_system();
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto j : sub.simple()) {
      const int k = mu[j] + 1;
      if (k < 0) {
        for (std::size_t i = 0; i < rs.ss_rank; ++i) mu[i] -= k * rs.cartan[i][j];
        sign = -sign;
        moved = true;
      }
    }
  }
  for (auto j : sub.simple())
    if (mu[j] == -1) return std::nullopt;
  return std::make_pair(mu, sign);
}

// ---------------------------------------------------------------------------
// Levi data

struct LeviComponent {
  Series series;
  int rank;
  std::vector<std::size_t> nodes;  // simple indices; for type A in chain order

  bool operator==(const LeviComponent&) const = default;
};

struct LeviDatum {
  std::vector<std::size_t> simple_root_indices;
  std::vector<LeviComponent> components;
  std::size_t center_rank = 0;

  /// "A2+T1" style summary of the Levi type.
  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += 'x';
      s += static_cast<char>(components[i].series);
      s += std::to_string(components[i].rank);
    }
    if (center_rank > 0) {
      if (!s.empty()) s += '+';
      s += "T" + std::to_string(center_rank);
    }
    return s.empty() ? "1" : s;
  }
};

namespace detail {

inline LeviComponent classify_component(const RootSystem& rs, std::vector<std::size_t> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const std::size_t n = nodes.size();
  auto adj = [&](std::size_t a, std::size_t b) { return a != b && rs.cartan[a][b] != 0; };
  auto bond = [&](std::size_t a, std::size_t b) { return rs.cartan[a][b] * rs.cartan[b][a]; };
  auto len2 = [&](std::size_t a) { return dot(rs.simple_roots[a], rs.simple_roots[a]); };
  std::vector<int> degree(n, 0);
  int max_bond = n > 1 ? 1 : 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (adj(nodes[a], nodes[b])) {
        ++degree[a];
        max_bond = std::max(max_bond, bond(nodes[a], nodes[b]));
      }
  LeviComponent comp{Series::A, static_cast<int>(n), nodes};
  if (max_bond == 3) {
    comp.series = Series::G;
    return comp;
  }
  if (max_bond == 2) {
    Q lmax = 0;
    for (auto v : nodes) lmax = std::max(lmax, len2(v));
    std::size_t longs = 0;
    for (auto v : nodes) longs += (len2(v) == lmax);
    if (n == 2) {
      comp.series = len2(nodes[0]) == lmax ? Series::B : Series::C;
    } else if (n == 4 && longs == 2) {
      // F4 has its double bond in the middle; B4/C4 have it at an end.
      bool middle = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (adj(nodes[a], nodes[b]) && bond(nodes[a], nodes[b]) == 2 && degree[a] == 2 && degree[b] == 2)
            middle = true;
      comp.series = middle ? Series::F : (longs == 1 ? Series::B : Series::C);
    } else {
      comp.series = (n - longs == 1) ? Series::B : Series::C;
    }
    return comp;
  }
  auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) {
    // Chain: order from the end with the smaller index.
    if (n > 1) {
      std::size_t start = 0;
      for (std::size_t a = 0; a < n; ++a)
        if (degree[a] <= 1) {
          start = a;
          break;
        }
      std::vector<std::size_t> chain{nodes[start]};
      std::vector<bool> used(n, false);
      used[start] = true;
      for (std::size_t step = 1; step < n; ++step)
        for (std::size_t b = 0; b < n; ++b)
          if (!used[b] && adj(chain.back(), nodes[b])) {
            chain.push_back(nodes[b]);
            used[b] = true;
            break;
          }
      comp.nodes = chain;
    }
    return comp;
  }
  // Simply laced with a branch node: arm lengths decide D or E.
  const std::size_t c = static_cast<std::size_t>(branch - degree.begin());
  std::vector<int> arms;
  for (std::size_t b = 0; b < n; ++b) {
    if (!adj(nodes[c], nodes[b])) continue;
    int len = 1;
    std::size_t prev = c, cur = b;
    while (true) {
      std::size_t nxt = n;
      for (std::size_t d = 0; d < n; ++d)
        if (d != prev && adj(nodes[cur], nodes[d])) nxt = d;
      if (nxt == n) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  comp.series = (arms[0] == 1 && arms[1] == 1) ? Series::D : Series::E;
  return comp;
}

}  // namespace detail

/// Levi subgroup Z_G(lambda0) of a dominant weight: the simple roots
/// orthogonal to lambda0, split into connected components.
inline LeviDatum levi_datum(const RootSystem& rs, const Weight& lambda0) {
  if (!rs.is_dominant(lambda0)) throw DomainError("levi_datum: weight " + to_string(lambda0) + " is not dominant");
  LeviDatum ld;
  for (std::size_t i = 0; i < rs.ss_rank; ++i)
    if (lambda0[i] == 0) ld.simple_root_indices.push_back(i);
  ld.center_rank = rs.dim() - ld.simple_root_indices.size();
  std::vector<bool> done(rs.ss_rank, true);
  for (auto i : ld.simple_root_indices) done[i] = false;
  for (auto i : ld.simple_root_indices) {
    if (done[i]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> q{i};
    done[i] = true;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (auto u : ld.simple_root_indices)
        if (!done[u] && rs.cartan[v][u] != 0) {
          done[u] = true;
          q.push_back(u);
        }
    }
    ld.components.push_back(detail::classify_component(rs, comp));
  }
  return ld;
}

inline Subsystem levi_subsystem(const RootSystem& rs, const LeviDatum& ld) {
  return Subsystem(rs, ld.simple_root_indices);
}

// ---------------------------------------------------------------------------
// Character lattice

struct CharacterLattice {
  ZMat basis;  // rows in weight coordinates
  bool full_rank = false;
  /// The lattice equals the full weight lattice of the simply connected
  /// group times the torus character lattice.
  bool is_weight_lattice = false;
  /// Index in the weight lattice (0 when not of full rank).
  Z index = 0;

  std::size_t rank() const { return basis.size(); }

  /// Coordinates of v in the basis, or nullopt when v is not in the lattice.
  std::optional<ZVec> coordinates(const QVec& v) const {
    QMat rows;
    for (const auto& b : basis) rows.push_back(to_qvec(b));
    auto c = solve_combination(rows, v);
    if (!c) return std::nullopt;
    ZVec out(c->size());
    for (std::size_t i = 0; i < c->size(); ++i) {
      if ((*c)[i].get_den() != 1) return std::nullopt;
      out[i] = (*c)[i].get_num();
    }
    return out;
  }
  bool contains(const QVec& v) const { return coordinates(v).has_value(); }
  bool contains(const Weight& w) const {
    QVec v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i];
    return contains(v);
  }
};

inline QVec to_qvec(const Weight& w) {
  QVec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i];
  return v;
}

inline ZVec to_zvec(const Weight& w) {
  ZVec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i];
  return v;
}

/// The lattice sum Z(lambda_i - lambda_j) + Q spanned by the differences of
/// the highest weights and the root lattice.
inline CharacterLattice character_lattice(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  if (lambdas.empty()) throw DomainError("character_lattice: empty weight list");
  for (const auto& l : lambdas)
    if (!rs.is_dominant(l)) throw DomainError("character_lattice: weight " + to_string(l) + " is not dominant");
  ZMat gens;
  for (std::size_t j = 0; j < rs.ss_rank; ++j) gens.push_back(to_zvec(rs.simple_root(j)));
  for (std::size_t i = 1; i < lambdas.size(); ++i) gens.push_back(to_zvec(lambdas[i] - lambdas[0]));
  CharacterLattice cl;
  cl.basis = hermite_basis(std::move(gens), rs.dim());
  cl.full_rank = cl.basis.size() == rs.dim();
  if (cl.full_rank) {
    Z idx = 1;
    for (std::size_t i = 0; i < cl.basis.size(); ++i) idx *= cl.basis[i][i];
    cl.index = abs(idx);
    cl.is_weight_lattice = cl.index == 1;
  }
  return cl;
}

}  // namespace rgc
