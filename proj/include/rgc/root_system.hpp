#pragma once

// Root data for a reductive group given by its LieType. Simple roots are
// numbered so that V(omega_1) has minimal dimension: Bourbaki numbering for
// the classical series and G2, reversed Bourbaki numbering for F4, and the
// chain-first numbering for E6/E7/E8 (alpha_1 ... alpha_{l-1} form the long
// chain, alpha_l hangs off the branch node).

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/lie_type.hpp"
#include "rgc/numeric.hpp"
#include "rgc/weight.hpp"

namespace rgc {

struct PositiveRoot {
  Weight weight;                   // fundamental-weight coordinates
  std::vector<int> coords;         // coefficients in the simple roots
  std::vector<int> coroot_coords;  // coefficients of beta^vee in simple coroots
  int height = 0;
};

struct FactorInfo {
  SimpleFactor type;
  std::size_t first = 0;          // index of its first simple root
  std::size_t ambient_first = 0;  // offset of its ambient block
  std::size_t ambient_dim = 0;
};

class RootSystem {
 public:
  LieType type;
  std::size_t ss_rank = 0;     // number of simple roots
  std::size_t torus_rank = 0;  // central torus dimension
  std::vector<FactorInfo> factors;

  /// cartan[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> cartan;

  /// Ambient realization: rows are vectors in Q^ambient_dim. The torus
  /// coordinates come last; torus character k is the unit vector
  /// ambient_dim - torus_rank + k.
  std::size_t ambient_dim = 0;
  QMat simple_roots;
  QMat simple_coroots;
  QMat fundamental_weights;

  /// W-invariant inner product on weight coordinates (fundamental weights
  /// then torus characters), and an integer multiple of it.
  QMat inner;
  std::vector<std::vector<std::int64_t>> inner_int;
  std::int64_t inner_scale = 1;

  std::vector<PositiveRoot> positive_roots;

  std::size_t dim() const { return ss_rank + torus_rank; }
  std::size_t num_roots() const { return 2 * positive_roots.size(); }
  std::size_t group_dimension() const { return num_roots() + dim(); }

  Weight zero() const { return Weight(dim()); }
  Weight fundamental(std::size_t i) const {
    Weight w(dim());
    w[i] = 1;
    return w;
  }
  Weight torus_character(std::size_t k) const {
    Weight w(dim());
    w[ss_rank + k] = 1;
    return w;
  }
  /// alpha_j in weight coordinates: column j of the Cartan matrix.
  Weight simple_root(std::size_t j) const {
    Weight w(dim());
    for (std::size_t i = 0; i < ss_rank; ++i) w[i] = cartan[i][j];
    return w;
  }

  /// Scaled inner product (inner_scale * (a, b)); exact integer.
  std::int64_t ip(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < dim(); ++j) row += inner_int[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }
  Q inner_product(const Weight& a, const Weight& b) const {
    Q q(ip(a, b), inner_scale);
    q.canonicalize();
    return q;
  }
  Q inner_product(const QVec& a, const QVec& b) const {
    Q s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += a[i] * inner[i][j] * b[j];
    }
    return s;
  }

  bool is_dominant(const Weight& w) const {
    for (std::size_t i = 0; i < ss_rank; ++i)
      if (w[i] < 0) return false;
    return true;
  }

  QVec to_ambient(const Weight& w) const {
    QVec out(ambient_dim, Q(0));
    for (std::size_t i = 0; i < ss_rank; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t k = 0; k < ambient_dim; ++k) out[k] += w[i] * fundamental_weights[i][k];
    }
    for (std::size_t t = 0; t < torus_rank; ++t) out[ambient_dim - torus_rank + t] += w[ss_rank + t];
    return out;
  }

  /// Rational weight coordinates of an ambient vector (pairings with the
  /// simple coroots, then torus coordinates). Components of the ambient
  /// vector orthogonal to the root span are dropped.
  QVec from_ambient(const QVec& v) const {
    QVec out(dim(), Q(0));
    for (std::size_t i = 0; i < ss_rank; ++i) out[i] = dot(v, simple_coroots[i]);
    for (std::size_t t = 0; t < torus_rank; ++t) out[ss_rank + t] = v[ambient_dim - torus_rank + t];
    return out;
  }

  /// Exact integral weight for an ambient vector; throws if not integral.
  Weight weight_from_ambient(const QVec& v) const {
    QVec q = from_ambient(v);
    Weight w(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (q[i].get_den() != 1) throw DomainError("ambient vector is not an integral weight");
      w[i] = static_cast<std::int32_t>(q[i].get_num().get_si());
    }
    return w;
  }

  std::size_t factor_of(std::size_t simple_index) const {
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (simple_index >= factors[f].first &&
          simple_index < factors[f].first + static_cast<std::size_t>(factors[f].type.rank))
        return f;
    throw DomainError("simple root index out of range");
  }

  /// Highest root of a simple factor.
  Weight highest_root(std::size_t factor) const {
    const PositiveRoot* best = nullptr;
    for (const auto& r : positive_roots) {
      bool inside = true;
      for (std::size_t j = 0; j < ss_rank; ++j)
        if (r.coords[j] != 0 && factor_of(j) != factor) inside = false;
      if (inside && (!best || r.height > best->height)) best = &r;
    }
    return best->weight;
  }

  /// |W| from the closed-form order of each simple factor.
  std::uint64_t weyl_group_order() const {
    std::uint64_t order = 1;
    for (const auto& f : factors) {
      const std::uint64_t l = static_cast<std::uint64_t>(f.type.rank);
      std::uint64_t fact = 1;
      for (std::uint64_t k = 2; k <= l; ++k) fact *= k;
      switch (f.type.series) {
        case Series::A: order *= fact * (l + 1); break;
        case Series::B:
        case Series::C: order *= fact << l; break;
        case Series::D: order *= fact << (l - 1); break;
        case Series::E: order *= (l == 6 ? 51840ull : l == 7 ? 2903040ull : 696729600ull); break;
        case Series::F: order *= 1152; break;
        case Series::G: order *= 12; break;
      }
    }
    return order;
  }
};

namespace detail {

inline QVec unit(std::size_t n, std::size_t i, Q v = 1) {
  QVec x(n, Q(0));
  x[i] = v;
  return x;
}

/// Simple roots of one simple factor in its own ambient space.
inline QMat factor_simple_roots(const SimpleFactor& f) {
  const std::size_t l = static_cast<std::size_t>(f.rank);
  QMat r;
  auto diff = [](std::size_t n, std::size_t i, std::size_t j) {
    QVec x(n, Q(0));
    x[i] = 1;
    x[j] = -1;
    return x;
  };
  switch (f.series) {
    case Series::A:
      for (std::size_t i = 0; i < l; ++i) r.push_back(diff(l + 1, i, i + 1));
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < l; ++i) r.push_back(diff(l, i, i + 1));
      r.push_back(unit(l, l - 1));
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < l; ++i) r.push_back(diff(l, i, i + 1));
      r.push_back(unit(l, l - 1, 2));
      break;
    case Series::D:
      for (std::size_t i = 0; i + 1 < l; ++i) r.push_back(diff(l, i, i + 1));
      {
        QVec x(l, Q(0));
        x[l - 2] = 1;
        x[l - 1] = 1;
        r.push_back(x);
      }
      break;
    case Series::G:
      r.push_back(QVec{1, -1, 0});
      r.push_back(QVec{-2, 1, 1});
      break;
    case Series::F: {
      const Q h(1, 2);
      r.push_back(QVec{h, -h, -h, -h});
      r.push_back(QVec{0, 0, 0, 1});
      r.push_back(QVec{0, 0, 1, -1});
      r.push_back(QVec{0, 1, -1, 0});
      break;
    }
    case Series::E: {
      // Bourbaki simple roots of E8 in R^8; E6/E7 use the first 6/7.
      const Q h(1, 2);
      QMat b(8, QVec(8, Q(0)));
      b[0] = QVec{h, -h, -h, -h, -h, -h, -h, h};
      b[1][0] = 1, b[1][1] = 1;
      for (std::size_t k = 2; k < 8; ++k) {
        b[k][k - 1] = 1;
        b[k][k - 2] = -1;
      }
      static const std::map<int, std::vector<int>> order = {
          {6, {1, 3, 4, 5, 6, 2}},
          {7, {7, 6, 5, 4, 3, 1, 2}},
          {8, {8, 7, 6, 5, 4, 3, 1, 2}},
      };
      for (int k : order.at(f.rank)) r.push_back(b[static_cast<std::size_t>(k - 1)]);
      break;
    }
  }
  return r;
}

}  // namespace detail

/// Builds the full root datum. Throws InputError for invalid types.
inline RootSystem build_root_system(const LieType& type) {
  validate(type);
  RootSystem rs;
  rs.type = type;
  rs.torus_rank = static_cast<std::size_t>(type.torus_rank);

  std::vector<QMat> blocks;
  for (const auto& f : type.factors) {
    FactorInfo info;
    info.type = f;
    info.first = rs.ss_rank;
    info.ambient_first = rs.ambient_dim;
    blocks.push_back(detail::factor_simple_roots(f));
    info.ambient_dim = blocks.back().front().size();
    rs.ss_rank += static_cast<std::size_t>(f.rank);
    rs.ambient_dim += info.ambient_dim;
    rs.factors.push_back(info);
  }
  rs.ambient_dim += rs.torus_rank;

  const std::size_t l = rs.ss_rank;
  for (std::size_t fi = 0; fi < rs.factors.size(); ++fi) {
    for (const auto& row : blocks[fi]) {
      QVec v(rs.ambient_dim, Q(0));
      for (std::size_t k = 0; k < row.size(); ++k) v[rs.factors[fi].ambient_first + k] = row[k];
      rs.simple_roots.push_back(std::move(v));
    }
  }
  for (const auto& a : rs.simple_roots) {
    Q n2 = dot(a, a);
    QVec c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = 2 * a[k] / n2;
    rs.simple_coroots.push_back(std::move(c));
  }
  rs.cartan.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      Q p = dot(rs.simple_roots[j], rs.simple_coroots[i]);
      if (p.get_den() != 1) throw ConsistencyError("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(p.get_num().get_si());
    }

  // omega_i = sum_k M_ik alpha_k with M = (cartan^T)^{-1}.
  if (l > 0) {
    QMat ct(l, QVec(l));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) ct[i][j] = rs.cartan[j][i];
    auto m = inverse(ct);
    if (!m) throw ConsistencyError("singular Cartan matrix");
    for (std::size_t i = 0; i < l; ++i) {
      QVec w(rs.ambient_dim, Q(0));
      for (std::size_t k = 0; k < l; ++k)
        for (std::size_t a = 0; a < rs.ambient_dim; ++a) w[a] += (*m)[i][k] * rs.simple_roots[k][a];
      rs.fundamental_weights.push_back(std::move(w));
    }
  }

  const std::size_t n = rs.dim();
  rs.inner.assign(n, QVec(n, Q(0)));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      rs.inner[i][j] = dot(rs.fundamental_weights[i], rs.fundamental_weights[j]);
  for (std::size_t t = 0; t < rs.torus_rank; ++t) rs.inner[l + t][l + t] = 1;
  Z den = 1;
  for (const auto& row : rs.inner)
    for (const auto& x : row) den = lcm(den, x.get_den());
  rs.inner_scale = den.get_si();
  rs.inner_int.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Q s = rs.inner[i][j] * den;
      rs.inner_int[i][j] = s.get_num().get_si();
    }

  // Positive roots by increasing height using root strings.
  std::map<std::vector<int>, std::size_t> index;
  auto pairing = [&](const std::vector<int>& coords, std::size_t i) {
    int s = 0;
    for (std::size_t j = 0; j < l; ++j) s += coords[j] * rs.cartan[i][j];
    return s;
  };
  auto add_root = [&](std::vector<int> coords) {
    PositiveRoot r;
    r.coords = coords;
    r.height = std::accumulate(coords.begin(), coords.end(), 0);
    r.weight = Weight(n);
    for (std::size_t i = 0; i < l; ++i) r.weight[i] = pairing(coords, i);
    index.emplace(coords, rs.positive_roots.size());
    rs.positive_roots.push_back(std::move(r));
  };
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> c(l, 0);
    c[i] = 1;
    add_root(c);
  }
  for (std::size_t cur = 0; cur < rs.positive_roots.size(); ++cur) {
    const std::vector<int> base = rs.positive_roots[cur].coords;
    for (std::size_t i = 0; i < l; ++i) {
      int p = 0;
      std::vector<int> probe = base;
      while (true) {
        probe[i] -= 1;
        if (probe[i] < 0 || !index.count(probe)) break;
        ++p;
      }
      int q = p - pairing(base, i);
      if (q <= 0) continue;
      std::vector<int> up = base;
      up[i] += 1;
      if (!index.count(up)) add_root(up);
    }
  }
  // Coroot coordinates: beta^vee = sum_j c_j (alpha_j, alpha_j)/(beta, beta) alpha_j^vee.
  for (auto& r : rs.positive_roots) {
    QVec amb(rs.ambient_dim, Q(0));
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t a = 0; a < rs.ambient_dim; ++a) amb[a] += r.coords[j] * rs.simple_roots[j][a];
    Q b2 = dot(amb, amb);
    r.coroot_coords.resize(l);
    for (std::size_t j = 0; j < l; ++j) {
      Q c = r.coords[j] * dot(rs.simple_roots[j], rs.simple_roots[j]) / b2;
      if (c.get_den() != 1) throw ConsistencyError("non-integral coroot coordinate");
      r.coroot_coords[j] = static_cast<int>(c.get_num().get_si());
    }
  }
  return rs;
}

/// <mu, beta^vee> for a positive root.
inline int coroot_pairing(const PositiveRoot& beta, const Weight& mu) {
  int s = 0;
  for (std::size_t j = 0; j < beta.coroot_coords.size(); ++j) s += beta.coroot_coords[j] * mu[j];
  return s;
}

}  // namespace rgc
