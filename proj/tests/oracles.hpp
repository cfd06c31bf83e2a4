#pragma once

// Independent brute-force oracles used only by the tests. None of them call
// the Freudenthal, Klimyk, double-description or Hilbert-basis code paths.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "rgc/numeric.hpp"
#include "rgc/root_system.hpp"

namespace oracle {

using rgc::Q;
using rgc::QVec;
using rgc::Weight;
using rgc::Z;

/// Weyl group elements as pairs (w(rho), w(x)) for one extra vector x,
/// generated by breadth-first search on words.
struct WeylElement {
  Weight image_rho;
  Weight image_x;
  int sign;
};

inline Weight reflect(const rgc::RootSystem& rs, Weight w, std::size_t j) {
  const int k = w[j];
  for (std::size_t i = 0; i < rs.ss_rank; ++i) w[i] -= k * rs.cartan[i][j];
  return w;
}

inline std::vector<WeylElement> weyl_elements(const rgc::RootSystem& rs, const Weight& x) {
  Weight rho = rs.zero();
  for (std::size_t i = 0; i < rs.ss_rank; ++i) rho[i] = 1;
  std::vector<WeylElement> all{{rho, x, 1}};
  std::set<Weight> seen{rho};
  for (std::size_t cur = 0; cur < all.size(); ++cur)
    for (std::size_t j = 0; j < rs.ss_rank; ++j) {
      WeylElement e{reflect(rs, all[cur].image_rho, j), reflect(rs, all[cur].image_x, j), -all[cur].sign};
      if (seen.insert(e.image_rho).second) all.push_back(e);
    }
  return all;
}

/// Coefficients of a root-lattice element in the simple roots, or empty
/// when the element is not in the root lattice.
inline std::vector<int> root_coords(const rgc::RootSystem& rs, const Weight& w) {
  // w_i = sum_j cartan[i][j] c_j; solve exactly.
  rgc::QMat rows(rs.ss_rank, QVec(rs.ss_rank));
  for (std::size_t j = 0; j < rs.ss_rank; ++j)
    for (std::size_t i = 0; i < rs.ss_rank; ++i) rows[j][i] = rs.cartan[i][j];
  QVec target(rs.ss_rank);
  for (std::size_t i = 0; i < rs.ss_rank; ++i) target[i] = w[i];
  auto c = rgc::solve_combination(rows, target);
  if (!c) return {};
  std::vector<int> out;
  for (const auto& q : *c) {
    if (q.get_den() != 1) return {};
    out.push_back(static_cast<int>(q.get_num().get_si()));
  }
  return out;
}

/// Kostant's partition function with memoization.
class Partition {
 public:
  explicit Partition(const rgc::RootSystem& rs) : rs_(rs) {}
  std::int64_t operator()(const std::vector<int>& gamma) { return count(gamma, 0); }

 private:
  std::int64_t count(const std::vector<int>& gamma, std::size_t from) {
    for (int c : gamma)
      if (c < 0) return 0;
    if (std::all_of(gamma.begin(), gamma.end(), [](int c) { return c == 0; })) return 1;
    if (from >= rs_.positive_roots.size()) return 0;
    auto key = gamma;
    key.push_back(static_cast<int>(from));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = 0;
    std::vector<int> g = gamma;
    const auto& beta = rs_.positive_roots[from].coords;
    while (true) {
      total += count(g, from + 1);
      bool ok = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] -= beta[i];
        if (g[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }
  const rgc::RootSystem& rs_;
  std::map<std::vector<int>, std::int64_t> memo_;
};

/// Dominant weight multiplicities of V(lambda) via Kostant's formula.
inline std::map<Weight, std::int64_t> kostant_dominant(const rgc::RootSystem& rs, const Weight& lambda) {
  Weight rho = rs.zero();
  for (std::size_t i = 0; i < rs.ss_rank; ++i) rho[i] = 1;
  auto elems = weyl_elements(rs, lambda + rho);
  Partition part(rs);
  std::map<Weight, std::int64_t> out;
  // Dominant weights below lambda are connected by subtracting positive roots.
  std::vector<Weight> stack{lambda};
  std::set<Weight> seen{lambda};
  while (!stack.empty()) {
    Weight mu = stack.back();
    stack.pop_back();
    std::int64_t m = 0;
    for (const auto& e : elems) {
      auto c = root_coords(rs, e.image_x - (mu + rho));
      if (!c.empty()) m += e.sign * part(c);
    }
    if (m == 0) continue;
    out[mu] = m;
    for (const auto& beta : rs.positive_roots) {
      Weight nu = mu - beta.weight;
      if (rs.is_dominant(nu) && seen.insert(nu).second) stack.push_back(nu);
    }
  }
  return out;
}

/// All weights with multiplicities, by expanding dominant weights into orbits.
inline std::map<Weight, std::int64_t> expand(const rgc::RootSystem& rs, const std::map<Weight, std::int64_t>& dom) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [mu, m] : dom) {
    std::set<Weight> orbit{mu};
    std::vector<Weight> st{mu};
    while (!st.empty()) {
      Weight w = st.back();
      st.pop_back();
      for (std::size_t j = 0; j < rs.ss_rank; ++j) {
        Weight r = reflect(rs, w, j);
        if (orbit.insert(r).second) st.push_back(r);
      }
    }
    for (const auto& w : orbit) out[w] = m;
  }
  return out;
}

/// Tensor product decomposition by multiplying characters and peeling off
/// dominant leaders. Only dominant parts of characters are tracked.
inline std::map<Weight, std::int64_t> character_product(
    const rgc::RootSystem& rs, const Weight& lambda, const Weight& mu,
    const std::function<std::map<Weight, std::int64_t>(const Weight&)>& dominant_of) {
  auto full_l = expand(rs, dominant_of(lambda));
  auto dom_m = dominant_of(mu);
  auto full_m = expand(rs, dom_m);
  // Dominant weights of the product lie below lambda + mu.
  std::map<Weight, std::int64_t> prod;
  for (const auto& [a, ma] : full_l)
    for (const auto& [b, mb] : full_m) {
      Weight s = a + b;
      if (rs.is_dominant(s)) prod[s] += ma * mb;
    }
  Weight rho = rs.zero();
  for (std::size_t i = 0; i < rs.ss_rank; ++i) rho[i] = 1;
  std::map<Weight, std::int64_t> out;
  while (!prod.empty()) {
    // The leader maximizes the pairing with the regular coweight rho-check.
    const Weight* best = nullptr;
    Q best_val;
    for (const auto& [w, m] : prod) {
      Q v = rs.inner_product(w, rho);
      if (!best || v > best_val) best = &w, best_val = v;
    }
    Weight lead = *best;
    std::int64_t k = prod[lead];
    out[lead] = k;
    for (const auto& [w, m] : dominant_of(lead)) {
      prod[w] -= k * m;
      if (prod[w] == 0) prod.erase(w);
    }
    for (const auto& [w, m] : prod)
      if (m < 0) throw std::logic_error("character product peeled into negative multiplicity");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small-integer cone oracles.

using IVec = std::vector<std::int64_t>;

inline std::int64_t idot(const IVec& a, const IVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t det(std::vector<IVec> m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline IVec primitive(IVec v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Facet normals of a full-dimensional cone: hyperplanes through d-1
/// generators with every generator on the nonnegative side.
inline std::set<IVec> facets_brute_force(const std::vector<IVec>& gens, std::size_t d) {
  std::set<IVec> out;
  const std::size_t n = gens.size();
  if (d == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      pos |= g[0] > 0;
      neg |= g[0] < 0;
    }
    if (pos && !neg) out.insert({1});
    if (neg && !pos) out.insert({-1});
    return out;
  }
  std::vector<std::size_t> pick(d - 1);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == d - 1) {
      IVec normal(d);
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<IVec> minor;
        for (auto i : pick) {
          IVec row;
          for (std::size_t t = 0; t < d; ++t)
            if (t != c) row.push_back(gens[i][t]);
          minor.push_back(row);
        }
        normal[c] = ((c % 2) ? -1 : 1) * det(minor);
      }
      if (std::all_of(normal.begin(), normal.end(), [](std::int64_t x) { return x == 0; })) return;
      normal = primitive(normal);
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        auto v = idot(normal, g);
        pos |= v > 0;
        neg |= v < 0;
      }
      if (pos && neg) return;
      if (neg)
        for (auto& x : normal) x = -x;
      out.insert(normal);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      pick[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

/// Hilbert basis of Z^d intersected with a pointed full-dimensional cone,
/// by enumerating the box spanned by the zonotope of the generators.
inline std::set<IVec> hilbert_basis_box(const std::vector<IVec>& gens, std::size_t d) {
  auto facets = facets_brute_force(gens, d);
  auto inside = [&](const IVec& x) {
    for (const auto& f : facets)
      if (idot(f, x) < 0) return false;
    return true;
  };
  IVec lo(d, 0), hi(d, 0);
  for (const auto& g : gens)
    for (std::size_t t = 0; t < d; ++t) (g[t] < 0 ? lo[t] : hi[t]) += g[t];
  std::vector<IVec> pts;
  IVec x = lo;
  while (true) {
    if (inside(x) && std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) pts.push_back(x);
    std::size_t t = 0;
    while (t < d && x[t] == hi[t]) x[t] = lo[t], ++t;
    if (t == d) break;
    ++x[t];
  }
  std::set<IVec> out;
  for (const auto& p : pts) {
    bool reducible = false;
    for (const auto& q : pts) {
      if (q == p) continue;
      IVec diff(d);
      bool zero = true;
      for (std::size_t t = 0; t < d; ++t) diff[t] = p[t] - q[t], zero &= diff[t] == 0;
      if (!zero && inside(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbits of SL_n x SL_n on P(Mat_n).

/// Dimension of the orbit of the rank-r projector diag(1,..,1,0,..,0) in
/// P(Mat_n), from the rank of the tangent map (A,B) -> AX - XB plus the line of X.
inline int matrix_orbit_dimension(int n, int r) {
  const int nn = n * n;
  auto idx = [n](int i, int j) { return i * n + j; };
  std::vector<std::vector<mpq_class>> rows;
  auto x = [&](int i, int j) { return (i == j && i < r) ? 1 : 0; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // A = E_ab contributes E_ab X; B = E_ab contributes -X E_ab.
      std::vector<mpq_class> left(nn, 0), right(nn, 0);
      for (int j = 0; j < n; ++j) left[idx(a, j)] += x(b, j);
      for (int i = 0; i < n; ++i) right[idx(i, b)] -= x(i, a);
      rows.push_back(left);
      rows.push_back(right);
    }
  std::vector<mpq_class> line(nn, 0);
  for (int i = 0; i < r; ++i) line[idx(i, i)] = 1;
  rows.push_back(line);
  int rank = 0;
  for (int c = 0; c < nn && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c] / rows[rank][c];
      for (int t = 0; t < nn; ++t) rows[i][t] -= f * rows[rank][t];
    }
    ++rank;
  }
  return rank - 1;
}

/// Saturation test for the semigroup generated by small integer vectors in
/// Z^2: every lattice point of the cone in a box is a sum of generators.
inline bool saturated_2d(const std::vector<IVec>& gens, int box) {
  auto facets = facets_brute_force(gens, 2);
  std::set<IVec> reach{{0, 0}};
  std::vector<IVec> todo{{0, 0}};
  while (!todo.empty()) {
    IVec p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      IVec q{p[0] + g[0], p[1] + g[1]};
      if (std::abs(q[0]) > 2 * box || std::abs(q[1]) > 2 * box) continue;
      if (reach.insert(q).second) todo.push_back(q);
    }
  }
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b) {
      IVec q{a, b};
      bool in = true;
      for (const auto& f : facets) in &= idot(f, q) >= 0;
      if (in && !reach.count(q)) return false;
    }
  return true;
}

}  // namespace oracle
