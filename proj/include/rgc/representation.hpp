#pragma once

// Weight systems (Freudenthal), tensor products (Klimyk) and restriction to
// standard Levi subgroups. Every routine works over a Subsystem, so the same
// code handles G itself and its Levi subgroups; central coordinates are
// carried along untouched.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/numeric.hpp"
#include "rgc/root_system.hpp"
#include "rgc/weyl.hpp"

namespace rgc {

using Multiplicity = std::int64_t;
using Decomposition = std::map<Weight, Multiplicity>;

struct WeightSystem {
  Weight highest;
  std::map<Weight, Multiplicity> dominant;  // dominant weights only
  std::map<Weight, Multiplicity> entries;   // every weight

  Multiplicity multiplicity(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  Multiplicity dimension() const {
    Multiplicity d = 0;
    for (const auto& [w, m] : entries) d += m;
    return d;
  }
};

/// Weyl dimension formula for the subsystem: prod (lambda+rho, a^vee)/(rho, a^vee).
inline Z weyl_dimension(const Subsystem& sub, const Weight& lambda) {
  Z num = 1, den = 1;
  for (std::size_t k = 0; k < sub.num_positive(); ++k) {
    const auto& r = sub.positive_root(k);
    long a = 0, b = 0;
    for (auto j : sub.simple()) {
      a += static_cast<long>(r.coroot_coords[j]) * (lambda[j] + 1);
      b += r.coroot_coords[j];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

inline Z weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  return weyl_dimension(Subsystem::full(rs), lambda);
}

namespace detail {

inline void require_dominant(const Subsystem& sub, const Weight& w, const char* who) {
  if (w.size() != sub.root_system().dim())
    throw DomainError(std::string(who) + ": weight has " + std::to_string(w.size()) + " coordinates, expected " +
                      std::to_string(sub.root_system().dim()));
  if (!sub.is_dominant(w)) throw DomainError(std::string(who) + ": weight " + to_string(w) + " is not dominant");
}

}  // namespace detail

/// Dominant weights of V(lambda) with multiplicities by Freudenthal's formula.
inline std::map<Weight, Multiplicity> dominant_multiplicities(const Subsystem& sub, const Weight& lambda) {
  detail::require_dominant(sub, lambda, "weight_system");
  const RootSystem& rs = sub.root_system();

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::vector<Weight> order{lambda};
  std::unordered_map<Weight, std::size_t, WeightHash> seen{{lambda, 0}};
  for (std::size_t cur = 0; cur < order.size(); ++cur)
    for (std::size_t k = 0; k < sub.num_positive(); ++k) {
      Weight nu = order[cur] - sub.positive_root(k).weight;
      if (!sub.is_dominant(nu) || seen.count(nu)) continue;
      seen.emplace(nu, order.size());
      order.push_back(nu);
    }
  // Process by increasing depth (lambda - nu, 2 rho-check) so that every
  // weight nu + k alpha is already known.
  auto depth = [&](const Weight& nu) {
    long d = 0;
    Weight diff = lambda - nu;
    for (std::size_t k = 0; k < sub.num_positive(); ++k) d += coroot_pairing(sub.positive_root(k), diff);
    return d;
  };
  std::stable_sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  std::unordered_map<Weight, Multiplicity, WeightHash> mult;
  auto lookup = [&](const Weight& w) -> Multiplicity {
    auto it = mult.find(dominant_reflect(sub, w).dominant);
    return it == mult.end() ? 0 : it->second;
  };
  const Weight& two_rho = sub.two_rho();
  mult[lambda] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& nu = order[idx];
    const Weight diff = lambda - nu;
    const std::int64_t denom = rs.ip(diff, lambda + nu) + rs.ip(diff, two_rho);
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < sub.num_positive(); ++k) {
      const Weight& alpha = sub.positive_root(k).weight;
      Weight w = nu + alpha;
      while (true) {
        Multiplicity m = lookup(w);
        if (m == 0) break;
        sum += m * rs.ip(w, alpha);
        w += alpha;
      }
    }
    sum *= 2;
    if (denom <= 0 || sum % denom != 0) throw ConsistencyError("Freudenthal recursion produced a non-integer");
    mult[nu] = sum / denom;
  }
  std::map<Weight, Multiplicity> out;
  for (const auto& [w, m] : mult)
    if (m > 0) out.emplace(w, m);
  return out;
}

inline WeightSystem weight_system(const Subsystem& sub, const Weight& lambda) {
  WeightSystem ws;
  ws.highest = lambda;
  ws.dominant = dominant_multiplicities(sub, lambda);
  for (const auto& [nu, m] : ws.dominant)
    for (const auto& w : weyl_orbit(sub, nu)) ws.entries.emplace(w, m);
  return ws;
}

inline WeightSystem weight_system(const RootSystem& rs, const Weight& lambda) {
  return weight_system(Subsystem::full(rs), lambda);
}

/// V(nu) tensor M, where M is given by its full weight system (Klimyk).
inline Decomposition klimyk(const Subsystem& sub, const Weight& nu, const std::map<Weight, Multiplicity>& weights) {
  std::map<Weight, Multiplicity> acc;
  for (const auto& [mu, m] : weights) {
    auto d = dot_dominant(sub, nu + mu);
    if (!d) continue;
    acc[d->first] += d->second * m;
  }
  Decomposition out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw ConsistencyError("Klimyk formula produced a negative multiplicity at " + to_string(w));
    if (m > 0) out.emplace(w, m);
  }
  return out;
}

inline Decomposition tensor_decompose(const Subsystem& sub, const Weight& lambda, const Weight& mu) {
  detail::require_dominant(sub, lambda, "tensor_decompose");
  detail::require_dominant(sub, mu, "tensor_decompose");
  const bool swap = weyl_dimension(sub, lambda) < weyl_dimension(sub, mu);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  return klimyk(sub, big, weight_system(sub, small).entries);
}

inline Decomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  return tensor_decompose(Subsystem::full(rs), lambda, mu);
}

// ---------------------------------------------------------------------------
// Levi restriction

struct IrrepLabel {
  bool whole_group = false;
  std::vector<std::size_t> levi_simple_roots;  // meaningful when !whole_group
  Weight highest_weight;

  bool operator==(const IrrepLabel&) const = default;
};

/// Restricts the weight multiset ws to the subsystem and decomposes it.
inline Decomposition restrict_to(const Subsystem& sub, const WeightSystem& ws) {
  return klimyk(sub, sub.root_system().zero(), ws.entries);
}

/// L-highest weights of V(lambda) with multiplicities, sorted by decreasing
/// (mu, 2 rho_G) so that lambda comes first.
inline std::vector<std::pair<IrrepLabel, Multiplicity>> branch_to_levi(const RootSystem& rs, const Weight& lambda,
                                                                      const LeviDatum& levi) {
  if (!rs.is_dominant(lambda)) throw DomainError("branch_to_levi: weight " + to_string(lambda) + " is not dominant");
  Subsystem sub = levi_subsystem(rs, levi);
  Decomposition dec = restrict_to(sub, weight_system(rs, lambda));
  const Weight two_rho = Subsystem::full(rs).two_rho();
  std::vector<std::pair<IrrepLabel, Multiplicity>> out;
  for (const auto& [w, m] : dec) out.push_back({IrrepLabel{false, levi.simple_root_indices, w}, m});
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return rs.ip(a.first.highest_weight, two_rho) > rs.ip(b.first.highest_weight, two_rho);
  });
  return out;
}

/// Generators lambda_i - lambda0 (i with lambda_i != lambda0) and -alpha_j
/// for the simple roots outside the Levi.
inline std::vector<Weight> lgens_generators(const RootSystem& rs, const std::vector<Weight>& lambdas,
                                            const Weight& lambda0, const LeviDatum& levi) {
  if (std::find(lambdas.begin(), lambdas.end(), lambda0) == lambdas.end())
    throw DomainError("lgens_generators: " + to_string(lambda0) + " is not among the highest weights");
  std::vector<Weight> out;
  for (const auto& l : lambdas)
    if (l != lambda0) out.push_back(l - lambda0);
  for (std::size_t j = 0; j < rs.ss_rank; ++j)
    if (!std::binary_search(levi.simple_root_indices.begin(), levi.simple_root_indices.end(), j))
      out.push_back(-rs.simple_root(j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rgc
