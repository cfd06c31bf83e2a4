#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rgc/representation.hpp"

using namespace rgc;

namespace {

std::vector<Weight> box(const RootSystem& rs, int bound) {
  std::vector<Weight> out;
  Weight w = rs.zero();
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rs.ss_rank && w[i] == bound) w[i++] = 0;
    if (i == rs.ss_rank) break;
    ++w[i];
  }
  return out;
}

// Dimension from dominant multiplicities and orbit sizes, without expanding.
Z dimension_from_dominant(const RootSystem& rs, const std::map<Weight, Multiplicity>& dom) {
  Z d = 0;
  for (const auto& [w, m] : dom) d += Z(static_cast<long>(m)) * static_cast<unsigned long>(weyl_orbit(rs, w).size());
  return d;
}

}  // namespace

TEST(WeightSystem, A1Strings) {
  auto rs = build_root_system(parse_lie_type("A1"));
  auto ws = weight_system(rs, Weight{2});
  std::map<Weight, Multiplicity> expect{{Weight{2}, 1}, {Weight{0}, 1}, {Weight{-2}, 1}};
  EXPECT_EQ(ws.entries, expect);
}

TEST(WeightSystem, G2SevenDimensional) {
  auto rs = build_root_system(parse_lie_type("G2"));
  auto ws = weight_system(rs, rs.fundamental(0));
  EXPECT_EQ(ws.dimension(), 7);
  EXPECT_EQ(ws.multiplicity(rs.zero()), 1);
  EXPECT_EQ(weyl_dimension(rs, rs.fundamental(0)), 7);
  EXPECT_EQ(weyl_dimension(rs, rs.fundamental(1)), 14);
}

TEST(WeightSystem, B3Spinor) {
  auto rs = build_root_system(parse_lie_type("B3"));
  auto ws = weight_system(rs, rs.fundamental(2));
  ASSERT_EQ(ws.entries.size(), 8u);
  std::set<QVec> amb;
  for (const auto& [w, m] : ws.entries) {
    EXPECT_EQ(m, 1);
    amb.insert(rs.to_ambient(w));
  }
  for (int s = 0; s < 8; ++s) {
    QVec v{Q(s & 1 ? 1 : -1, 2), Q(s & 2 ? 1 : -1, 2), Q(s & 4 ? 1 : -1, 2)};
    for (auto& x : v) x.canonicalize();
    EXPECT_TRUE(amb.count(v));
  }
}

TEST(WeightSystem, RejectsNonDominant) {
  auto rs = build_root_system(parse_lie_type("A2"));
  EXPECT_THROW(weight_system(rs, Weight{-1, 0}), DomainError);
  EXPECT_THROW(weight_system(rs, Weight{1}), DomainError);
}

TEST(WeightSystem, MatchesKostantOracle) {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"}) {
    auto rs = build_root_system(parse_lie_type(name));
    for (const auto& lam : box(rs, 2)) {
      auto got = dominant_multiplicities(Subsystem::full(rs), lam);
      EXPECT_EQ(got, oracle::kostant_dominant(rs, lam)) << name << " " << to_string(lam);
    }
  }
}

TEST(WeightSystem, DimensionConservationRankFour) {
  for (const char* name : {"A4", "B4", "C4", "D4", "F4"}) {
    auto rs = build_root_system(parse_lie_type(name));
    const int bound = std::string(name) == "F4" ? 1 : 3;
    for (const auto& lam : box(rs, bound)) {
      auto dom = dominant_multiplicities(Subsystem::full(rs), lam);
      EXPECT_EQ(dimension_from_dominant(rs, dom), weyl_dimension(rs, lam)) << name << " " << to_string(lam);
    }
  }
}

TEST(WeightSystem, WeylInvariance) {
  auto rs = build_root_system(parse_lie_type("C3"));
  auto ws = weight_system(rs, Weight{1, 0, 1});
  for (const auto& [w, m] : ws.entries)
    for (std::size_t j = 0; j < rs.ss_rank; ++j) EXPECT_EQ(ws.multiplicity(reflect(rs, w, j)), m);
  EXPECT_EQ(ws.multiplicity(ws.highest), 1);
}

TEST(Tensor, Examples) {
  auto a1 = build_root_system(parse_lie_type("A1"));
  EXPECT_EQ(tensor_decompose(a1, Weight{1}, Weight{1}), (Decomposition{{Weight{0}, 1}, {Weight{2}, 1}}));
  auto a2 = build_root_system(parse_lie_type("A2"));
  EXPECT_EQ(tensor_decompose(a2, Weight{1, 0}, Weight{0, 1}), (Decomposition{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}}));
  auto c2 = build_root_system(parse_lie_type("C2"));
  auto d = tensor_decompose(c2, Weight{0, 1}, Weight{0, 1});
  EXPECT_EQ(d[(Weight{0, 2})], 1);
  EXPECT_EQ(d[(Weight{0, 0})], 1);
}

TEST(Tensor, MatchesCharacterProductOracle) {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"}) {
    auto rs = build_root_system(parse_lie_type(name));
    std::map<Weight, std::map<Weight, std::int64_t>> cache;
    auto dominant_of = [&](const Weight& w) -> std::map<Weight, std::int64_t> {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, oracle::kostant_dominant(rs, w)).first;
      return it->second;
    };
    const int bound = rs.ss_rank == 3 ? 1 : 2;
    auto weights = box(rs, bound);
    for (const auto& lam : weights)
      for (const auto& mu : weights) {
        if (mu < lam) continue;
        auto got = tensor_decompose(rs, lam, mu);
        Decomposition expect;
        for (const auto& [w, m] : oracle::character_product(rs, lam, mu, dominant_of)) expect.emplace(w, m);
        ASSERT_EQ(got, expect) << name << " " << to_string(lam) << " x " << to_string(mu);
        EXPECT_EQ(got[lam + mu], 1);
        Z total = 0;
        for (const auto& [w, m] : got) total += Z(static_cast<long>(m)) * weyl_dimension(rs, w);
        EXPECT_EQ(total, weyl_dimension(rs, lam) * weyl_dimension(rs, mu));
      }
  }
}

TEST(Branching, B3SpinorToGL3) {
  auto rs = build_root_system(parse_lie_type("B3"));
  const Weight lam0 = rs.fundamental(2);
  auto levi = levi_datum(rs, lam0);
  auto br = branch_to_levi(rs, lam0, levi);
  ASSERT_EQ(br.size(), 4u);
  EXPECT_EQ(br[0].first.highest_weight, lam0);
  std::set<QVec> shifts;
  for (const auto& [label, m] : br) {
    EXPECT_EQ(m, 1);
    shifts.insert(rs.to_ambient(label.highest_weight - lam0));
  }
  std::set<QVec> expect{{0, 0, 0}, {0, 0, -1}, {0, -1, -1}, {-1, -1, -1}};
  EXPECT_EQ(shifts, expect);
}

TEST(Branching, TrivialAndConservation) {
  auto rs = build_root_system(parse_lie_type("F4"));
  auto levi = levi_datum(rs, rs.fundamental(0));
  auto br = branch_to_levi(rs, rs.zero(), levi);
  ASSERT_EQ(br.size(), 1u);
  EXPECT_TRUE(br[0].first.highest_weight.is_zero());
  // Restricted dimension equals the sum of Levi dimensions.
  for (std::size_t i = 0; i < 4; ++i) {
    auto b = branch_to_levi(rs, rs.fundamental(i), levi);
    Subsystem sub = levi_subsystem(rs, levi);
    Z total = 0;
    for (const auto& [label, m] : b) total += Z(static_cast<long>(m)) * weyl_dimension(sub, label.highest_weight);
    EXPECT_EQ(total, weyl_dimension(rs, rs.fundamental(i)));
  }
}

TEST(Branching, RestrictedMultisetMatches) {
  auto rs = build_root_system(parse_lie_type("C3"));
  const Weight lam{0, 1, 1};
  for (const Weight& lam0 : {rs.fundamental(0), rs.fundamental(1), Weight{1, 0, 1}}) {
    auto levi = levi_datum(rs, lam0);
    Subsystem sub = levi_subsystem(rs, levi);
    std::map<Weight, Multiplicity> sum;
    for (const auto& [label, m] : branch_to_levi(rs, lam, levi))
      for (const auto& [w, k] : weight_system(sub, label.highest_weight).entries) sum[w] += m * k;
    EXPECT_EQ(sum, weight_system(rs, lam).entries);
  }
}

TEST(Lgens, Examples) {
  auto a3 = build_root_system(parse_lie_type("A3"));
  auto l = levi_datum(a3, a3.fundamental(0));
  EXPECT_EQ(lgens_generators(a3, {a3.fundamental(0)}, a3.fundamental(0), l),
            std::vector<Weight>{-a3.simple_root(0)});
  auto c2 = build_root_system(parse_lie_type("C2"));
  const Weight a{3, 0}, b{0, 2};
  auto lc = levi_datum(c2, a);
  auto gens = lgens_generators(c2, {a, b}, a, lc);
  std::vector<Weight> expect{b - a, -c2.simple_root(0)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(gens, expect);
  EXPECT_THROW(lgens_generators(c2, {b}, a, lc), DomainError);
}
