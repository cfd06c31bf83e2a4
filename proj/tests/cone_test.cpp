#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rgc/cone.hpp"

using namespace rgc;

namespace {

ZMat zm(std::initializer_list<std::initializer_list<long>> rows) {
  ZMat out;
  for (auto r : rows) {
    ZVec v;
    for (long x : r) v.push_back(Z(x));
    out.push_back(v);
  }
  return out;
}

std::set<oracle::IVec> as_ivecs(const ZMat& m) {
  std::set<oracle::IVec> out;
  for (const auto& r : m) {
    oracle::IVec v;
    for (const auto& x : r) v.push_back(x.get_si());
    out.insert(v);
  }
  return out;
}

std::set<oracle::IVec> as_ivecs(const std::vector<QVec>& m) {
  std::set<oracle::IVec> out;
  for (const auto& r : m) {
    oracle::IVec v;
    for (const auto& x : r) v.push_back(x.get_num().get_si());
    out.insert(v);
  }
  return out;
}

// Random pointed full-dimensional cones with small generators.
std::vector<std::vector<oracle::IVec>> random_cones(std::size_t count, std::uint32_t seed, int range) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> coord(-range, range);
  std::vector<std::vector<oracle::IVec>> out;
  while (out.size() < count) {
    const std::size_t d = 2 + out.size() % 3;
    const std::size_t n = d + gen() % 3;
    std::vector<oracle::IVec> g(n, oracle::IVec(d));
    for (auto& v : g)
      for (auto& x : v) x = coord(gen);
    ZMat zg;
    for (const auto& v : g) {
      ZVec z;
      for (auto x : v) z.push_back(Z(static_cast<long>(x)));
      zg.push_back(z);
    }
    auto k = cone_from_generators(zg, d);
    if (!k.pointed() || !k.full_dimensional()) continue;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(Cone, DualExamples) {
  auto orthant = cone_from_generators(zm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  EXPECT_EQ(dual_cone(orthant).rays, orthant.rays);
  auto ray = cone_from_generators(zm({{1, 0}}), 2);
  auto half = dual_cone(ray);
  EXPECT_EQ(half.rays, zm({{1, 0}}));
  EXPECT_EQ(half.lineality, zm({{0, 1}}));
  auto k = cone_from_generators(zm({{1, 0}, {1, 2}}), 2);
  EXPECT_EQ(dual_cone(k).rays, zm({{0, 1}, {2, -1}}));
}

TEST(Cone, DoubleDescriptionRoundTrip) {
  for (const auto& g : random_cones(30, 7, 3)) {
    const std::size_t d = g[0].size();
    ZMat zg;
    for (const auto& v : g) {
      ZVec z;
      for (auto x : v) z.push_back(Z(static_cast<long>(x)));
      zg.push_back(z);
    }
    auto k = cone_from_generators(zg, d);
    EXPECT_EQ(as_ivecs(k.facets), oracle::facets_brute_force(g, d));
    for (const auto& r : zg) EXPECT_TRUE(k.contains(r));
    auto h = cone_from_inequalities(k.facets, {}, d);
    EXPECT_EQ(h, k);
    EXPECT_EQ(dual_cone(dual_cone(k)), k);
    EXPECT_EQ(cone_from_generators(dual_cone(k).rays, d).facets, k.rays);
  }
}

TEST(Cone, LowerDimensionalAndLineality) {
  auto k = cone_from_generators(zm({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}}), 3);
  EXPECT_EQ(k.lineality_dim(), 1u);
  EXPECT_EQ(k.dimension(), 2u);
  EXPECT_EQ(k.rays, zm({{0, 1, 0}}));
  EXPECT_EQ(k.equations, zm({{0, 0, 1}}));
  EXPECT_TRUE(k.contains(ZVec{-5, 2, 0}));
  EXPECT_FALSE(k.contains(ZVec{0, -1, 0}));
  auto j = intersect(k, cone_from_generators(zm({{1, 1, 0}, {1, -1, 0}}), 3));
  EXPECT_EQ(j.rays, zm({{1, 0, 0}, {1, 1, 0}}));
}

TEST(HilbertBasis, Examples) {
  auto unimodular = cone_from_generators(zm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
  EXPECT_EQ(as_ivecs(hilbert_basis(unimodular)), (std::set<oracle::IVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  auto a = cone_from_generators(zm({{1, 0}, {1, 2}}), 2);
  EXPECT_EQ(as_ivecs(hilbert_basis(a)), (std::set<oracle::IVec>{{1, 0}, {1, 1}, {1, 2}}));
  auto b = cone_from_generators(zm({{2, -1}, {0, 1}}), 2);
  EXPECT_EQ(as_ivecs(hilbert_basis(b)), (std::set<oracle::IVec>{{0, 1}, {1, 0}, {2, -1}}));
  EXPECT_THROW(hilbert_basis(cone_from_generators(zm({{1, 0}, {-1, 0}}), 2)), DomainError);
}

TEST(HilbertBasis, SublatticeAndLowerDimension) {
  // Cone in the plane z = 0 of Q^3 with the lattice generated by (1,1,0), (2,0,0), (0,0,1).
  auto k = cone_from_generators(zm({{1, 0, 0}, {0, 1, 0}}), 3);
  Lattice lat = Lattice::from_rows({{1, 1, 0}, {2, 0, 0}, {0, 0, 1}});
  auto hb = hilbert_basis(k, lat);
  std::set<QVec> got(hb.begin(), hb.end());
  EXPECT_EQ(got, (std::set<QVec>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}}));
}

TEST(HilbertBasis, MatchesBoxOracleOnRandomCones) {
  for (const auto& g : random_cones(24, 11, 2)) {
    const std::size_t d = g[0].size();
    ZMat zg;
    for (const auto& v : g) {
      ZVec z;
      for (auto x : v) z.push_back(Z(static_cast<long>(x)));
      zg.push_back(z);
    }
    auto k = cone_from_generators(zg, d);
    EXPECT_EQ(as_ivecs(hilbert_basis(k)), oracle::hilbert_basis_box(g, d));
  }
}

TEST(Semigroup, Membership) {
  ZMat gens = zm({{0}, {2}, {3}});
  EXPECT_TRUE(in_semigroup(ZVec{5}, gens));
  EXPECT_FALSE(in_semigroup(ZVec{1}, gens));
  EXPECT_TRUE(in_semigroup(ZVec{0}, gens));
  EXPECT_FALSE(in_semigroup(ZVec{-2}, gens));
  EXPECT_TRUE(in_semigroup(ZVec{3, 1}, zm({{1, 1}, {1, 0}})));
}
