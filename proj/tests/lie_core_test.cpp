#include <gtest/gtest.h>

#include <set>

#include "rgc/root_system.hpp"
#include "rgc/weyl.hpp"

using namespace rgc;

namespace {

const char* kTypes[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B5", "C2", "C3", "C4", "D4", "D5", "D6",
                        "G2", "F4", "E6", "E7", "E8", "A2xB2", "A1+T1", "B3xA1+T2"};

// Closes the simple roots under simple reflections, in ambient coordinates.
std::set<QVec> ambient_root_closure(const RootSystem& rs) {
  std::set<QVec> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<QVec> frontier(roots.begin(), roots.end());
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < rs.ss_rank; ++i) {
        Q p = dot(v, rs.simple_coroots[i]);
        QVec w = v;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= p * rs.simple_roots[i][k];
        if (roots.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return roots;
}

}  // namespace

TEST(LieType, ParsesProductsAndTorus) {
  auto t = parse_lie_type("B3xA1+T1");
  ASSERT_EQ(t.factors.size(), 2u);
  EXPECT_EQ(t.factors[0], (SimpleFactor{Series::B, 3}));
  EXPECT_EQ(t.torus_rank, 1);
  EXPECT_EQ(to_string(t), "B3xA1+T1");
  EXPECT_EQ(parse_lie_type("T2").torus_rank, 2);
}

TEST(LieType, RejectsInvalidSeriesRank) {
  EXPECT_THROW(parse_lie_type("E5"), InputError);
  EXPECT_THROW(parse_lie_type("F3"), InputError);
  EXPECT_THROW(parse_lie_type("G3"), InputError);
  EXPECT_THROW(parse_lie_type("D2"), InputError);
  EXPECT_THROW(parse_lie_type("A0"), InputError);
  EXPECT_THROW(parse_lie_type("Q2"), InputError);
  EXPECT_THROW(parse_lie_type("A2x"), InputError);
  EXPECT_THROW(parse_lie_type(""), InputError);
  EXPECT_THROW(parse_lie_type("E8xE8+T1"), CapabilityError);
}

TEST(RootSystem, A1Identities) {
  auto rs = build_root_system(parse_lie_type("A1"));
  EXPECT_EQ(rs.cartan[0][0], 2);
  QVec half = rs.simple_roots[0];
  for (auto& x : half) x /= 2;
  EXPECT_EQ(rs.fundamental_weights[0], half);
}

TEST(RootSystem, B2Cartan) {
  auto rs = build_root_system(parse_lie_type("B2"));
  std::vector<std::vector<int>> expect{{2, -1}, {-2, 2}};
  EXPECT_EQ(rs.cartan, expect);
}

TEST(RootSystem, G2HasTwelveRoots) {
  auto rs = build_root_system(parse_lie_type("G2"));
  EXPECT_EQ(ambient_root_closure(rs).size(), 12u);
  EXPECT_EQ(rs.num_roots(), 12u);
}

TEST(RootSystem, RootCountsMatchReflectionClosure) {
  for (const char* name : kTypes) {
    auto rs = build_root_system(parse_lie_type(name));
    EXPECT_EQ(ambient_root_closure(rs).size(), rs.num_roots()) << name;
  }
}

TEST(RootSystem, PairingDualityAndInvariance) {
  for (const char* name : kTypes) {
    auto rs = build_root_system(parse_lie_type(name));
    for (std::size_t i = 0; i < rs.ss_rank; ++i)
      for (std::size_t j = 0; j < rs.ss_rank; ++j) {
        EXPECT_EQ(dot(rs.fundamental_weights[i], rs.simple_coroots[j]), Q(i == j ? 1 : 0)) << name;
        EXPECT_EQ(Q(rs.cartan[i][j]), dot(rs.simple_roots[j], rs.simple_coroots[i])) << name;
      }
    // (s_k a, s_k b) = (a, b) on the fundamental weights.
    for (std::size_t k = 0; k < rs.ss_rank; ++k)
      for (std::size_t a = 0; a < rs.ss_rank; ++a)
        for (std::size_t b = 0; b < rs.ss_rank; ++b) {
          Weight wa = reflect(rs, rs.fundamental(a), k), wb = reflect(rs, rs.fundamental(b), k);
          EXPECT_EQ(rs.inner_product(wa, wb), rs.inner[a][b]) << name;
        }
  }
}

TEST(RootSystem, FirstFundamentalIsMinimal) {
  // Orbit of omega_1 gives the minuscule/quasi-minuscule module of least
  // dimension; compare orbit sizes against the other fundamental weights.
  struct Case {
    const char* type;
    std::size_t orbit;
  } cases[] = {{"A4", 5}, {"B4", 8}, {"C4", 8}, {"D5", 10}, {"G2", 6}, {"F4", 24}, {"E6", 27}, {"E7", 56}, {"E8", 240}};
  for (const auto& c : cases) {
    auto rs = build_root_system(parse_lie_type(c.type));
    EXPECT_EQ(weyl_orbit(rs, rs.fundamental(0)).size(), c.orbit) << c.type;
  }
}

TEST(Weyl, OrbitExamples) {
  auto a1 = build_root_system(parse_lie_type("A1"));
  auto o = weyl_orbit(a1, a1.fundamental(0));
  EXPECT_EQ(o, (std::vector<Weight>{Weight{-1}, Weight{1}}));
  auto a2 = build_root_system(parse_lie_type("A2"));
  EXPECT_EQ(weyl_orbit(a2, a2.fundamental(0)).size(), 3u);
  auto b2 = build_root_system(parse_lie_type("B2"));
  std::set<QVec> amb;
  for (const auto& w : weyl_orbit(b2, b2.fundamental(0))) amb.insert(b2.to_ambient(w));
  std::set<QVec> expect{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  EXPECT_EQ(amb, expect);
}

TEST(Weyl, OrbitStabilizerAndClosure) {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4", "D4", "A2xB2"}) {
    auto rs = build_root_system(parse_lie_type(name));
    const auto order = rs.weyl_group_order();
    for (std::size_t i = 0; i < rs.ss_rank; ++i) {
      Weight lam = rs.fundamental(i);
      if (rs.ss_rank > 1) lam[(i + 1) % rs.ss_rank] += 1;
      auto orbit = weyl_orbit(rs, lam);
      EXPECT_EQ(order % orbit.size(), 0u) << name;
      // Stabilizer of a dominant weight is the parabolic subgroup on its zero labels.
      std::vector<std::size_t> zeros;
      for (std::size_t j = 0; j < rs.ss_rank; ++j)
        if (lam[j] == 0) zeros.push_back(j);
      Subsystem stab(rs, zeros);
      std::uint64_t stab_order = weyl_orbit(stab, rs.zero()).size();
      // |W_J| from orbit of a J-regular weight.
      Weight reg = rs.zero();
      for (auto j : zeros) reg[j] = 1;
      stab_order = weyl_orbit(stab, reg).size();
      EXPECT_EQ(orbit.size() * stab_order, order) << name << " omega" << i + 1;
      std::set<Weight> set(orbit.begin(), orbit.end());
      for (const auto& w : orbit)
        for (std::size_t j = 0; j < rs.ss_rank; ++j) EXPECT_TRUE(set.count(reflect(rs, w, j)));
    }
  }
}

TEST(Weyl, DominantReflect) {
  auto a1 = build_root_system(parse_lie_type("A1"));
  auto r = dominant_reflect(a1, Weight{-1});
  EXPECT_EQ(r.dominant, Weight{1});
  EXPECT_EQ(r.sign, -1);
  EXPECT_EQ(dominant_reflect(a1, Weight{3}).sign, 1);
  auto a2 = build_root_system(parse_lie_type("A2"));
  EXPECT_EQ(dominant_reflect(a2, Weight{0, 1}).sign, 0);
  EXPECT_EQ(dominant_reflect(a2, Weight{2, 1}).sign, 1);
  // Idempotent and constant on orbits.
  auto b3 = build_root_system(parse_lie_type("B3"));
  Weight mu{1, -2, 3};
  auto d = dominant_reflect(b3, mu).dominant;
  EXPECT_EQ(dominant_reflect(b3, d).dominant, d);
  for (const auto& w : weyl_orbit(b3, mu)) EXPECT_EQ(dominant_reflect(b3, w).dominant, d);
}

TEST(Levi, Examples) {
  auto b3 = build_root_system(parse_lie_type("B3"));
  auto l = levi_datum(b3, b3.fundamental(2));
  EXPECT_EQ(l.simple_root_indices, (std::vector<std::size_t>{0, 1}));
  ASSERT_EQ(l.components.size(), 1u);
  EXPECT_EQ(l.components[0].series, Series::A);
  EXPECT_EQ(l.components[0].rank, 2);
  EXPECT_EQ(l.center_rank, 1u);

  auto c2 = build_root_system(parse_lie_type("C2"));
  auto t = levi_datum(c2, Weight{3, 2});
  EXPECT_TRUE(t.simple_root_indices.empty());
  EXPECT_EQ(t.center_rank, 2u);

  auto f4 = build_root_system(parse_lie_type("F4"));
  auto lf = levi_datum(f4, f4.fundamental(0));
  ASSERT_EQ(lf.components.size(), 1u);
  EXPECT_EQ(lf.components[0].series, Series::B);
  EXPECT_EQ(lf.components[0].rank, 3);
  EXPECT_EQ(lf.center_rank, 1u);
  EXPECT_EQ(levi_datum(f4, f4.fundamental(3)).label(), "C3+T1");

  auto e6 = build_root_system(parse_lie_type("E6"));
  EXPECT_EQ(levi_datum(e6, e6.fundamental(0)).label(), "D5+T1");
  auto e8 = build_root_system(parse_lie_type("E8"));
  EXPECT_EQ(levi_datum(e8, e8.fundamental(0)).label(), "E7+T1");
  EXPECT_EQ(levi_datum(e8, e8.fundamental(6)).label(), "D7+T1");
  EXPECT_EQ(levi_datum(e8, e8.fundamental(7)).label(), "A7+T1");
  EXPECT_THROW(levi_datum(c2, Weight{-1, 0}), DomainError);
}

TEST(CharacterLattice, Examples) {
  auto a1 = build_root_system(parse_lie_type("A1"));
  auto q = character_lattice(a1, {Weight{1}});
  ASSERT_EQ(q.rank(), 1u);
  EXPECT_EQ(q.basis[0], (ZVec{2}));
  EXPECT_TRUE(q.full_rank);
  EXPECT_FALSE(q.is_weight_lattice);
  auto w = character_lattice(a1, {Weight{1}, Weight{0}});
  EXPECT_EQ(w.basis[0], (ZVec{1}));
  EXPECT_TRUE(w.is_weight_lattice);

  auto c2 = build_root_system(parse_lie_type("C2"));
  auto l = character_lattice(c2, {Weight{3, 0}, Weight{0, 2}});
  // Q has even first label; 3w1 - 2w2 has an odd one, so the sum is everything.
  EXPECT_TRUE(l.contains(Weight{3, -2}));
  EXPECT_TRUE(l.contains(c2.simple_root(0)));
  EXPECT_TRUE(l.contains(Weight{1, 0}));
  EXPECT_TRUE(l.is_weight_lattice);
  EXPECT_FALSE(character_lattice(c2, {Weight{0, 1}}).contains(Weight{1, 0}));
  EXPECT_THROW(character_lattice(c2, {}), DomainError);
}
