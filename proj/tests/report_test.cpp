#include <gtest/gtest.h>

#include "rgc/parse.hpp"
#include "rgc/report.hpp"

using namespace rgc;

namespace {

AnalysisReport run(const char* type, const char* weights, unsigned threads = 1) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(parse_lie_type(type)));
  Model m(rs, parse_weights(*rs, weights));
  AnalyzeOptions opt;
  opt.threads = threads;
  return analyze(m, opt);
}

TEST(Report, SpinorExample) {
  auto r = run("B3", "w3");
  EXPECT_EQ(r.normal, Verdict::Normal);
  EXPECT_EQ(r.smooth, Verdict::Smooth);
  EXPECT_EQ(r.orbits.size(), 4u);
  ASSERT_EQ(r.vertices.size(), 1u);
  EXPECT_EQ(r.vertices[0].levi, "A2+T1");
  EXPECT_EQ(r.vertices[0].l_weights.size(), 3u);
}

TEST(Report, SmallestCase) {
  auto r = run("A1", "w1");
  EXPECT_EQ(r.orbits.size(), 2u);
  EXPECT_EQ(r.normal, Verdict::Normal);
  EXPECT_EQ(r.smooth, Verdict::Smooth);
  EXPECT_TRUE(r.fan_covers);
}

TEST(Report, NonNormalWitnessSurfaces) {
  auto r = run("G2", "w2");
  EXPECT_EQ(r.normal, Verdict::NotNormal);
  ASSERT_TRUE(r.vertices[0].normality.missing);
  EXPECT_NE(to_text(r).find("missing [1,-1]"), std::string::npos);
}

TEST(Report, UnknownVertexMakesOverallUnknown) {
  auto rs = std::make_shared<const RootSystem>(build_root_system(parse_lie_type("C2")));
  Model m(rs, {parse_weight(*rs, "w2")});
  AnalyzeOptions opt;
  opt.normality.degree_cap = 1;
  auto r = analyze(m, opt);
  EXPECT_EQ(r.vertices[0].normality.verdict, Verdict::Unknown);
  EXPECT_EQ(r.normal, Verdict::Unknown);
}

TEST(Report, OverallAggregation) {
  VertexReport a, b;
  a.normality.verdict = Verdict::Normal;
  b.normality.verdict = Verdict::Unknown;
  EXPECT_EQ(overall_normality({a, a}), Verdict::Normal);
  EXPECT_EQ(overall_normality({a, b}), Verdict::Unknown);
  b.normality.verdict = Verdict::NotNormal;
  EXPECT_EQ(overall_normality({a, b}), Verdict::NotNormal);
}

TEST(Report, JsonRoundTrip) {
  for (auto [t, w] : {std::pair{"B3", "w3"}, {"G2", "w2"}, {"C2", "3*w1,2*w2"}, {"F4", "w4"}, {"A2", "hr"}}) {
    auto r = run(t, w);
    std::string text = to_json_text(r);
    AnalysisReport back = report_from_json_text(text);
    EXPECT_EQ(back, r) << t << " " << w;
    EXPECT_EQ(to_json_text(back), text);
  }
}

TEST(Report, JsonSchemaAndErrors) {
  auto j = json::parse(to_json_text(run("A1", "w1")));
  EXPECT_EQ(j.at("schema"), "rgc/1");
  EXPECT_EQ(j.at("fan").at("label"), "colored fan of the normalization");
  EXPECT_THROW(report_from_json_text("{"), InputError);
  j["schema"] = "rgc/0";
  EXPECT_THROW(report_from_json_text(j.dump()), InputError);
}

TEST(Report, DotIsAChainForSLThree) {
  std::string dot = to_dot(run("A2", "w1"));
  EXPECT_NE(dot.find("o2 ["), std::string::npos);
  EXPECT_EQ(dot.find("o3 ["), std::string::npos);
  EXPECT_NE(dot.find("o0 -> o1;"), std::string::npos);
  EXPECT_NE(dot.find("o1 -> o2;"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 2);
}

TEST(Report, DeterministicAcrossThreadCounts) {
  auto a = to_json_text(run("C2", "3*w1,2*w2", 1));
  auto b = to_json_text(run("C2", "3*w1,2*w2", 4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_text(run("D4", "w2", 1)), to_text(run("D4", "w2", 3)));
}

}  // namespace
