#pragma once

// Golden rows for normality and smoothness of X = closure of G in
// P(End V(lambda_0)), lambda_0 fundamental or the highest root, and the
// comparison of computed reports against them.
//
// L-weights are written per Levi component in that component's standard
// (Bourbaki) labels, components ordered by their smallest simple root index,
// plus a central degree in the row's own units. A comparison accepts either
// orientation of a type A chain, either order of the fork of a type D
// component and one positive rescaling of the degree per row.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgc/criteria.hpp"
#include "rgc/parse.hpp"
#include "rgc/report.hpp"

namespace rgc {

struct GoldenLWeight {
  std::string notation;  // as printed in the source table
  std::vector<std::vector<int>> labels;
  int degree = 0;
};

struct GoldenWitness {
  GoldenLWeight missing;
  int multiple = 2;
};

struct GoldenRow {
  std::string scope;
  std::string type;
  std::string module;  // weight syntax of parse_weight, e.g. "w2" or "hr"
  std::string levi;    // LeviDatum::label()
  std::string table_levi;
  Verdict normal = Verdict::Normal;
  Verdict smooth = Verdict::Smooth;
  std::optional<GoldenWitness> witness;
  std::vector<GoldenLWeight> l_weights;
  bool l_weights_complete = false;
  int cap = 8;
};

inline const std::vector<std::string>& table_scopes() {
  static const std::vector<std::string> s{"classical-small", "exceptional-fg", "stretch-e6", "heavy"};
  return s;
}

inline const std::vector<GoldenRow>& golden_rows() {
  using V = Verdict;
  using L = GoldenLWeight;
  auto wit = [](L l, int k = 2) { return std::optional<GoldenWitness>(GoldenWitness{std::move(l), k}); };
  static const std::vector<GoldenRow> rows = {
      // SL_n
      {"classical-small", "A1", "w1", "T1", "GL_1", V::Normal, V::Smooth, {}, {{"pi'_1", {}, 1}}, true},
      {"classical-small", "A1", "hr", "T1", "C^* x GL_0", V::Normal, V::Smooth, {}, {}, false},
      {"classical-small", "A2", "w1", "A1+T1", "GL_2", V::Normal, V::Smooth, {}, {{"pi'_1", {{1}}, 1}}, true},
      {"classical-small", "A2", "w2", "A1+T1", "GL_2", V::Normal, V::Smooth, {}, {{"pi'_1", {{1}}, 1}}, true},
      {"classical-small", "A2", "hr", "T2", "C^* x GL_1", V::Normal, V::Smooth, {}, {}, false},
      {"classical-small", "A3", "w1", "A2+T1", "GL_3", V::Normal, V::Smooth, {}, {{"pi'_1", {{1, 0}}, 1}}, true},
      {"classical-small", "A3", "w2", "A1xA1+T1", "PG(End_2 x End_2)", V::Normal, V::NotSmooth, {},
       {{"pi'_1+pi''_1", {{1}, {1}}, 1}, {"pi'_2+pi''_2", {{0}, {0}}, 2}}, true},
      {"classical-small", "A3", "w3", "A2+T1", "GL_3", V::Normal, V::Smooth, {}, {{"pi'_1", {{1, 0}}, 1}}, true},
      {"classical-small", "A3", "hr", "A1+T2", "C^* x GL_2", V::Normal, V::NotSmooth, {}, {}, false},
      // SO_{2l+1}; SO_3 factors carry their vector representation as label 2
      {"classical-small", "B2", "w1", "A1+T1", "GL_1 x SO_3", V::NotNormal, V::NotSmooth, wit({"pi'_1", {{0}}, 1}),
       {{"pi'_1+pi''_1", {{2}}, 1}}, false},
      {"classical-small", "B2", "w2", "A1+T1", "GL_2", V::Normal, V::Smooth, {},
       {{"pi'_1", {{1}}, 1}, {"pi'_2", {{0}}, 2}}, true},
      {"classical-small", "B3", "w1", "B2+T1", "GL_1 x SO_5", V::NotNormal, V::NotSmooth,
       wit({"pi'_1", {{0, 0}}, 1}), {{"pi'_1+pi''_1", {{1, 0}}, 1}}, false},
      {"classical-small", "B3", "w2", "A1xA1+T1", "GL_2 x SO_3", V::NotNormal, V::NotSmooth,
       wit({"pi'_1", {{1}, {0}}, 1}), {{"pi'_1+pi''_1", {{1}, {2}}, 1}}, false},
      {"classical-small", "B3", "w3", "A2+T1", "GL_3", V::Normal, V::Smooth, {},
       {{"pi'_1", {{1, 0}}, 1}, {"pi'_2", {{0, 1}}, 2}, {"pi'_3", {{0, 0}}, 3}}, true},
      // Sp_{2l}
      {"classical-small", "C2", "w1", "A1+T1", "P(GL_1 x Sp_2)", V::Normal, V::Smooth, {},
       {{"pi'_1+pi''_1", {{1}}, 1}}, false},
      {"classical-small", "C2", "w2", "A1+T1", "GL_2/Z_2", V::NotNormal, V::NotSmooth, wit({"pi'_2", {{0}}, 2}),
       {{"2pi'_1", {{2}}, 2}, {"2pi'_2", {{0}}, 4}}, true},
      {"classical-small", "C2", "hr", "A1+T1", "P(C^* x Sp_2)", V::Normal, V::Smooth, {},
       {{"e'+pi''_1", {{1}}, 1}, {"2e'", {{0}}, 2}, {"4e'", {{0}}, 4}, {"2e'+2pi''_1", {{2}}, 2},
        {"3e'+pi''_1", {{1}}, 3}},
       true},
      {"classical-small", "C3", "w1", "C2+T1", "P(GL_1 x Sp_4)", V::Normal, V::NotSmooth, {},
       {{"pi'_1+pi''_1", {{1, 0}}, 1}}, false},
      {"classical-small", "C3", "w2", "A1xA1+T1", "P(GL_2 x Sp_2)", V::Normal, V::NotSmooth, {},
       {{"pi'_1+pi''_1", {{1}, {1}}, 1}}, false},
      {"classical-small", "C3", "w3", "A2+T1", "GL_3/Z_2", V::NotNormal, V::NotSmooth, wit({"pi'_2", {{0, 1}}, 2}),
       {{"2pi'_1", {{2, 0}}, 2}, {"2pi'_2", {{0, 2}}, 4}, {"2pi'_3", {{0, 0}}, 6}}, true},
      {"classical-small", "C3", "hr", "C2+T1", "P(C^* x Sp_4)", V::Normal, V::NotSmooth, {},
       {{"e'+pi''_1", {{1, 0}}, 1}, {"2e'", {{0, 0}}, 2}, {"4e'", {{0, 0}}, 4}, {"2e'+2pi''_1", {{2, 0}}, 2},
        {"3e'+pi''_1", {{1, 0}}, 3}},
       true},
      // SO_8
      {"classical-small", "D4", "w1", "A3+T1", "P(GL_1 x SO_6)", V::Normal, V::NotSmooth, {}, {}, false},
      {"classical-small", "D4", "w2", "A1xA1xA1+T1", "P(GL_2 x SO_4)", V::Normal, V::NotSmooth, {}, {}, false},
      {"classical-small", "D4", "w3", "A3+T1", "GL_4/Z_2", V::Normal, V::NotSmooth, {}, {}, false},
      {"classical-small", "D4", "w4", "A3+T1", "GL_4/Z_2", V::Normal, V::NotSmooth, {}, {}, false},
      // G2, F4
      {"exceptional-fg", "G2", "w1", "A1+T1", "GL_2", V::Normal, V::Smooth, {},
       {{"pi'_1", {{1}}, 1}, {"pi'_2", {{0}}, 2}, {"pi'_1+pi'_2", {{1}}, 3}, {"2pi'_2", {{0}}, 4}}, true},
      {"exceptional-fg", "G2", "w2", "A1+T1", "GL_2", V::NotNormal, V::NotSmooth, wit({"pi'_1", {{1}}, 1}),
       {{"2pi'_1", {{2}}, 2},
        {"3pi'_1", {{3}}, 3},
        {"pi'_2", {{0}}, 2},
        {"2pi'_2", {{0}}, 4},
        {"3pi'_1-pi'_2", {{3}}, 1}},
       true},
      {"exceptional-fg", "F4", "w1", "B3+T1", "C^* x Spin_7", V::Normal, V::NotSmooth, {},
       {{"e'+w''_3", {{0, 0, 1}}, 1},
        {"2e'", {{0, 0, 0}}, 2},
        {"4e'", {{0, 0, 0}}, 4},
        {"2e'+w''_1", {{1, 0, 0}}, 2},
        {"3e'+w''_3", {{0, 0, 1}}, 3}},
       true},
      {"exceptional-fg", "F4", "w2", "A1xA2+T1", "GL_2 x SL_3", V::Normal, V::NotSmooth, {},
       {{"pi'_1+pi''_1", {{1}, {1, 0}}, 1}}, false},
      {"exceptional-fg", "F4", "w3", "A2xA1+T1", "SL_3 x GL_2", V::NotNormal, V::NotSmooth,
       wit({"pi'_2+pi''_1", {{0, 1}, {1}}, 1}), {{"2pi'_1+pi''_1", {{2, 0}, {1}}, 1}}, false},
      {"exceptional-fg", "F4", "w4", "C3+T1", "C^* x Sp_6", V::NotNormal, V::NotSmooth,
       wit({"e'+w''_1", {{1, 0, 0}}, 1}),
       {{"e'+w''_3", {{0, 0, 1}}, 1},
        {"2e'", {{0, 0, 0}}, 2},
        {"4e'", {{0, 0, 0}}, 4},
        {"2e'+2w''_1", {{2, 0, 0}}, 2},
        {"3e'+w''_3", {{0, 0, 1}}, 3}},
       true},
      // E6
      {"stretch-e6", "E6", "w1", "D5+T1", "C^* x Spin_10", V::Normal, V::NotSmooth, {},
       {{"e'+w''_5", {{0, 0, 0, 0, 1}}, 1}, {"2e'+w''_1", {{1, 0, 0, 0, 0}}, 2}}, true},
      {"heavy", "E6", "w5", "D5+T1", "C^* x Spin_10", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E6", "w2", "A1xA4+T1", "GL_2 x SL_5", V::Normal, V::NotSmooth, {}, {}, false, 10},
      {"heavy", "E6", "w4", "A4xA1+T1", "GL_2 x SL_5", V::Normal, V::NotSmooth, {}, {}, false, 10},
      {"heavy", "E6", "w3", "A2xA2xA1+T1", "GL_2 x SL_3 x SL_3", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E6", "w6", "A5+T1", "GL_6/Z_3", V::Normal, V::NotSmooth, {},
       {{"pi'_3", {{0, 0, 1, 0, 0}}, 3},
        {"pi'_6", {{0, 0, 0, 0, 0}}, 6},
        {"2pi'_6", {{0, 0, 0, 0, 0}}, 12},
        {"pi'_3+pi'_6", {{0, 0, 1, 0, 0}}, 9},
        {"pi'_1+pi'_5", {{1, 0, 0, 0, 1}}, 6}},
       true},
      {"heavy", "E7", "w1", "E6+T1", "C^* x E_6", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E7", "w2", "A1xD5+T1", "GL_2 x Spin_10", V::Normal, V::NotSmooth, {}, {}, false, 10},
      {"heavy", "E7", "w3", "A2xA4+T1", "GL_3 x SL_5", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E7", "w4", "A3xA2xA1+T1", "GL_2 x SL_3 x SL_4", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E7", "w5", "A5xA1+T1", "GL_2 x SL_6", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E7", "w6", "D6+T1", "C^* x Spin_12/Z_2", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E7", "w7", "A6+T1", "GL_7/Z_3", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w1", "E7+T1", "C^* x E_7", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w2", "A1xE6+T1", "GL_2 x E_6", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w3", "A2xD5+T1", "GL_3 x Spin_10", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w4", "A3xA4+T1", "GL_4 x SL_5", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w5", "A4xA2xA1+T1", "GL_2 x SL_3 x SL_5", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w6", "A6xA1+T1", "GL_2 x SL_7", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w7", "D7+T1", "C^* x Spin_14", V::Normal, V::NotSmooth, {}, {}, false},
      {"heavy", "E8", "w8", "A7+T1", "GL_8/Z_3", V::Normal, V::NotSmooth, {}, {}, false},
  };
  return rows;
}

inline std::vector<GoldenRow> rows_in_scope(const std::string& scope) {
  if (std::find(table_scopes().begin(), table_scopes().end(), scope) == table_scopes().end())
    throw InputError("unknown scope '" + scope + "'; expected classical-small, exceptional-fg, stretch-e6 or heavy");
  std::vector<GoldenRow> out;
  for (const auto& r : golden_rows())
    if (r.scope == scope) out.push_back(r);
  return out;
}

inline std::string row_name(const GoldenRow& r) { return r.type + " " + r.module; }

namespace detail {

/// Nodes of a Levi component in standard order, one list per accepted
/// orientation.
inline std::vector<std::vector<std::size_t>> standard_orders(const RootSystem& rs, const LeviComponent& c) {
  auto adj = [&](std::size_t a, std::size_t b) { return a != b && rs.cartan[a][b] != 0; };
  auto degree = [&](std::size_t a) {
    return std::count_if(c.nodes.begin(), c.nodes.end(), [&](std::size_t b) { return adj(a, b); });
  };
  auto chain_from = [&](std::size_t start, const std::set<std::size_t>& skip) {
    std::vector<std::size_t> out{start};
    std::set<std::size_t> used = skip;
    used.insert(start);
    while (true) {
      bool moved = false;
      for (auto b : c.nodes)
        if (!used.count(b) && adj(out.back(), b)) {
          out.push_back(b);
          used.insert(b);
          moved = true;
          break;
        }
      if (!moved) return out;
    }
  };
  if (c.nodes.size() == 1) return {c.nodes};
  switch (c.series) {
    case Series::A: {
      auto rev = c.nodes;
      std::reverse(rev.begin(), rev.end());
      return {c.nodes, rev};
    }
    case Series::B:
    case Series::C: {
      if (c.nodes.size() == 2) return {c.nodes};
      // Start from the end away from the double bond.
      for (auto a : c.nodes) {
        if (degree(a) != 1) continue;
        auto ch = chain_from(a, {});
        const auto x = ch[ch.size() - 2], y = ch.back();
        if (rs.cartan[x][y] * rs.cartan[y][x] == 2) return {ch};
      }
      break;
    }
    case Series::D: {
      std::size_t branch = c.nodes.front();
      for (auto a : c.nodes)
        if (degree(a) == 3) branch = a;
      std::vector<std::size_t> leaves;
      for (auto a : c.nodes)
        if (adj(a, branch) && degree(a) == 1) leaves.push_back(a);
      // The long arm starts at the leaf that is not adjacent to the branch node,
      // except for D4 where all three leaves qualify.
      std::vector<std::vector<std::size_t>> out;
      for (auto start : c.nodes) {
        if (degree(start) != 1) continue;
        std::set<std::size_t> fork;
        for (auto l : leaves)
          if (l != start) fork.insert(l);
        if (fork.size() != 2) continue;
        if (c.nodes.size() > 4 && adj(start, branch)) continue;
        auto ch = chain_from(start, fork);
        std::vector<std::size_t> f(fork.begin(), fork.end());
        auto a = ch, b = ch;
        a.push_back(f[0]), a.push_back(f[1]);
        b.push_back(f[1]), b.push_back(f[0]);
        out.push_back(a);
        out.push_back(b);
      }
      return out;
    }
    default: break;
  }
  throw CapabilityError(std::string("no standard labelling for Levi component of type ") +
                        static_cast<char>(c.series) + std::to_string(c.rank));
}

struct LKey {
  std::vector<std::vector<int>> labels;
  Q degree;
  bool operator<(const LKey& o) const {
    if (labels != o.labels) return labels < o.labels;
    return degree < o.degree;
  }
  bool operator==(const LKey& o) const { return labels == o.labels && degree == o.degree; }
};

}  // namespace detail

struct RowCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
  void fail(std::string s) {
    ok = false;
    mismatches.push_back(std::move(s));
  }
};

/// Matches computed L-weights (and a witness) against golden ones, choosing
/// component orientations and a degree scale. Returns the mismatch, if any.
inline std::optional<std::string> match_l_weights(const Model& m, const Weight& l0, const std::vector<Weight>& ours,
                                                  const std::vector<GoldenLWeight>& golden, bool complete,
                                                  const std::optional<Weight>& our_witness,
                                                  const std::optional<GoldenLWeight>& golden_witness) {
  const RootSystem& rs = m.root_system();
  LeviDatum levi = levi_datum(rs, l0);
  ZVec grading = slice_grading(m, l0, ours);
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (const auto& c : levi.components) choices.push_back(detail::standard_orders(rs, c));
  for (const auto& g : golden)
    if (g.labels.size() != levi.components.size())
      return "golden weight " + g.notation + " has " + std::to_string(g.labels.size()) + " components, L has " +
             std::to_string(levi.components.size());

  auto key = [&](const Weight& w, const std::vector<std::size_t>& pick) {
    detail::LKey k;
    for (std::size_t c = 0; c < pick.size(); ++c) {
      std::vector<int> lab;
      for (auto j : choices[c][pick[c]]) lab.push_back(w[j]);
      k.labels.push_back(lab);
    }
    k.degree = Q(grade_of(grading, w));
    return k;
  };
  auto gkey = [](const GoldenLWeight& g, const Q& scale) { return detail::LKey{g.labels, scale * g.degree}; };

  std::vector<std::size_t> pick(choices.size(), 0);
  std::function<bool(std::size_t)> search = [&](std::size_t c) -> bool {
    if (c < choices.size()) {
      for (pick[c] = 0; pick[c] < choices[c].size(); ++pick[c])
        if (search(c + 1)) return true;
      return false;
    }
    std::set<detail::LKey> mine;
    for (const auto& w : ours) mine.insert(key(w, pick));
    std::set<Q> scales;
    if (golden.empty()) scales.insert(1);
    for (const auto& k : mine)
      if (!golden.empty() && golden.front().degree != 0) scales.insert(k.degree / golden.front().degree);
    for (const auto& s : scales) {
      if (s <= 0) continue;
      std::set<detail::LKey> theirs;
      for (const auto& g : golden) theirs.insert(gkey(g, s));
      bool ok = complete ? theirs == mine : std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
      if (ok && golden_witness) ok = our_witness && key(*our_witness, pick) == gkey(*golden_witness, s);
      if (ok) return true;
    }
    return false;
  };
  if (search(0)) return std::nullopt;
  std::string s = "L-weights differ: computed";
  for (const auto& w : ours) s += ' ' + to_string(w) + "(deg " + grade_of(grading, w).get_str() + ")";
  s += "; table";
  for (const auto& g : golden) s += ' ' + g.notation;
  if (golden_witness) s += "; witness " + golden_witness->notation;
  return s;
}

inline RowCheck check_row(const GoldenRow& row, const Model& m, const VertexReport& v) {
  RowCheck out;
  if (v.levi != row.levi) out.fail("Levi " + v.levi + ", table " + row.levi + " (" + row.table_levi + ")");
  if (v.normality.verdict != row.normal)
    out.fail("normality " + to_string(v.normality.verdict) + ", table " + to_string(row.normal));
  if (v.smoothness.verdict != row.smooth)
    out.fail("smoothness " + to_string(v.smoothness.verdict) + ", table " + to_string(row.smooth));
  if (row.witness) {
    if (!v.normality.multiple || *v.normality.multiple != row.witness->multiple)
      out.fail("witness multiple differs from " + std::to_string(row.witness->multiple));
    if (!v.normality.absence_certified) out.fail("witness absence not certified");
  }
  if (out.ok && (!row.l_weights.empty() || row.witness)) {
    std::optional<GoldenLWeight> gw;
    if (row.witness) gw = row.witness->missing;
    if (auto bad = match_l_weights(m, v.vertex, v.l_weights, row.l_weights, row.l_weights_complete,
                                   v.normality.missing, gw))
      out.fail(*bad);
  }
  return out;
}

struct RowResult {
  GoldenRow row;
  VertexReport vertex;
  RowCheck check;
  double seconds = 0;
};

inline RowResult run_row(const GoldenRow& row, const NormalityOptions& opt = {}) {
  RowResult res;
  res.row = row;
  LieType t = parse_lie_type(row.type);
  auto rs = std::make_shared<const RootSystem>(build_root_system(t));
  Model m(rs, {parse_weight(*rs, row.module)});
  NormalityOptions o = opt;
  o.degree_cap = row.cap;
  const auto& cvs = m.chamber_vertices();
  if (cvs.size() != 1) {
    res.check.fail("expected one closed orbit, found " + std::to_string(cvs.size()));
    return res;
  }
  const auto t0 = std::chrono::steady_clock::now();
  res.vertex = detail::vertex_report(m, cvs.front().weight, o);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.check = check_row(row, m, res.vertex);
  return res;
}

/// Runs every row of the scope; results come back in row order whatever the
/// thread count. The heavy scope needs allow_heavy.
inline std::vector<RowResult> run_table(const std::string& scope, unsigned threads = 1, bool allow_heavy = false) {
  if (scope == "heavy" && !allow_heavy) throw InputError("scope 'heavy' needs --allow-heavy");
  const auto rows = rows_in_scope(scope);
  std::vector<RowResult> out(rows.size());
  threads = std::max(1u, threads);
  for (std::size_t start = 0; start < rows.size(); start += threads) {
    std::vector<std::future<RowResult>> jobs;
    for (std::size_t i = start; i < std::min(rows.size(), start + threads); ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                [&rows, i] { return run_row(rows[i]); }));
    for (std::size_t i = 0; i < jobs.size(); ++i) out[start + i] = jobs[i].get();
  }
  return out;
}

}  // namespace rgc
