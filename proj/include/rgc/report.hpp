#pragma once

// Whole-model analysis and its renderings: JSON (schema "rgc/1"), DOT for
// the orbit poset and a plain-text summary. Needs nlohmann/json ("json.hpp").

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rgc/compactification.hpp"
#include "rgc/criteria.hpp"

namespace rgc {

inline constexpr const char* kSchema = "rgc/1";

using IntRows = std::vector<std::vector<long>>;

struct VertexReport {
  Weight vertex;
  std::string levi;
  std::vector<std::size_t> levi_roots;
  std::vector<Weight> lgens;
  std::vector<Weight> l_weights;  // nonzero mu - lambda_0 over the L-highest weights of V
  IntRows slice_cone;             // rays of Sigma_0 in weight coordinates
  bool torus_closure_normal = false;
  std::optional<std::string> shortcut;
  CriterionReport normality;
  CriterionReport smoothness;

  bool operator==(const VertexReport&) const = default;
};

struct OrbitEntry {
  std::vector<Weight> face;
  std::vector<std::size_t> direction_roots;
  std::vector<std::size_t> colors;
  long dimension = 0;

  bool operator==(const OrbitEntry&) const = default;
};

struct FanCone {
  Weight vertex;
  IntRows rays;  // coweights in simple-coroot coordinates
  std::vector<std::size_t> colors;

  bool operator==(const FanCone&) const = default;
};

struct AnalysisReport {
  std::string type;
  std::vector<Weight> highest;
  std::size_t lattice_rank = 0;
  bool faithful = true;
  std::vector<std::string> warnings;
  std::vector<VertexReport> vertices;
  std::vector<OrbitEntry> orbits;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::vector<FanCone> fan;
  bool fan_covers = false;
  Verdict normal = Verdict::Unknown;
  Verdict smooth = Verdict::Unknown;
  int degree_cap = 0;

  bool operator==(const AnalysisReport&) const = default;
};

struct AnalyzeOptions {
  NormalityOptions normality;
  unsigned threads = 1;
  bool orbits = true;  // orbit poset and colored fan
};

namespace detail {

inline IntRows int_rows(const ZMat& m) {
  IntRows out;
  for (const auto& r : m) {
    std::vector<long> row;
    for (const auto& x : r) {
      if (!x.fits_slong_p()) throw CapabilityError("coordinate does not fit in a machine integer: " + x.get_str());
      row.push_back(x.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline VertexReport vertex_report(const Model& m, const Weight& l0, const NormalityOptions& opt) {
  VertexReport v;
  v.vertex = l0;
  SliceDatum s = local_slice(m, l0);
  v.levi = s.levi.label();
  v.levi_roots = s.levi.simple_root_indices;
  v.lgens = s.lgens;
  v.l_weights = s.slice_weights;
  v.slice_cone = int_rows(s.sigma.rays);
  v.torus_closure_normal = torus_closure_normal(m, l0);
  v.shortcut = known_normal_shortcuts(m, l0);
  v.normality = normality_at(m, l0, opt);
  v.normality.shortcut = v.shortcut;
  v.smoothness = smoothness_at(m, l0);
  return v;
}

}  // namespace detail

/// Normal only if every vertex is Normal; NotNormal if any vertex is; else Unknown.
inline Verdict overall_normality(const std::vector<VertexReport>& vs) {
  bool unknown = false;
  for (const auto& v : vs) {
    if (v.normality.verdict == Verdict::NotNormal) return Verdict::NotNormal;
    if (v.normality.verdict != Verdict::Normal) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Normal;
}

inline Verdict overall_smoothness(const std::vector<VertexReport>& vs) {
  bool unknown = false;
  for (const auto& v : vs) {
    if (v.smoothness.verdict == Verdict::NotSmooth) return Verdict::NotSmooth;
    if (v.smoothness.verdict != Verdict::Smooth) unknown = true;
  }
  return unknown ? Verdict::Unknown : Verdict::Smooth;
}

inline AnalysisReport analyze(const Model& m, const AnalyzeOptions& opt = {}) {
  const RootSystem& rs = m.root_system();
  AnalysisReport r;
  r.type = to_string(rs.type);
  r.highest = m.highest();
  r.lattice_rank = m.lattice().rank();
  r.faithful = m.lattice().full_rank;
  r.warnings = m.warnings();
  r.degree_cap = opt.normality.degree_cap;

  const auto& cvs = m.chamber_vertices();
  r.vertices.resize(cvs.size());
  const unsigned threads = std::max(1u, opt.threads);
  for (std::size_t start = 0; start < cvs.size(); start += threads) {
    std::vector<std::future<VertexReport>> jobs;
    for (std::size_t i = start; i < std::min(cvs.size(), start + threads); ++i)
      jobs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, detail::vertex_report,
                                std::cref(m), cvs[i].weight, opt.normality));
    for (std::size_t i = 0; i < jobs.size(); ++i) r.vertices[start + i] = jobs[i].get();
  }
  r.normal = overall_normality(r.vertices);
  r.smooth = overall_smoothness(r.vertices);

  if (opt.orbits) {
    OrbitPoset p = orbit_poset(m);
    for (const auto& o : p.orbits) r.orbits.push_back({o.face.vertices, o.face.direction_roots, o.colors, o.dimension});
    r.hasse = p.hasse;
    ColoredFan fan = colored_fan(m);
    for (const auto& c : fan.maximal_cones) r.fan.push_back({c.vertex, detail::int_rows(c.cone.rays), c.colors});
    r.fan_covers = fan.covers_valuation_cone;
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

inline void to_json(json& j, const Weight& w) { j = w.to_vector(); }
inline void from_json(const json& j, Weight& w) { w = Weight::from(j.get<std::vector<int>>()); }

inline void to_json(json& j, const CriterionReport& r) {
  j = json{{"vertex", r.vertex},
           {"verdict", to_string(r.verdict)},
           {"cap", r.degree_cap},
           {"hilbert_basis_size", r.hilbert_basis_size},
           {"method", r.method}};
  if (r.missing) {
    j["witness"] = json{{"missing", *r.missing},
                        {"multiple", r.multiple ? json(*r.multiple) : json(nullptr)},
                        {"multiple_degree", r.multiple_degree ? json(*r.multiple_degree) : json(nullptr)},
                        {"absence_certified", r.absence_certified}};
  } else {
    j["witness"] = nullptr;
  }
  j["all_missing"] = r.all_missing;
  j["failed_condition"] = r.failed_condition ? json(*r.failed_condition) : json(nullptr);
  j["partition"] = r.partition;
  j["shortcut_provenance"] = r.shortcut ? json(*r.shortcut) : json(nullptr);
}

inline void from_json(const json& j, CriterionReport& r) {
  r = CriterionReport{};
  r.vertex = j.at("vertex").get<Weight>();
  auto v = verdict_from_string(j.at("verdict").get<std::string>());
  if (!v) throw InputError("unknown verdict " + j.at("verdict").get<std::string>());
  r.verdict = *v;
  r.degree_cap = j.at("cap").get<int>();
  r.hilbert_basis_size = j.at("hilbert_basis_size").get<std::size_t>();
  r.method = j.at("method").get<std::string>();
  if (const auto& w = j.at("witness"); !w.is_null()) {
    r.missing = w.at("missing").get<Weight>();
    if (!w.at("multiple").is_null()) r.multiple = w.at("multiple").get<int>();
    if (!w.at("multiple_degree").is_null()) r.multiple_degree = w.at("multiple_degree").get<int>();
    r.absence_certified = w.at("absence_certified").get<bool>();
  }
  r.all_missing = j.at("all_missing").get<std::vector<Weight>>();
  if (!j.at("failed_condition").is_null()) r.failed_condition = j.at("failed_condition").get<int>();
  r.partition = j.at("partition").get<std::vector<std::vector<Weight>>>();
  if (!j.at("shortcut_provenance").is_null()) r.shortcut = j.at("shortcut_provenance").get<std::string>();
}

inline void to_json(json& j, const VertexReport& v) {
  j = json{{"vertex", v.vertex},
           {"levi", v.levi},
           {"levi_roots", v.levi_roots},
           {"lgens", v.lgens},
           {"l_weights", v.l_weights},
           {"slice_cone", v.slice_cone},
           {"torus_closure_normal", v.torus_closure_normal},
           {"shortcut", v.shortcut ? json(*v.shortcut) : json(nullptr)},
           {"normality", v.normality},
           {"smoothness", v.smoothness}};
}

inline void from_json(const json& j, VertexReport& v) {
  v.vertex = j.at("vertex").get<Weight>();
  v.levi = j.at("levi").get<std::string>();
  v.levi_roots = j.at("levi_roots").get<std::vector<std::size_t>>();
  v.lgens = j.at("lgens").get<std::vector<Weight>>();
  v.l_weights = j.at("l_weights").get<std::vector<Weight>>();
  v.slice_cone = j.at("slice_cone").get<IntRows>();
  v.torus_closure_normal = j.at("torus_closure_normal").get<bool>();
  v.shortcut = j.at("shortcut").is_null() ? std::nullopt : std::optional(j.at("shortcut").get<std::string>());
  v.normality = j.at("normality").get<CriterionReport>();
  v.smoothness = j.at("smoothness").get<CriterionReport>();
}

inline void to_json(json& j, const OrbitEntry& o) {
  j = json{{"face", o.face}, {"direction_roots", o.direction_roots}, {"colors", o.colors}, {"dimension", o.dimension}};
}
inline void from_json(const json& j, OrbitEntry& o) {
  o.face = j.at("face").get<std::vector<Weight>>();
  o.direction_roots = j.at("direction_roots").get<std::vector<std::size_t>>();
  o.colors = j.at("colors").get<std::vector<std::size_t>>();
  o.dimension = j.at("dimension").get<long>();
}

inline void to_json(json& j, const FanCone& c) {
  j = json{{"vertex", c.vertex}, {"rays", c.rays}, {"colors", c.colors}};
}
inline void from_json(const json& j, FanCone& c) {
  c.vertex = j.at("vertex").get<Weight>();
  c.rays = j.at("rays").get<IntRows>();
  c.colors = j.at("colors").get<std::vector<std::size_t>>();
}

inline void to_json(json& j, const AnalysisReport& r) {
  json hasse = json::array();
  for (auto [a, b] : r.hasse) hasse.push_back({a, b});
  j = json{{"schema", kSchema},
           {"type", r.type},
           {"highest_weights", r.highest},
           {"lattice_rank", r.lattice_rank},
           {"faithful", r.faithful},
           {"warnings", r.warnings},
           {"closed_orbits", r.vertices},
           {"orbits", r.orbits},
           {"hasse", hasse},
           {"fan", json{{"label", "colored fan of the normalization"}, {"cones", r.fan}, {"covers", r.fan_covers}}},
           {"normal", to_string(r.normal)},
           {"smooth", to_string(r.smooth)},
           {"cap", r.degree_cap}};
}

inline void from_json(const json& j, AnalysisReport& r) {
  if (j.at("schema").get<std::string>() != kSchema)
    throw InputError("unsupported report schema " + j.at("schema").get<std::string>());
  r = AnalysisReport{};
  r.type = j.at("type").get<std::string>();
  r.highest = j.at("highest_weights").get<std::vector<Weight>>();
  r.lattice_rank = j.at("lattice_rank").get<std::size_t>();
  r.faithful = j.at("faithful").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.vertices = j.at("closed_orbits").get<std::vector<VertexReport>>();
  r.orbits = j.at("orbits").get<std::vector<OrbitEntry>>();
  for (const auto& e : j.at("hasse")) r.hasse.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  r.fan = j.at("fan").at("cones").get<std::vector<FanCone>>();
  r.fan_covers = j.at("fan").at("covers").get<bool>();
  auto verdict = [&](const char* key) {
    auto v = verdict_from_string(j.at(key).get<std::string>());
    if (!v) throw InputError(std::string("bad verdict in field ") + key);
    return *v;
  };
  r.normal = verdict("normal");
  r.smooth = verdict("smooth");
  r.degree_cap = j.at("cap").get<int>();
}

inline std::string to_json_text(const AnalysisReport& r) { return json(r).dump(2) + "\n"; }

inline AnalysisReport report_from_json_text(const std::string& text) {
  try {
    return json::parse(text).get<AnalysisReport>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT and text

inline std::string roots_label(const std::vector<std::size_t>& roots) {
  std::string s = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? "," : "") + std::string("a") + std::to_string(roots[i] + 1);
  return s + "}";
}

/// Hasse diagram of the orbit poset; nodes carry dimension and Pi_Gamma.
inline std::string to_dot(const AnalysisReport& r) {
  std::ostringstream os;
  os << "digraph orbits {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < r.orbits.size(); ++i)
    os << "  o" << i << " [label=\"dim " << r.orbits[i].dimension << "\\n" << roots_label(r.orbits[i].direction_roots)
       << "\"];\n";
  for (auto [a, b] : r.hasse) os << "  o" << a << " -> o" << b << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string witness_text(const CriterionReport& n) {
  if (!n.missing) return "";
  std::string s = "missing " + to_string(*n.missing);
  if (n.multiple) s += ", present " + std::to_string(*n.multiple) + "x at degree " + std::to_string(*n.multiple_degree);
  if (n.absence_certified) s += ", absence certified";
  return s;
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group " << r.type << ", highest weights";
  for (const auto& w : r.highest) os << ' ' << to_string(w);
  os << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  os << "normal: " << to_string(r.normal) << "\nsmooth: " << to_string(r.smooth) << "\n";
  os << "closed orbits: " << r.vertices.size() << "\n";
  for (const auto& v : r.vertices) {
    os << "  vertex " << to_string(v.vertex) << "  L = " << v.levi << "\n";
    os << "    L-weights:";
    for (const auto& w : v.l_weights) os << ' ' << to_string(w);
    os << "\n    generators:";
    for (const auto& w : v.lgens) os << ' ' << to_string(w);
    os << "\n    slice cone rays:";
    for (const auto& ray : v.slice_cone) {
      os << " [";
      for (std::size_t i = 0; i < ray.size(); ++i) os << (i ? "," : "") << ray[i];
      os << "]";
    }
    os << "\n    normality: " << to_string(v.normality.verdict);
    if (auto w = witness_text(v.normality); !w.empty()) os << " (" << w << ")";
    if (v.shortcut) os << " [" << *v.shortcut << "]";
    os << "\n    torus closure normal: " << (v.torus_closure_normal ? "yes" : "no");
    os << "\n    smoothness: " << to_string(v.smoothness.verdict);
    if (v.smoothness.failed_condition) os << " (condition " << *v.smoothness.failed_condition << " fails)";
    os << "\n";
  }
  if (!r.orbits.empty()) {
    os << "orbits: " << r.orbits.size() << "\n";
    for (std::size_t i = 0; i < r.orbits.size(); ++i)
      os << "  [" << i << "] dim " << r.orbits[i].dimension << "  Pi_Gamma " << roots_label(r.orbits[i].direction_roots)
         << "  colors " << roots_label(r.orbits[i].colors) << "\n";
    os << "hasse:";
    for (auto [a, b] : r.hasse) os << ' ' << a << "<" << b;
    os << "\ncolored fan of the normalization: " << r.fan.size() << " maximal cones, covers -C: "
       << (r.fan_covers ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace rgc
