// rgc: wonderful-style compactifications of reductive groups from the command line.
//
//   rgc analyze <type> <weights> [--json F] [--dot F] [--cap N]
//   rgc table <scope> [--allow-heavy]
//   rgc tensor <type> <lambda> <mu>
//   rgc branch <type> <lambda> <lambda0>
//
// Exit codes: 0 ok, 1 mismatch, 2 undetermined verdict, 3 input error.
// RGC_THREADS bounds the worker count (default 1).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rgc/rgc.hpp"

namespace {

constexpr int kOk = 0, kMismatch = 1, kUnknown = 2, kInputError = 3;

unsigned threads_from_env() {
  const char* s = std::getenv("RGC_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v < 1 || v > 1024) throw rgc::InputError(std::string("RGC_THREADS must be an integer in 1..1024, got '") + s + "'");
  return static_cast<unsigned>(v);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw rgc::InputError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw rgc::InputError("write to " + path + " failed");
}

std::shared_ptr<const rgc::RootSystem> root_system(const std::string& type) {
  return std::make_shared<const rgc::RootSystem>(rgc::build_root_system(rgc::parse_lie_type(type)));
}

std::string ambient_text(const rgc::RootSystem& rs, const rgc::Weight& w) {
  std::string s = "(";
  auto v = rs.to_ambient(w);
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

int cmd_analyze(const std::string& type, const std::string& weights, const std::string& json_path,
                const std::string& dot_path, int cap) {
  auto rs = root_system(type);
  rgc::Model m(rs, rgc::parse_weights(*rs, weights));
  rgc::AnalyzeOptions opt;
  opt.normality.degree_cap = cap;
  opt.threads = threads_from_env();
  rgc::AnalysisReport r = rgc::analyze(m, opt);

  std::cout << rgc::to_text(r);
  for (const auto& v : r.vertices) {
    std::cout << "slice at " << rgc::to_string(v.vertex) << ", L-weights in ambient coordinates:";
    for (const auto& w : v.l_weights) std::cout << ' ' << ambient_text(*rs, w);
    const auto levi = rgc::levi_subsystem(*rs, rgc::levi_datum(*rs, v.vertex));
    std::cout << "\n  as -w0_L(mu - lambda0):";
    for (const auto& w : v.l_weights) std::cout << ' ' << ambient_text(*rs, rgc::dominant_reflect(levi, -w).dominant);
    std::cout << "\n";
  }
  if (!json_path.empty()) write_file(json_path, rgc::to_json_text(r));
  if (!dot_path.empty()) write_file(dot_path, rgc::to_dot(r));
  return r.normal == rgc::Verdict::Unknown || r.smooth == rgc::Verdict::Unknown ? kUnknown : kOk;
}

int cmd_table(const std::string& scope, bool allow_heavy) {
  auto results = rgc::run_table(scope, threads_from_env(), allow_heavy);
  std::size_t failed = 0;
  bool unknown = false;
  for (const auto& r : results) {
    const auto& v = r.vertex;
    std::cout << (r.check.ok ? "PASS " : "FAIL ") << rgc::row_name(r.row) << "  L=" << v.levi << "  normal "
              << rgc::to_string(v.normality.verdict) << "  smooth " << rgc::to_string(v.smoothness.verdict);
    if (auto w = rgc::witness_text(v.normality); !w.empty()) std::cout << "  [" << w << "]";
    std::cout << "\n";
    for (const auto& msg : r.check.mismatches) std::cout << "    " << msg << "\n";
    if (!r.check.ok) ++failed;
    unknown |= v.normality.verdict == rgc::Verdict::Unknown || v.smoothness.verdict == rgc::Verdict::Unknown;
  }
  std::cout << results.size() - failed << "/" << results.size() << " rows match\n";
  if (unknown) return kUnknown;
  return failed ? kMismatch : kOk;
}

int cmd_tensor(const std::string& type, const std::string& a, const std::string& b) {
  auto rs = root_system(type);
  auto dec = rgc::tensor_decompose(*rs, rgc::parse_weight(*rs, a), rgc::parse_weight(*rs, b));
  for (auto it = dec.rbegin(); it != dec.rend(); ++it)
    std::cout << rgc::to_string(it->first) << "  x" << it->second << "  dim " << rgc::weyl_dimension(*rs, it->first)
              << "\n";
  return kOk;
}

int cmd_branch(const std::string& type, const std::string& a, const std::string& b) {
  auto rs = root_system(type);
  const rgc::Weight lambda = rgc::parse_weight(*rs, a);
  const rgc::Weight l0 = rgc::parse_weight(*rs, b);
  if (!rs->is_dominant(l0)) throw rgc::InputError("lambda0 " + rgc::to_string(l0) + " is not dominant");
  rgc::LeviDatum levi = rgc::levi_datum(*rs, l0);
  std::cout << "L = " << levi.label() << " " << rgc::roots_label(levi.simple_root_indices) << "\n";
  for (const auto& [label, mult] : rgc::branch_to_levi(*rs, lambda, levi))
    std::cout << rgc::to_string(label.highest_weight) << "  x" << mult << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant compactifications of reductive groups: orbits, normality, smoothness"};
  app.require_subcommand(1);

  std::string type, weights, json_path, dot_path, scope, a, b;
  int cap = 8;
  bool allow_heavy = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze the closure of G in P(End V) for the given highest weights");
  analyze->add_option("type", type, "group type, e.g. B3 or A1xA1xT1")->required();
  analyze->add_option("weights", weights, "highest weights, e.g. 'w1', 'hr', 'w1,2*w2', '[1,0,0]'")->required();
  analyze->add_option("--json", json_path, "write the report as JSON");
  analyze->add_option("--dot", dot_path, "write the orbit Hasse diagram as DOT");
  analyze->add_option("--cap", cap, "tensor degree cap for the normality search")->check(CLI::Range(1, 64));

  auto* table = app.add_subcommand("table", "Check the built-in normality and smoothness table");
  table->add_option("scope", scope, "classical-small, exceptional-fg, stretch-e6 or heavy")->required();
  table->add_flag("--allow-heavy", allow_heavy, "permit the E6/E7/E8 rows of scope heavy");

  auto* tensor = app.add_subcommand("tensor", "Decompose V(lambda) x V(mu)");
  tensor->add_option("type", type)->required();
  tensor->add_option("lambda", a)->required();
  tensor->add_option("mu", b)->required();

  auto* branch = app.add_subcommand("branch", "Restrict V(lambda) to the Levi subgroup of P(lambda0)");
  branch->add_option("type", type)->required();
  branch->add_option("lambda", a)->required();
  branch->add_option("lambda0", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(type, weights, json_path, dot_path, cap);
    if (*table) return cmd_table(scope, allow_heavy);
    if (*tensor) return cmd_tensor(type, a, b);
    if (*branch) return cmd_branch(type, a, b);
  } catch (const rgc::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const rgc::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const rgc::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kUnknown;
  } catch (const rgc::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kUnknown;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return kOk;
}
