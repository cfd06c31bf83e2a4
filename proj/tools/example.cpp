// Library usage: analyze the Sp4 compactification for highest weights
// 3w1 and 2w2 and print per-vertex verdicts.

#include <iostream>

#include "rgc/rgc.hpp"

int main() {
  using namespace rgc;
  auto rs = std::make_shared<const RootSystem>(build_root_system(parse_lie_type("C2")));
  Model m(rs, parse_weights(*rs, "3*w1, 2*w2"));

  for (const auto& cv : m.chamber_vertices()) {
    const Weight& l0 = cv.weight;
    CriterionReport n = normality_at(m, l0);
    std::cout << "vertex " << to_string(l0) << ": L = " << levi_datum(*rs, l0).label()
              << ", normality " << to_string(n.verdict);
    if (n.missing) std::cout << " (" << witness_text(n) << ")";
    std::cout << ", torus closure " << (torus_closure_normal(m, l0) ? "normal" : "not normal")
              << ", smoothness " << to_string(smoothness_at(m, l0).verdict) << "\n";
  }
  std::cout << "orbits: " << orbit_poset(m).orbits.size() << "\n";
}
