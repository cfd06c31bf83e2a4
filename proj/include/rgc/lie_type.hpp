#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rgc/errors.hpp"

namespace rgc {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleFactor {
  Series series;
  int rank;

  bool operator==(const SimpleFactor&) const = default;
};

/// A connected reductive group up to isogeny: simple factors plus a central
/// torus. Printed and parsed as "B3xA1+T1".
struct LieType {
  std::vector<SimpleFactor> factors;
  int torus_rank = 0;

  int semisimple_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  int rank() const { return semisimple_rank() + torus_rank; }

  bool operator==(const LieType&) const = default;
};

inline constexpr int kMaxTotalRank = 16;

inline void validate(const SimpleFactor& f) {
  const int r = f.rank;
  auto bad = [&](const char* why) {
    throw InputError(std::string("invalid simple factor ") + static_cast<char>(f.series) +
                     std::to_string(r) + ": " + why);
  };
  if (r < 1) bad("rank must be positive");
  switch (f.series) {
    case Series::A:
    case Series::B:
    case Series::C:
      break;
    case Series::D:
      if (r < 3) bad("series D needs rank >= 3");
      break;
    case Series::E:
      if (r < 6 || r > 8) bad("series E exists only in ranks 6, 7, 8");
      break;
    case Series::F:
      if (r != 4) bad("series F exists only in rank 4");
      break;
    case Series::G:
      if (r != 2) bad("series G exists only in rank 2");
      break;
  }
}

inline void validate(const LieType& t) {
  for (const auto& f : t.factors) validate(f);
  if (t.torus_rank < 0) throw InputError("torus rank must be nonnegative");
  if (t.factors.empty() && t.torus_rank == 0)
    throw InputError("Lie type needs at least one simple factor or a torus");
  if (t.rank() > kMaxTotalRank)
    throw CapabilityError("total rank " + std::to_string(t.rank()) + " exceeds the supported " +
                          std::to_string(kMaxTotalRank));
}

inline std::string to_string(const LieType& t) {
  std::string s;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) s += 'x';
    s += static_cast<char>(t.factors[i].series);
    s += std::to_string(t.factors[i].rank);
  }
  if (t.torus_rank > 0) {
    if (!s.empty()) s += '+';
    s += "T" + std::to_string(t.torus_rank);
  }
  return s;
}

/// Parses "A3", "B3xA1+T1", "T2". Errors report the character offset.
inline LieType parse_lie_type(std::string_view text) {
  LieType t;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse Lie type '" + std::string(text) + "' at position " +
                     std::to_string(pos) + ": " + why);
  };
  auto read_int = [&]() {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a rank");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) fail("rank too large");
      ++pos;
    }
    return v;
  };
  if (text.empty()) fail("empty string");
  bool expect_factor = true;
  while (pos < text.size()) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (c == 'T' && expect_factor) {
      ++pos;
      t.torus_rank += read_int();
      expect_factor = false;
      if (pos != text.size()) fail("torus must come last");
      break;
    }
    if (!expect_factor) {
      if (c == 'X' || c == '*') {
        ++pos;
        expect_factor = true;
        continue;
      }
      if (c == '+') {
        ++pos;
        if (pos >= text.size() || std::toupper(static_cast<unsigned char>(text[pos])) != 'T')
          fail("expected 'T' after '+'");
        ++pos;
        t.torus_rank += read_int();
        if (pos != text.size()) fail("trailing characters");
        break;
      }
      fail("expected 'x' or '+T'");
    }
    if (c < 'A' || c > 'G') fail("unknown series");
    ++pos;
    SimpleFactor f{static_cast<Series>(c), read_int()};
    t.factors.push_back(f);
    expect_factor = false;
  }
  if (expect_factor && t.torus_rank == 0) fail("dangling factor separator");
  validate(t);
  return t;
}

}  // namespace rgc
