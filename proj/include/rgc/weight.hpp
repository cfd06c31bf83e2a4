#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rgc/lie_type.hpp"

namespace rgc {

/// An integral weight stored by its coordinates in the fundamental-weight
/// basis (Dynkin labels), followed by the coordinates of the central torus
/// characters. The pairing with the simple coroot alpha_i^vee is c[i].
struct Weight {
  std::array<std::int32_t, kMaxTotalRank> c{};
  std::uint8_t n = 0;

  Weight() = default;
  explicit Weight(std::size_t size) : n(static_cast<std::uint8_t>(size)) {}
  Weight(std::initializer_list<std::int32_t> xs) : n(static_cast<std::uint8_t>(xs.size())) {
    std::copy(xs.begin(), xs.end(), c.begin());
  }
  static Weight from(const std::vector<int>& xs) {
    Weight w(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) w.c[i] = xs[i];
    return w;
  }

  std::size_t size() const { return n; }
  std::int32_t& operator[](std::size_t i) { return c[i]; }
  std::int32_t operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const {
    return std::all_of(c.begin(), c.begin() + n, [](std::int32_t x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (std::size_t i = 0; i < a.n; ++i) a.c[i] = -a.c[i];
    return a;
  }
  friend Weight operator*(std::int32_t k, Weight a) {
    for (std::size_t i = 0; i < a.n; ++i) a.c[i] *= k;
    return a;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.n == b.n && std::equal(a.c.begin(), a.c.begin() + a.n, b.c.begin());
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (auto cmp = a.n <=> b.n; cmp != 0) return cmp;
    for (std::size_t i = 0; i < a.n; ++i)
      if (auto cmp = a.c[i] <=> b.c[i]; cmp != 0) return cmp;
    return std::strong_ordering::equal;
  }

  std::vector<int> to_vector() const { return std::vector<int>(c.begin(), c.begin() + n); }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ w.n;
    for (std::size_t i = 0; i < w.n; ++i) {
      h ^= static_cast<std::uint32_t>(w.c[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// "[1,0,-2]" form of the coordinates.
inline std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.n; ++i) {
    if (i) s += ',';
    s += std::to_string(w.c[i]);
  }
  return s + "]";
}

}  // namespace rgc
