#pragma once

// Weight syntax for the command line:
//   list   := weight ((',' | ';') weight)*
//   weight := '0' | '[' int (',' int)* ']' | term (('+' | '-') term)*
//   term   := [int '*'] atom,   atom := 'w'N | 'a'N | 't'N | 'hr'
// w = fundamental weight, a = simple root, t = torus character,
// hr = highest root of a simple group. Indices start at 1.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "rgc/errors.hpp"
#include "rgc/root_system.hpp"
#include "rgc/weight.hpp"

namespace rgc {

namespace detail {

class WeightParser {
 public:
  WeightParser(const RootSystem& rs, std::string_view text) : rs_(rs), text_(text) {}

  std::vector<Weight> list() {
    std::vector<Weight> out;
    skip();
    if (pos_ == text_.size()) fail("empty weight list");
    while (true) {
      out.push_back(weight());
      skip();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',' && text_[pos_] != ';') fail("expected ',' between weights");
      ++pos_;
    }
    return out;
  }

  Weight single() {
    skip();
    Weight w = weight();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot parse weight '" + std::string(text_) + "' at position " + std::to_string(pos_) + ": " +
                     why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  long number() {
    if (!digit()) fail("expected a number");
    long v = 0;
    while (digit()) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    return v;
  }
  std::size_t index(std::size_t bound, const char* what) {
    const std::size_t at = pos_;
    long i = number();
    if (i < 1 || static_cast<std::size_t>(i) > bound) {
      pos_ = at;
      fail(std::string(what) + " index out of range 1.." + std::to_string(bound));
    }
    return static_cast<std::size_t>(i - 1);
  }

  Weight weight() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '[') return labels();
    Weight w = rs_.zero();
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      skip();
      Weight t = term();
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += sign * t[i];
      skip();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        continue;
      }
      return w;
    }
  }

  Weight labels() {
    ++pos_;
    Weight w(rs_.dim());
    std::size_t i = 0;
    while (true) {
      skip();
      int sign = 1;
      if (pos_ < text_.size() && text_[pos_] == '-') sign = -1, ++pos_;
      if (i >= rs_.dim()) fail("too many coordinates, expected " + std::to_string(rs_.dim()));
      w[i++] = static_cast<std::int32_t>(sign * number());
      skip();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        break;
      }
      fail("expected ',' or ']'");
    }
    if (i != rs_.dim()) fail("expected " + std::to_string(rs_.dim()) + " coordinates, got " + std::to_string(i));
    return w;
  }

  Weight term() {
    long k = 1;
    if (digit()) {
      const std::size_t at = pos_;
      k = number();
      skip();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip();
      } else if (k == 0 && (pos_ == text_.size() || text_[pos_] == ',' || text_[pos_] == ';')) {
        return rs_.zero();
      } else if (pos_ == text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = at;
        fail("a bare number is not a weight");
      }
    }
    Weight a = atom();
    return static_cast<std::int32_t>(k) * a;
  }

  Weight atom() {
    if (pos_ >= text_.size()) fail("expected w, a, t or hr");
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
    if (c == 'h' && pos_ + 1 < text_.size() && std::tolower(static_cast<unsigned char>(text_[pos_ + 1])) == 'r') {
      if (rs_.factors.size() != 1) fail("'hr' needs exactly one simple factor");
      pos_ += 2;
      return rs_.highest_root(0);
    }
    ++pos_;
    switch (c) {
      case 'w': return rs_.fundamental(index(rs_.ss_rank, "fundamental weight"));
      case 'a': return rs_.simple_root(index(rs_.ss_rank, "simple root"));
      case 't': return rs_.torus_character(index(rs_.torus_rank, "torus character"));
      default: --pos_; fail("expected w, a, t or hr");
    }
  }

  const RootSystem& rs_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<Weight> parse_weights(const RootSystem& rs, std::string_view text) {
  return detail::WeightParser(rs, text).list();
}

inline Weight parse_weight(const RootSystem& rs, std::string_view text) {
  return detail::WeightParser(rs, text).single();
}

}  // namespace rgc
