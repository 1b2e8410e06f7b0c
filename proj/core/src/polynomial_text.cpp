#include "grm/polynomial_text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace grm {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int m) : m_(m) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  std::vector<RawTerm> parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<RawTerm> terms;
    terms.push_back(term());
    while (pos_ < s_.size()) {
      expect('+');
      terms.push_back(term());
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " +
                                what);
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::uint64_t number() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t v = 0;
    while (at_digit()) {
      if (v > (std::uint64_t(1) << 40)) fail("number too large");
      v = v * 10 + std::uint64_t(s_[pos_++] - '0');
    }
    return v;
  }

  RawTerm term() {
    RawTerm t;
    t.exponents.assign(m_, 0);
    t.coefficient = 1;
    if (at_digit()) {
      t.coefficient = number();
    } else {
      factor(t);
    }
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(RawTerm& t) {
    if (pos_ >= s_.size()) fail("expected a variable");
    const char c = s_[pos_];
    int var = -1;
    if (c == 'x' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      const auto idx = number();
      if (idx < 1 || idx > std::uint64_t(m_)) fail("variable index out of range 1.." + std::to_string(m_));
      var = int(idx) - 1;
    } else if (c == 'x' || c == 'y' || c == 'z') {
      if (m_ > 3) fail("aliases x, y, z need m <= 3; use x1..xm");
      var = c - 'x';
      if (var >= m_) fail(std::string("variable '") + c + "' exceeds m=" + std::to_string(m_));
      ++pos_;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    std::uint64_t e = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      e = number();
    }
    t.exponents[var] += std::uint32_t(e);
  }

  std::string s_;
  std::size_t pos_ = 0;
  int m_;
};

std::string variable_name(int i, int m) {
  if (m <= 3) return std::string(1, char('x' + i));
  return "x" + std::to_string(i + 1);
}

}  // namespace

RawPolynomial parse_raw_polynomial(std::string_view text, Field field, int m) {
  Parser parser(text, m);
  RawPolynomial raw{std::move(field), m, parser.parse()};
  for (const auto& t : raw.terms) {
    if (t.coefficient >= raw.field->q() && raw.field->degree() > 1) {
      throw std::invalid_argument("coefficient " + std::to_string(t.coefficient) +
                                  " is not an element code of F_" + raw.field->name());
    }
  }
  return raw;
}

ReducedPolynomial parse_polynomial(std::string_view text, Field field, int m) {
  return reduce(parse_raw_polynomial(text, std::move(field), m));
}

std::string format_polynomial(const ReducedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Elem>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return listing_less(a.first, b.first); });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += "+";
    std::string mono;
    for (int i = 0; i < p.m(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(i, p.m());
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace grm
