// Copyright 2026 The sumset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sumset/expr.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace sumset {

namespace {

using Kind = SetExpression::Kind;

const std::map<std::string, std::pair<Kind, int>, std::less<>> kFunctions = {
    {"union", {Kind::kUnion, 2}}, {"inter", {Kind::kInter, 2}}, {"compl", {Kind::kCompl, 1}},
    {"diff", {Kind::kDiff, 2}},   {"sum", {Kind::kSum, 2}},     {"hsum", {Kind::kHsum, 2}},
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpression parse() {
    SetExpression e = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Int integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return parse_int(text_.substr(start, pos_ - start));
  }

  SetExpression atom(LinearSet s, std::size_t at) {
    SetExpression e;
    e.atom = std::move(s);
    e.position = at;
    return e;
  }

  SetExpression expression() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (auto it = kFunctions.find(name); it != kFunctions.end()) return call(it->second, at);
      if (name == "empty") return atom(LinearSet(), at);
      if (name == "Z") return atom(LinearSet::integers(), at);
      if (name == "m" && peek() == '=') return serialized(at);
      pos_ = at;
      fail("unknown name '" + name + "'");
    }
    if (c == '{') return braces(at);
    if (c == '[') {
      ++pos_;
      const Int u = integer();
      expect(',');
      const Int v = integer();
      expect(']');
      return atom(LinearSet::interval_mod(u, v, class_modulus()), at);
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      const Int a = integer();
      return atom(LinearSet::interval_mod(a, a, class_modulus()), at);
    }
    fail(c == '\0' ? "unexpected end of input" : "expected a set expression");
  }

  // "+ m*Z" after a residue or an interval.
  Int class_modulus() {
    expect('+');
    const Int m = integer();
    expect('*');
    expect('Z');
    return m;
  }

  SetExpression call(std::pair<Kind, int> spec, std::size_t at) {
    SetExpression e;
    e.kind = spec.first;
    e.position = at;
    expect('(');
    if (e.kind == Kind::kHsum) {
      const std::size_t h_at = pos_;
      const Int h = integer();
      if (h < 1 || h > std::numeric_limits<std::uint64_t>::max()) {
        pos_ = h_at;
        fail("hsum needs a positive h");
      }
      e.h = h.convert_to<std::uint64_t>();
      expect(',');
      e.args.push_back(expression());
    } else {
      for (int i = 0; i < spec.second; ++i) {
        if (i) expect(',');
        e.args.push_back(expression());
      }
    }
    expect(')');
    return e;
  }

  SetExpression braces(std::size_t at) {
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return atom(LinearSet(), at);
    }
    const Int first = integer();
    if (peek() == '+') {
      ++pos_;
      const Int m = integer();
      expect('*');
      expect('t');
      expect(':');
      expect('t');
      expect(">=");
      const Int start = integer();
      expect('}');
      return atom(LinearSet::up_tail(first, m, start), at);
    }
    std::vector<Int> points{first};
    while (peek() == ',') {
      ++pos_;
      points.push_back(integer());
    }
    expect('}');
    return atom(LinearSet::finite(points), at);
  }

  // Residue lists are checked against `bound` (the modulus).
  template <class T>
  std::vector<T> int_list(const Int& bound = 0) {
    std::vector<T> out;
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      const std::size_t at = pos_;
      const Int v = integer();
      if constexpr (std::is_same_v<T, Int>) {
        out.push_back(v);
      } else {
        if (v < 0 || v >= bound) {
          pos_ = at;
          fail("residue out of range");
        }
        out.push_back(v.convert_to<T>());
      }
      if (peek() != ',') break;
      ++pos_;
    }
    expect('}');
    return out;
  }

  SetExpression serialized(std::size_t at) {
    expect('=');
    const std::size_t m_at = pos_;
    const Int m = integer();
    if (m < 1 || m > Int(kMaxModulus)) {
      pos_ = m_at;
      fail("modulus out of range");
    }
    expect(';');
    expect("lo");
    expect('=');
    const Int lo = integer();
    expect(';');
    expect("hi");
    expect('=');
    const Int hi = integer();
    expect(';');
    expect("down");
    expect('=');
    const auto down = int_list<std::size_t>(m);
    expect(';');
    expect("up");
    expect('=');
    const auto up = int_list<std::size_t>(m);
    expect(';');
    expect("mid");
    expect('=');
    const auto mid = int_list<Int>();
    return atom(LinearSet::from_parts(m, lo, hi, down, up, mid), at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetExpression parse_expression(std::string_view text) { return Parser(text).parse(); }

LinearSet evaluate(const SetExpression& e) {
  switch (e.kind) {
    case Kind::kAtom:
      return e.atom;
    case Kind::kUnion:
      return unite(evaluate(e.args[0]), evaluate(e.args[1]));
    case Kind::kInter:
      return intersect(evaluate(e.args[0]), evaluate(e.args[1]));
    case Kind::kCompl:
      return complement(evaluate(e.args[0]));
    case Kind::kDiff:
      return difference(evaluate(e.args[0]), evaluate(e.args[1]));
    case Kind::kSum:
      return minkowski_sum(evaluate(e.args[0]), evaluate(e.args[1]));
    case Kind::kHsum:
      return h_fold_sum(evaluate(e.args[0]), e.h);
  }
  throw std::logic_error("unknown expression kind");
}

LinearSet evaluate(std::string_view text) { return evaluate(parse_expression(text)); }

}  // namespace sumset
