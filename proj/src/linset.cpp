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

#include "sumset/linset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "piecewise.hpp"

namespace sumset {

using detail::Access;
using detail::Piecewise;
using detail::PieceUnion;

std::size_t gcd_size(std::size_t a, std::size_t b) { return std::gcd(a, b); }

std::size_t lcm_size(std::size_t a, std::size_t b) {
  const std::size_t g = std::gcd(a, b);
  const std::size_t q = a / g;
  if (q != 0 && b > kMaxModulus / q) {
    throw CapacityExceeded("common modulus lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                           ") exceeds the residue table limit");
  }
  return q * b;
}

std::size_t to_modulus(const Int& m) {
  if (m < 1) throw InvalidParameters("modulus must be positive, got " + m.str());
  if (m > kMaxModulus) throw CapacityExceeded("modulus " + m.str() + " exceeds the table limit");
  return m.convert_to<std::size_t>();
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  if (i == text.size()) throw InvalidParameters("expected an integer, got '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InvalidParameters("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Int(-value) : value;
}

namespace {

ResidueMask single(std::size_t m, std::size_t r) {
  ResidueMask mask(m);
  mask.set(r);
  return mask;
}

Piecewise global(ResidueMask pattern) {
  Piecewise p;
  p.modulus = pattern.size();
  p.patterns = {std::move(pattern)};
  return p;
}

// Members of the period-m pattern in [start, end), appended unsorted.
void enumerate_pattern(const ResidueMask& mask, const Int& start, const Int& end,
                       std::vector<Int>& out) {
  if (start >= end || mask.none()) return;
  const std::size_t m = mask.size();
  const Int estimate = ((end - start) / m + 1) * mask.count();
  if (estimate + out.size() > kMaxExplicit) {
    throw CapacityExceeded("window listing would exceed " + std::to_string(kMaxExplicit) +
                           " points");
  }
  const std::size_t r0 = floor_mod(start, m);
  for (std::size_t r = mask.find_first(); r != ResidueMask::npos; r = mask.find_next(r)) {
    for (Int x = start + (r + m - r0) % m; x < end; x += m) out.push_back(x);
  }
}

// Least x >= from (and < limit when given) whose residue is in mask.
std::optional<Int> first_at_or_above(const ResidueMask& mask, const Int& from,
                                     const std::optional<Int>& limit = std::nullopt) {
  if (mask.none()) return std::nullopt;
  const std::size_t m = mask.size();
  const std::size_t r0 = floor_mod(from, m);
  for (std::size_t off = 0; off < m; ++off) {
    if (!mask[(r0 + off) % m]) continue;
    Int x = from + off;
    if (limit && x >= *limit) return std::nullopt;
    return x;
  }
  return std::nullopt;
}

// Greatest x <= from (and >= limit when given) whose residue is in mask.
std::optional<Int> last_at_or_below(const ResidueMask& mask, const Int& from,
                                    const std::optional<Int>& limit = std::nullopt) {
  if (mask.none()) return std::nullopt;
  const std::size_t m = mask.size();
  const std::size_t r0 = floor_mod(from, m);
  for (std::size_t off = 0; off < m; ++off) {
    if (!mask[(r0 + m - off) % m]) continue;
    Int x = from - off;
    if (limit && x < *limit) return std::nullopt;
    return x;
  }
  return std::nullopt;
}

LinearSet boolean(const LinearSet& a, const LinearSet& b, bool (*op)(bool, bool)) {
  const std::size_t m = lcm_size(a.modulus(), b.modulus());
  return detail::canonicalize(
      detail::combine(detail::to_piecewise(a, m), detail::to_piecewise(b, m), op));
}

}  // namespace

LinearSet::LinearSet() : down_(1), up_(1) {}

LinearSet LinearSet::integers() { return Access::make(1, 0, 0, single(1, 0), single(1, 0), {}); }

LinearSet LinearSet::interval_mod(const Int& u, const Int& v, const Int& m) {
  if (u > v) throw InvalidParameters("interval_mod requires u <= v");
  const std::size_t mod = to_modulus(m);
  if (v - u + 1 >= m) return integers();
  ResidueMask mask(mod);
  const std::size_t r0 = floor_mod(u, mod);
  const std::size_t count = (v - u + 1).convert_to<std::size_t>();
  for (std::size_t i = 0; i < count; ++i) mask.set((r0 + i) % mod);
  return detail::canonicalize(global(std::move(mask)));
}

LinearSet LinearSet::up_tail(const Int& a, const Int& m, const Int& start) {
  const std::size_t mod = to_modulus(m);
  Piecewise p;
  p.modulus = mod;
  p.cuts = {a + m * start};
  p.patterns = {ResidueMask(mod), single(mod, floor_mod(a, mod))};
  return detail::canonicalize(p);
}

LinearSet LinearSet::below(const Int& end) {
  Piecewise p;
  p.cuts = {end};
  p.patterns = {single(1, 0), ResidueMask(1)};
  return detail::canonicalize(p);
}

LinearSet LinearSet::finite(std::span<const Int> elements) {
  Piecewise p = global(ResidueMask(1));
  for (const Int& x : elements) p.overrides.emplace(x, true);
  return detail::canonicalize(p);
}

LinearSet LinearSet::finite(std::initializer_list<long long> elements) {
  std::vector<Int> xs(elements.begin(), elements.end());
  return finite(xs);
}

LinearSet LinearSet::from_parts(const Int& m, const Int& lo, const Int& hi,
                                std::span<const std::size_t> down,
                                std::span<const std::size_t> up, std::span<const Int> middle) {
  const std::size_t mod = to_modulus(m);
  if (lo > hi) throw InvalidParameters("lo cut must not exceed hi cut");
  ResidueMask d(mod);
  ResidueMask u(mod);
  for (std::size_t r : down) {
    if (r >= mod) throw InvalidParameters("down residue " + std::to_string(r) + " out of range");
    d.set(r);
  }
  for (std::size_t r : up) {
    if (r >= mod) throw InvalidParameters("up residue " + std::to_string(r) + " out of range");
    u.set(r);
  }
  Piecewise p;
  p.modulus = mod;
  if (lo == hi) {
    p.cuts = {lo};
    p.patterns = {std::move(d), std::move(u)};
  } else {
    p.cuts = {lo, hi};
    p.patterns = {std::move(d), ResidueMask(mod), std::move(u)};
  }
  for (const Int& x : middle) {
    if (x < lo || x >= hi) {
      throw InvalidParameters("middle point " + x.str() + " outside [lo, hi)");
    }
    p.overrides.emplace(x, true);
  }
  return detail::canonicalize(p);
}

bool LinearSet::is_empty() const { return down_.none() && up_.none() && middle_.empty(); }

bool LinearSet::is_integers() const {
  return modulus_ == 1 && down_[0] && up_[0] && middle_.empty();
}

std::vector<std::size_t> LinearSet::down_residues() const {
  std::vector<std::size_t> out;
  for (std::size_t r = down_.find_first(); r != ResidueMask::npos; r = down_.find_next(r)) {
    out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> LinearSet::up_residues() const {
  std::vector<std::size_t> out;
  for (std::size_t r = up_.find_first(); r != ResidueMask::npos; r = up_.find_next(r)) {
    out.push_back(r);
  }
  return out;
}

bool LinearSet::contains(const Int& x) const {
  if (x < lo_) return down_[floor_mod(x, modulus_)];
  if (x >= hi_) return up_[floor_mod(x, modulus_)];
  return std::binary_search(middle_.begin(), middle_.end(), x);
}

std::vector<Int> LinearSet::window(const Int& lo, const Int& hi) const {
  if (lo > hi) throw InvalidParameters("window requires lo <= hi");
  std::vector<Int> out;
  enumerate_pattern(down_, lo, std::min<Int>(hi + 1, lo_), out);
  for (auto it = std::lower_bound(middle_.begin(), middle_.end(), lo);
       it != middle_.end() && *it <= hi; ++it) {
    out.push_back(*it);
  }
  enumerate_pattern(up_, std::max(lo, hi_), hi + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Int> LinearSet::min() const {
  if (!down_.none()) return std::nullopt;
  if (!middle_.empty()) return middle_.front();
  return first_at_or_above(up_, hi_);
}

std::optional<Int> LinearSet::max() const {
  if (!up_.none()) return std::nullopt;
  if (!middle_.empty()) return middle_.back();
  return last_at_or_below(down_, lo_ - 1);
}

std::optional<Int> LinearSet::nearest_to_zero() const {
  std::vector<Int> candidates;
  auto add = [&](const std::optional<Int>& x) {
    if (x) candidates.push_back(*x);
  };
  if (!middle_.empty()) {
    auto it = std::lower_bound(middle_.begin(), middle_.end(), Int(0));
    if (it != middle_.end()) candidates.push_back(*it);
    if (it != middle_.begin()) candidates.push_back(*std::prev(it));
  }
  add(first_at_or_above(up_, std::max<Int>(hi_, 0)));
  if (hi_ < 0) add(last_at_or_below(up_, -1, hi_));
  add(last_at_or_below(down_, std::min<Int>(lo_ - 1, -1)));
  if (lo_ > 0) add(first_at_or_above(down_, 0, lo_));
  if (candidates.empty()) return std::nullopt;
  return *std::min_element(candidates.begin(), candidates.end(), [](const Int& x, const Int& y) {
    const Int ax = abs(x);
    const Int ay = abs(y);
    return ax != ay ? ax < ay : x > y;
  });
}

LinearSet LinearSet::down_part() const {
  Piecewise p;
  p.modulus = modulus_;
  p.cuts = {lo_};
  p.patterns = {down_, ResidueMask(modulus_)};
  return detail::canonicalize(p);
}

LinearSet unite(const LinearSet& a, const LinearSet& b) {
  return boolean(a, b, [](bool x, bool y) { return x || y; });
}

LinearSet intersect(const LinearSet& a, const LinearSet& b) {
  return boolean(a, b, [](bool x, bool y) { return x && y; });
}

LinearSet difference(const LinearSet& a, const LinearSet& b) {
  return boolean(a, b, [](bool x, bool y) { return x && !y; });
}

LinearSet complement(const LinearSet& a) {
  Piecewise p = detail::to_piecewise(a, a.modulus());
  for (auto& pattern : p.patterns) pattern.flip();
  for (auto& [x, v] : p.overrides) v = !v;
  return detail::canonicalize(p);
}

bool is_subset(const LinearSet& a, const LinearSet& b) { return difference(a, b).is_empty(); }

namespace {

struct UpTail {
  Int cut;
  ResidueMask mask;
};

// Sum of two up tails {x >= cut, x mod m in mask}. Above
// cut_a + cut_b + m_a + m_b + lcm every class mod gcd that is hit at all is
// hit entirely; below that the sums are listed explicitly.
void add_up_up(const UpTail& a, const UpTail& b, std::vector<Int>& points,
               std::vector<PieceUnion::Tail>& tails) {
  if (a.mask.none() || b.mask.none()) return;
  const std::size_t ma = a.mask.size();
  const std::size_t mb = b.mask.size();
  const std::size_t g = gcd_size(ma, mb);
  const std::size_t width = ma + mb + lcm_size(ma, mb);

  ResidueMask classes(g);
  for (std::size_t r = a.mask.find_first(); r != ResidueMask::npos; r = a.mask.find_next(r)) {
    for (std::size_t s = b.mask.find_first(); s != ResidueMask::npos; s = b.mask.find_next(s)) {
      classes.set((r + s) % g);
    }
  }

  // Offsets relative to the cuts; bit o of `sums` means cut_a + cut_b + o.
  ResidueMask in_b(width);
  const std::size_t rb = floor_mod(b.cut, mb);
  for (std::size_t o = 0; o < width; ++o) in_b[o] = b.mask[(rb + o) % mb];
  ResidueMask sums(width);
  const std::size_t ra = floor_mod(a.cut, ma);
  for (std::size_t o = 0; o < width; ++o) {
    if (a.mask[(ra + o) % ma]) sums |= in_b << o;
  }
  const Int base = a.cut + b.cut;
  for (std::size_t o = sums.find_first(); o != ResidueMask::npos; o = sums.find_next(o)) {
    points.push_back(base + o);
  }
  tails.push_back({base + width, g, std::move(classes)});
}

UpTail up_of(const LinearSet& s) { return {s.hi_cut(), s.up_mask()}; }

// The down tail mirrored into an up tail: {x < lo} -> {y >= 1 - lo}.
UpTail mirrored_down_of(const LinearSet& s) { return {1 - s.lo_cut(), detail::negate(s.down_mask())}; }

}  // namespace

LinearSet minkowski_sum(const LinearSet& a, const LinearSet& b) {
  if (a.is_empty() || b.is_empty()) return LinearSet();

  PieceUnion pieces;
  for (const Int& x : a.middle()) {
    for (const Int& y : b.middle()) pieces.points.push_back(x + y);
  }

  // Finite part of one operand shifts the other operand's tails.
  auto shift_tails = [&](const LinearSet& fin, const LinearSet& other) {
    const std::size_t m = other.modulus();
    for (const Int& f : fin.middle()) {
      const std::size_t shift = floor_mod(f, m);
      if (other.up_mask().any()) {
        pieces.ups.push_back({other.hi_cut() + f, m, detail::rotate(other.up_mask(), shift)});
      }
      if (other.down_mask().any()) {
        pieces.downs.push_back({other.lo_cut() + f, m, detail::rotate(other.down_mask(), shift)});
      }
    }
  };
  shift_tails(a, b);
  shift_tails(b, a);

  add_up_up(up_of(a), up_of(b), pieces.points, pieces.ups);

  {
    std::vector<Int> points;
    std::vector<PieceUnion::Tail> tails;
    add_up_up(mirrored_down_of(a), mirrored_down_of(b), points, tails);
    for (const Int& y : points) pieces.points.push_back(-y);
    for (auto& t : tails) pieces.downs.push_back({1 - t.cut, t.modulus, detail::negate(t.mask)});
  }

  // A down tail plus an up tail fills whole classes modulo the gcd.
  auto full_lines = [&](const ResidueMask& down, const ResidueMask& up) {
    if (down.none() || up.none()) return;
    const std::size_t g = gcd_size(down.size(), up.size());
    ResidueMask classes(g);
    for (std::size_t r = down.find_first(); r != ResidueMask::npos; r = down.find_next(r)) {
      for (std::size_t s = up.find_first(); s != ResidueMask::npos; s = up.find_next(s)) {
        classes.set((r + s) % g);
      }
    }
    pieces.periodic.push_back({g, std::move(classes)});
  };
  full_lines(a.down_mask(), b.up_mask());
  full_lines(b.down_mask(), a.up_mask());

  return detail::canonicalize(pieces.build());
}

LinearSet h_fold_sum(const LinearSet& a, std::uint64_t h) {
  if (h < 1) throw InvalidParameters("h_fold_sum requires h >= 1");
  std::optional<LinearSet> result;
  LinearSet power = a;
  while (true) {
    if (h & 1U) result = result ? minkowski_sum(*result, power) : power;
    h >>= 1U;
    if (h == 0) break;
    power = minkowski_sum(power, power);
  }
  return *result;
}

namespace {

template <typename Range>
void write_list(std::ostream& os, const Range& items) {
  os << '{';
  bool first = true;
  for (const auto& x : items) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) {
      throw ParseError(pos_, "expected '" + std::string(token) + "'");
    }
    pos_ += token.size();
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  Int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    try {
      return parse_int(text_.substr(start, pos_ - start));
    } catch (const InvalidParameters&) {
      throw ParseError(start, "expected an integer");
    }
  }

  std::vector<Int> list() {
    expect("{");
    std::vector<Int> out;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(integer());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect("}");
      return out;
    }
  }

  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> residues_of(const std::vector<Int>& xs, const Int& m, std::size_t at) {
  std::vector<std::size_t> out;
  for (const Int& x : xs) {
    if (x < 0 || x >= m) throw ParseError(at, "residue out of range [0, m)");
    out.push_back(x.convert_to<std::size_t>());
  }
  return out;
}

}  // namespace

std::string to_string(const LinearSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LinearSet& s) {
  if (s.is_empty()) return os << "empty";
  os << "m=" << s.modulus() << "; lo=" << s.lo_cut() << "; hi=" << s.hi_cut() << "; down=";
  write_list(os, s.down_residues());
  os << "; up=";
  write_list(os, s.up_residues());
  os << "; mid=";
  write_list(os, s.middle());
  return os;
}

LinearSet parse_linear_set(std::string_view text) {
  Cursor c(text);
  c.skip_space();
  if (text.substr(c.position()).starts_with("empty")) {
    c.expect("empty");
    if (!c.at_end()) throw ParseError(c.position(), "trailing input");
    return LinearSet();
  }
  c.expect("m=");
  const Int m = c.integer();
  c.expect(";");
  c.expect("lo=");
  const Int lo = c.integer();
  c.expect(";");
  c.expect("hi=");
  const Int hi = c.integer();
  c.expect(";");
  c.expect("down=");
  const std::size_t down_at = c.position();
  const auto down = residues_of(c.list(), m, down_at);
  c.expect(";");
  c.expect("up=");
  const std::size_t up_at = c.position();
  const auto up = residues_of(c.list(), m, up_at);
  c.expect(";");
  c.expect("mid=");
  const auto mid = c.list();
  if (!c.at_end()) throw ParseError(c.position(), "trailing input");
  return LinearSet::from_parts(m, lo, hi, down, up, mid);
}

}  // namespace sumset
