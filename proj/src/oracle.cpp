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

#include "sumset/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sumset::oracle {

namespace {

// Values beyond this use the slow Int path.
constexpr long long kFastLimit = 1LL << 40;

bool fits(const Int& x) { return x > -kFastLimit && x < kFastLimit; }

// Fixed-width bit vector indexed from a base value, for sumset convolution.
class Bits {
 public:
  Bits(long long base, long long top) : base_(base), size_(top >= base ? top - base + 1 : 0) {
    words_.assign((size_ + 63) / 64, 0);
  }

  long long base() const { return base_; }
  long long top() const { return base_ + size_ - 1; }
  bool empty_range() const { return size_ == 0; }

  void set(long long v) {
    if (v < base_ || v > top()) return;
    const auto i = static_cast<std::size_t>(v - base_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  bool test(long long v) const {
    if (v < base_ || v > top()) return false;
    const auto i = static_cast<std::size_t>(v - base_);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  // this |= { v + delta : v in src }, clipped to this range.
  void or_shifted(const Bits& src, long long delta) {
    const long long shift = src.base_ + delta - base_;  // index shift
    const std::size_t n = words_.size();
    if (shift >= 0) {
      const auto ws = static_cast<std::size_t>(shift / 64);
      const auto bs = static_cast<unsigned>(shift % 64);
      for (std::size_t j = 0; j < src.words_.size() && j + ws < n; ++j) {
        const std::uint64_t w = src.words_[j];
        if (w == 0) continue;
        words_[j + ws] |= w << bs;
        if (bs != 0 && j + ws + 1 < n) words_[j + ws + 1] |= w >> (64 - bs);
      }
    } else {
      const long long neg = -shift;
      const auto ws = static_cast<std::size_t>(neg / 64);
      const auto bs = static_cast<unsigned>(neg % 64);
      for (std::size_t j = ws; j < src.words_.size(); ++j) {
        const std::uint64_t w = src.words_[j];
        if (w == 0) continue;
        const std::size_t t = j - ws;
        if (t < n) words_[t] |= w >> bs;
        if (bs != 0 && t >= 1 && t - 1 < n) words_[t - 1] |= w << (64 - bs);
      }
    }
    trim();
  }

  std::vector<Int> values() const {
    std::vector<Int> out;
    for (std::size_t j = 0; j < words_.size(); ++j) {
      std::uint64_t w = words_[j];
      while (w != 0) {
        const int b = __builtin_ctzll(w);
        out.emplace_back(base_ + static_cast<long long>(j * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  long long base_;
  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

bool covers(const WindowSample& s, const Int& from, const Int& to) {
  if (from > to) return true;
  return s.complete || (s.known_lo() <= from && s.known_hi() >= to);
}

std::vector<Int> members_in(const WindowSample& s, const Int& from, const Int& to) {
  std::vector<Int> out;
  for (auto it = std::lower_bound(s.members.begin(), s.members.end(), from);
       it != s.members.end() && *it <= to; ++it) {
    out.push_back(*it);
  }
  return out;
}

Int abs_max(const Int& lo, const Int& hi) { return std::max(abs(lo), abs(hi)); }

}  // namespace

bool WindowSample::contains(const Int& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<Int> WindowSample::core() const { return members_in(*this, lo, hi); }

WindowSample sample(const LinearSet& s, const Int& lo, const Int& hi, const Int& margin,
                    std::string source) {
  if (lo > hi) throw InvalidParameters("sample window requires lo <= hi");
  if (margin < 0) throw InvalidParameters("margin must be nonnegative");
  WindowSample out;
  out.lo = lo;
  out.hi = hi;
  out.margin = margin;
  out.members = s.window(lo - margin, hi + margin);
  out.source = source.empty() ? to_string(s) : std::move(source);
  if (s.is_empty()) {
    out.complete = true;
  } else if (s.is_finite()) {
    out.complete = *s.min() >= out.known_lo() && *s.max() <= out.known_hi();
  }
  if (s.is_bounded_below() && !s.is_empty()) out.lower_bound = s.min();
  out.provenance = Provenance{std::max(abs(s.lo_cut()), abs(s.hi_cut())), Int(s.modulus())};
  return out;
}

WindowSample sample_finite(std::vector<Int> members, std::string source) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  WindowSample out;
  out.lo = members.empty() ? Int(0) : members.front();
  out.hi = members.empty() ? Int(0) : members.back();
  out.members = std::move(members);
  out.source = std::move(source);
  out.complete = true;
  if (!out.members.empty()) out.lower_bound = out.members.front();
  return out;
}

Int pair_margin(const Provenance& a, const Provenance& b) {
  return std::max(a.cut_radius, b.cut_radius) + lcm(a.period, b.period);
}

Int hfold_margin(const Provenance& a, std::uint64_t h) {
  return Int(h - 1) * (a.cut_radius + a.period);
}

namespace {

bool pair_certified(const WindowSample& a, const WindowSample& b, const Int& lo, const Int& hi) {
  if (!a.valid || !b.valid) return false;
  if (a.complete && b.complete) return true;
  if (a.complete) {
    if (a.members.empty()) return true;
    return covers(b, lo - a.members.back(), hi - a.members.front());
  }
  if (b.complete) {
    if (b.members.empty()) return true;
    return covers(a, lo - b.members.back(), hi - b.members.front());
  }
  if (a.lower_bound && b.lower_bound) {
    return covers(a, *a.lower_bound, hi - *b.lower_bound) &&
           covers(b, *b.lower_bound, hi - *a.lower_bound);
  }
  if (a.provenance && b.provenance) {
    const Int reach = abs_max(lo, hi) + pair_margin(*a.provenance, *b.provenance);
    return covers(a, -reach, reach) && covers(b, -reach, reach);
  }
  return false;
}

}  // namespace

WindowSample brute_sumset(const WindowSample& a, const WindowSample& b, const Int& lo,
                          const Int& hi) {
  if (lo > hi) throw InvalidParameters("brute_sumset requires lo <= hi");
  WindowSample out;
  out.lo = lo;
  out.hi = hi;
  out.source = "sum(" + a.source + ", " + b.source + ")";
  out.valid = pair_certified(a, b, lo, hi);

  bool fast = fits(lo) && fits(hi);
  for (const Int& x : a.members) fast = fast && fits(x);
  for (const Int& x : b.members) fast = fast && fits(x);
  if (fast) {
    const auto l = lo.convert_to<long long>();
    const auto h = hi.convert_to<long long>();
    std::vector<long long> bv;
    bv.reserve(b.members.size());
    for (const Int& y : b.members) bv.push_back(y.convert_to<long long>());
    Bits hit(l, h);
    for (const Int& xi : a.members) {
      const auto x = xi.convert_to<long long>();
      for (auto it = std::lower_bound(bv.begin(), bv.end(), l - x); it != bv.end() && x + *it <= h;
           ++it) {
        hit.set(x + *it);
      }
    }
    out.members = hit.values();
  } else {
    std::set<Int> hit;
    for (const Int& x : a.members) {
      for (auto it = std::lower_bound(b.members.begin(), b.members.end(), lo - x);
           it != b.members.end() && x + *it <= hi; ++it) {
        hit.insert(x + *it);
      }
    }
    out.members.assign(hit.begin(), hit.end());
  }
  return out;
}

WindowSample brute_hfold(const WindowSample& a, std::uint64_t h, const Int& lo, const Int& hi) {
  if (h < 1) throw InvalidParameters("brute_hfold requires h >= 1");
  if (lo > hi) throw InvalidParameters("brute_hfold requires lo <= hi");
  WindowSample out;
  out.lo = lo;
  out.hi = hi;
  out.source = std::to_string(h) + "-fold(" + a.source + ")";

  // Range every summand of a representation of a target in [lo, hi] can be
  // moved into.
  std::optional<std::pair<Int, Int>> range;
  if (a.complete) {
    if (!a.members.empty()) range = std::pair{a.members.front(), a.members.back()};
    else range = std::pair{Int(0), Int(-1)};
  } else if (a.lower_bound) {
    range = std::pair{*a.lower_bound, hi - Int(h - 1) * *a.lower_bound};
  } else if (a.provenance) {
    const Int reach = abs_max(lo, hi) + hfold_margin(*a.provenance, h);
    range = std::pair{-reach, reach};
  }
  out.valid = a.valid && range && covers(a, range->first, range->second);

  std::vector<Int> elems = range ? members_in(a, range->first, range->second) : a.members;
  if (elems.empty()) return out;

  const Int emin = elems.front();
  const Int emax = elems.back();
  bool fast = fits(lo) && fits(hi) && fits(emin) && fits(emax) &&
              fits(Int(h) * emin) && fits(Int(h) * emax);
  if (fast) {
    const auto l = lo.convert_to<long long>();
    const auto top = hi.convert_to<long long>();
    const auto mn = emin.convert_to<long long>();
    const auto mx = emax.convert_to<long long>();
    Bits unit(mn, mx);
    for (const Int& e : elems) unit.set(e.convert_to<long long>());
    Bits reach = unit;
    for (std::uint64_t k = 2; k <= h; ++k) {
      const auto rest = static_cast<long long>(h - k);
      const long long from = std::max(reach.base() + mn, l - rest * mx);
      const long long to = std::min(reach.top() + mx, top - rest * mn);
      Bits next(from, to);
      if (!next.empty_range()) {
        for (const Int& e : elems) next.or_shifted(reach, e.convert_to<long long>());
      }
      reach = std::move(next);
    }
    for (Int v : reach.values()) {
      if (v >= lo && v <= hi) out.members.push_back(std::move(v));
    }
  } else {
    std::set<Int> reach(elems.begin(), elems.end());
    for (std::uint64_t k = 2; k <= h; ++k) {
      const Int rest(h - k);
      std::set<Int> next;
      for (const Int& s : reach) {
        for (const Int& e : elems) {
          const Int v = s + e;
          if (v + rest * emin <= hi && v + rest * emax >= lo) next.insert(v);
        }
      }
      reach = std::move(next);
    }
    for (const Int& v : reach) {
      if (v >= lo && v <= hi) out.members.push_back(v);
    }
  }
  return out;
}

Int rep_count(const WindowSample& a, std::uint64_t h, const Int& x) {
  if (h < 1) throw InvalidParameters("rep_count requires h >= 1");
  std::vector<Int> elems;
  if (a.complete) {
    elems = a.members;
  } else if (a.lower_bound) {
    const Int& m0 = *a.lower_bound;
    const Int top = x - Int(h - 1) * m0;
    if (top < m0) return 0;
    if (!covers(a, m0, top)) {
      throw InsufficientMargin("sample " + to_string(a) + " does not cover [" + m0.str() + ", " +
                               top.str() + "]");
    }
    elems = members_in(a, m0, top);
  } else {
    throw InsufficientMargin("representation counts need a complete or bounded-below sample");
  }
  if (elems.empty()) return 0;

  const Int emin = elems.front();
  const Int emax = elems.back();
  std::map<Int, Int> counts{{Int(0), Int(1)}};
  for (std::uint64_t k = 1; k <= h; ++k) {
    const Int rest(h - k);
    std::map<Int, Int> next;
    for (const auto& [s, c] : counts) {
      for (const Int& e : elems) {
        const Int v = s + e;
        if (v + rest * emin <= x && v + rest * emax >= x) next[v] += c;
      }
    }
    counts = std::move(next);
  }
  const auto it = counts.find(x);
  return it == counts.end() ? Int(0) : it->second;
}

CrossCheck cross_validate(const LinearSet& symbolic, const WindowSample& sample) {
  const std::vector<Int> lhs = symbolic.window(sample.lo, sample.hi);
  const std::vector<Int> rhs = sample.core();
  CrossCheck out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (i < lhs.size() && j < rhs.size() && lhs[i] == rhs[j]) {
      ++i;
      ++j;
      continue;
    }
    out.pass = false;
    if (j == rhs.size() || (i < lhs.size() && lhs[i] < rhs[j])) out.first_discrepancy = lhs[i];
    else out.first_discrepancy = rhs[j];
    break;
  }
  return out;
}

std::string to_string(const WindowSample& s) {
  std::ostringstream os;
  os << s.lo << ".." << s.hi << " margin=" << s.margin << ":";
  for (std::size_t i = 0; i < s.members.size(); ++i) os << (i == 0 ? " " : ",") << s.members[i];
  return os.str();
}

LinearSet random_set(std::mt19937_64& rng, const RandomSetOptions& options) {
  std::uniform_int_distribution<std::size_t> mod_dist(1, options.max_modulus);
  std::uniform_int_distribution<long long> cut_dist(options.cut_min, options.cut_max);
  std::uniform_int_distribution<int> kind_dist(0, 9);
  std::bernoulli_distribution coin(0.4);

  const std::size_t m = mod_dist(rng);
  Int lo = cut_dist(rng);
  Int hi = cut_dist(rng);
  if (lo > hi) std::swap(lo, hi);

  std::vector<std::size_t> down;
  std::vector<std::size_t> up;
  for (std::size_t r = 0; r < m; ++r) {
    if (coin(rng)) down.push_back(r);
    if (coin(rng)) up.push_back(r);
  }
  std::vector<Int> mid;
  if (lo < hi) {
    std::uniform_int_distribution<std::size_t> count_dist(0, options.max_middle);
    const std::size_t count = count_dist(rng);
    std::uniform_int_distribution<long long> mid_dist(lo.convert_to<long long>(),
                                                      hi.convert_to<long long>() - 1);
    for (std::size_t i = 0; i < count; ++i) mid.emplace_back(mid_dist(rng));
    std::sort(mid.begin(), mid.end());
    mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
  }

  switch (kind_dist(rng)) {
    case 0:  // finite
      down.clear();
      up.clear();
      break;
    case 1:  // bounded below
    case 2:
      down.clear();
      break;
    case 3:  // bounded above
      up.clear();
      break;
    case 4:  // purely periodic
      up = down;
      mid.clear();
      hi = lo;
      break;
    default:
      break;
  }
  return LinearSet::from_parts(m, lo, hi, down, up, mid);
}

}  // namespace sumset::oracle
