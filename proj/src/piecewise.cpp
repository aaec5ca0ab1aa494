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

#include "piecewise.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace sumset::detail {

ResidueMask rotate(const ResidueMask& mask, std::size_t shift) {
  const std::size_t m = mask.size();
  shift %= m;
  if (shift == 0) return mask;
  return (mask << shift) | (mask >> (m - shift));
}

ResidueMask negate(const ResidueMask& mask) {
  const std::size_t m = mask.size();
  ResidueMask out(m);
  for (std::size_t r = mask.find_first(); r != ResidueMask::npos; r = mask.find_next(r)) {
    out.set((m - r) % m);
  }
  return out;
}

ResidueMask expand(const ResidueMask& mask, std::size_t big) {
  const std::size_t m = mask.size();
  if (m == big) return mask;
  assert(big % m == 0);
  ResidueMask out(big);
  for (std::size_t r = mask.find_first(); r != ResidueMask::npos; r = mask.find_next(r)) {
    for (std::size_t x = r; x < big; x += m) out.set(x);
  }
  return out;
}

std::size_t min_period(const ResidueMask& mask) {
  const std::size_t m = mask.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p == 0 && rotate(mask, p) == mask) return p;
  }
  return m;
}

ResidueMask reduce(const ResidueMask& mask, std::size_t p) {
  ResidueMask out(p);
  for (std::size_t r = 0; r < p; ++r) out[r] = mask[r];
  return out;
}

std::size_t Piecewise::segment_of(const Int& x) const {
  return static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin());
}

bool Piecewise::member(const Int& x) const {
  if (auto it = overrides.find(x); it != overrides.end()) return it->second;
  return patterns[segment_of(x)][floor_mod(x, modulus)];
}

Piecewise to_piecewise(const LinearSet& s, std::size_t modulus) {
  Piecewise p;
  p.modulus = modulus;
  ResidueMask down = expand(s.down_mask(), modulus);
  ResidueMask up = expand(s.up_mask(), modulus);
  if (s.lo_cut() == s.hi_cut()) {
    p.cuts = {s.lo_cut()};
    p.patterns = {std::move(down), std::move(up)};
  } else {
    p.cuts = {s.lo_cut(), s.hi_cut()};
    p.patterns = {std::move(down), ResidueMask(modulus), std::move(up)};
  }
  for (const Int& x : s.middle()) p.overrides.emplace(x, true);
  return p;
}

Piecewise combine(const Piecewise& a, const Piecewise& b,
                  const std::function<bool(bool, bool)>& op) {
  Piecewise out;
  out.modulus = lcm_size(a.modulus, b.modulus);
  std::merge(a.cuts.begin(), a.cuts.end(), b.cuts.begin(), b.cuts.end(),
             std::back_inserter(out.cuts));
  out.cuts.erase(std::unique(out.cuts.begin(), out.cuts.end()), out.cuts.end());

  const ResidueMask all = ~ResidueMask(out.modulus);
  const ResidueMask none(out.modulus);
  const ResidueMask& c00 = op(false, false) ? all : none;
  const ResidueMask& c01 = op(false, true) ? all : none;
  const ResidueMask& c10 = op(true, false) ? all : none;
  const ResidueMask& c11 = op(true, true) ? all : none;

  const std::size_t segments = out.cuts.size() + 1;
  out.patterns.reserve(segments);
  for (std::size_t j = 0; j < segments; ++j) {
    Int rep = 0;
    if (!out.cuts.empty()) rep = j == 0 ? out.cuts.front() - 1 : out.cuts[j - 1];
    const ResidueMask pa = expand(a.patterns[a.segment_of(rep)], out.modulus);
    const ResidueMask pb = expand(b.patterns[b.segment_of(rep)], out.modulus);
    out.patterns.push_back((~pa & ~pb & c00) | (~pa & pb & c01) | (pa & ~pb & c10) |
                           (pa & pb & c11));
  }
  for (const auto& [x, v] : a.overrides) out.overrides.emplace(x, op(v, b.member(x)));
  for (const auto& [x, v] : b.overrides) out.overrides.emplace(x, op(a.member(x), v));
  return out;
}

namespace {

// Largest x with p.member(x) != ref(x), or nullopt when none exists.
std::optional<Int> last_mismatch(const Piecewise& p, const ResidueMask& ref) {
  const std::size_t m = p.modulus;
  std::optional<Int> best;
  for (const auto& [x, v] : p.overrides) {
    if (v != ref[floor_mod(x, m)]) best = x;
  }
  const std::size_t limit = m * (p.overrides.size() + 1);
  for (std::size_t i = p.cuts.size(); i-- > 0;) {
    const Int top = p.cuts[i] - 1;
    if (best && top <= *best) break;
    const ResidueMask diff = p.patterns[i] ^ ref;
    if (diff.none()) continue;
    const std::size_t r0 = floor_mod(top, m);
    for (std::size_t off = 0; off < limit; ++off) {
      if (!diff[(r0 + m - off % m) % m]) continue;
      Int x = top - off;
      if (i > 0 && x < p.cuts[i - 1]) break;
      if (best && x <= *best) break;
      if (p.overrides.count(x)) continue;
      best = std::move(x);
      break;
    }
  }
  return best;
}

// Smallest x with p.member(x) != ref(x), or nullopt when none exists.
std::optional<Int> first_mismatch(const Piecewise& p, const ResidueMask& ref) {
  const std::size_t m = p.modulus;
  std::optional<Int> best;
  for (const auto& [x, v] : p.overrides) {
    if (v != ref[floor_mod(x, m)]) {
      best = x;
      break;
    }
  }
  const std::size_t limit = m * (p.overrides.size() + 1);
  for (std::size_t i = 1; i <= p.cuts.size(); ++i) {
    const Int& bottom = p.cuts[i - 1];
    if (best && bottom >= *best) break;
    const ResidueMask diff = p.patterns[i] ^ ref;
    if (diff.none()) continue;
    const std::size_t r0 = floor_mod(bottom, m);
    for (std::size_t off = 0; off < limit; ++off) {
      if (!diff[(r0 + off) % m]) continue;
      Int x = bottom + off;
      if (i < p.cuts.size() && x >= p.cuts[i]) break;
      if (best && x >= *best) break;
      if (p.overrides.count(x)) continue;
      best = std::move(x);
      break;
    }
  }
  return best;
}

void enumerate_members(const Piecewise& p, const Int& lo, const Int& hi, std::vector<Int>& out) {
  const std::size_t m = p.modulus;
  const std::size_t k = p.cuts.size();
  for (std::size_t i = 0; i <= k; ++i) {
    const ResidueMask& pattern = p.patterns[i];
    if (pattern.none()) continue;
    Int start = lo;
    Int end = hi;
    if (i > 0 && p.cuts[i - 1] > start) start = p.cuts[i - 1];
    if (i < k && p.cuts[i] < end) end = p.cuts[i];
    if (start >= end) continue;
    const Int estimate = ((end - start) / m + 1) * pattern.count();
    if (estimate + out.size() > kMaxExplicit) {
      throw CapacityExceeded("explicit middle would exceed " + std::to_string(kMaxExplicit) +
                             " points");
    }
    const std::size_t r0 = floor_mod(start, m);
    for (std::size_t r = pattern.find_first(); r != ResidueMask::npos; r = pattern.find_next(r)) {
      for (Int x = start + (r + m - r0) % m; x < end; x += m) {
        if (!p.overrides.count(x)) out.push_back(x);
      }
    }
  }
  for (auto it = p.overrides.lower_bound(lo); it != p.overrides.end() && it->first < hi; ++it) {
    if (it->second) out.push_back(it->first);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

LinearSet canonicalize(const Piecewise& p) {
  const ResidueMask& down = p.patterns.front();
  const ResidueMask& up = p.patterns.back();
  const std::optional<Int> top = last_mismatch(p, up);
  const std::optional<Int> bottom = first_mismatch(p, down);

  const std::size_t period = lcm_size(min_period(down), min_period(up));
  ResidueMask d = reduce(down, period);
  ResidueMask u = reduce(up, period);

  if (!top) {
    // The set follows the up pattern everywhere, hence down == up too.
    assert(!bottom);
    return Access::make(period, 0, 0, std::move(d), std::move(u), {});
  }
  Int hi = *top + 1;
  Int lo = bottom && *bottom < hi ? *bottom : hi;
  std::vector<Int> middle;
  if (lo < hi) enumerate_members(p, lo, hi, middle);
  return Access::make(period, std::move(lo), std::move(hi), std::move(d), std::move(u),
                      std::move(middle));
}

Piecewise PieceUnion::build() const {
  Piecewise p;
  std::size_t m = 1;
  for (const auto& t : ups) m = lcm_size(m, t.modulus);
  for (const auto& t : downs) m = lcm_size(m, t.modulus);
  for (const auto& t : periodic) m = lcm_size(m, t.modulus);
  p.modulus = m;

  for (const auto& t : ups) p.cuts.push_back(t.cut);
  for (const auto& t : downs) p.cuts.push_back(t.cut);
  std::sort(p.cuts.begin(), p.cuts.end());
  p.cuts.erase(std::unique(p.cuts.begin(), p.cuts.end()), p.cuts.end());

  const std::size_t k = p.cuts.size();
  ResidueMask base(m);
  for (const auto& t : periodic) base |= expand(t.mask, m);
  std::vector<ResidueMask> up_start(k + 1, ResidueMask(m));
  std::vector<ResidueMask> down_end(k + 1, ResidueMask(m));
  auto index_of = [&](const Int& c) {
    return static_cast<std::size_t>(std::lower_bound(p.cuts.begin(), p.cuts.end(), c) -
                                    p.cuts.begin());
  };
  for (const auto& t : ups) up_start[index_of(t.cut) + 1] |= expand(t.mask, m);
  for (const auto& t : downs) down_end[index_of(t.cut)] |= expand(t.mask, m);

  p.patterns.assign(k + 1, base);
  ResidueMask acc(m);
  for (std::size_t j = 0; j <= k; ++j) {
    acc |= up_start[j];
    p.patterns[j] |= acc;
  }
  acc.reset();
  for (std::size_t j = k + 1; j-- > 0;) {
    acc |= down_end[j];
    p.patterns[j] |= acc;
  }
  for (const Int& x : points) p.overrides.emplace(x, true);
  return p;
}

LinearSet Access::make(std::size_t modulus, Int lo, Int hi, ResidueMask down, ResidueMask up,
                       std::vector<Int> middle) {
  LinearSet s;
  s.modulus_ = modulus;
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  s.down_ = std::move(down);
  s.up_ = std::move(up);
  s.middle_ = std::move(middle);
  return s;
}

}  // namespace sumset::detail
