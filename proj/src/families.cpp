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

#include "sumset/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace sumset {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Number of tail members A_{n+1}, A_{n+2}, ... rebuilt exactly to check the
// drift decomposition against a direct h-fold sum.
constexpr std::size_t kDecompositionChecks = 3;

void require_h(std::uint64_t h) {
  if (h < 1) throw InvalidParameters("h must be at least 1");
}

}  // namespace

// -- GeneratorSpec ----------------------------------------------------------

GeneratorSpec GeneratorSpec::successor() { return GeneratorSpec(); }

GeneratorSpec GeneratorSpec::explicit_list(std::vector<Int> prefix) {
  if (prefix.empty()) throw InvalidParameters("generator list must not be empty");
  if (prefix.front() < 2) throw InvalidParameters("generators must start at g_1 >= 2");
  for (std::size_t i = 1; i < prefix.size(); ++i) {
    if (prefix[i] <= prefix[i - 1]) {
      throw InvalidParameters("generators must be strictly increasing");
    }
  }
  GeneratorSpec spec;
  spec.prefix_ = std::move(prefix);
  return spec;
}

Int GeneratorSpec::g(std::size_t j) const {
  if (j < 1) throw InvalidParameters("generator index starts at 1");
  if (prefix_.empty()) return Int(j) + 1;
  const std::size_t n = prefix_.size();
  if (j <= n) return prefix_[j - 1];
  const Int step = n >= 2 ? prefix_[n - 1] - prefix_[n - 2] : Int(1);
  return prefix_[n - 1] + Int(j - n) * step;
}

Int GeneratorSpec::G(std::size_t q) const {
  Int product = 1;
  for (std::size_t j = 1; j <= q; ++j) product *= g(j);
  return product;
}

std::string GeneratorSpec::describe() const {
  if (prefix_.empty()) return "j+1";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < prefix_.size(); ++i) os << (i ? "," : "") << prefix_[i];
  os << ']';
  return os.str();
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '"') compact.push_back(c);
  }
  if (compact == "j+1") return successor();
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    throw InvalidParameters("generators must be \"j+1\" or a list like [2,3,5]");
  }
  std::vector<Int> values;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    values.push_back(parse_int(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return explicit_list(std::move(values));
}

// -- schema basics ----------------------------------------------------------

std::string schema_name(const FamilySchema& schema) {
  return std::visit(overloaded{
                        [](const ClassTailFamily&) { return std::string("theorem1"); },
                        [](const ProductFamily&) { return std::string("theorem2"); },
                        [](const BoundedBelowFamily&) { return std::string("bounded-below"); },
                        [](const ConstantTailFamily&) { return std::string("constant-tail"); },
                    },
                    schema);
}

std::string to_string(Method method) {
  switch (method) {
    case Method::kClosedForm:
      return "closed-form";
    case Method::kAlgebraicLimit:
      return "algebraic-limit";
    case Method::kOracleWindow:
      return "oracle-window";
  }
  return "unknown";
}

std::string to_string(SequenceShape shape) {
  switch (shape) {
    case SequenceShape::kNotDecreasing:
      return "not-decreasing";
    case SequenceShape::kStrictlyDecreasing:
      return "strictly-decreasing-so-far";
    case SequenceShape::kConstant:
      return "constant-so-far";
    case SequenceShape::kDecreasing:
      return "decreasing-so-far";
  }
  return "unknown";
}

SequenceShape classify_sequence(std::span<const LinearSet> prefix) {
  if (prefix.empty()) throw InvalidParameters("classify_sequence needs a nonempty prefix");
  bool any_equal = false;
  bool any_proper = false;
  for (std::size_t i = 0; i + 1 < prefix.size(); ++i) {
    if (!is_subset(prefix[i + 1], prefix[i])) return SequenceShape::kNotDecreasing;
    if (prefix[i + 1] == prefix[i]) any_equal = true;
    else any_proper = true;
  }
  if (!any_proper) return SequenceShape::kConstant;
  return any_equal ? SequenceShape::kDecreasing : SequenceShape::kStrictlyDecreasing;
}

DriftView drift_view(const FamilySchema& schema) {
  return std::visit(
      overloaded{
          [](const ClassTailFamily& f) {
            const Int m = f.modulus();
            return DriftView{{}, LinearSet::interval_mod(0, f.s, m), DriftTail{m - 1, m}};
          },
          [](const ProductFamily&) -> DriftView {
            throw UnsupportedSchema("the theorem2 family has no periodic drift form");
          },
          [](const BoundedBelowFamily& f) { return DriftView{f.prefix, f.core, f.drift}; },
          [](const ConstantTailFamily& f) { return DriftView{f.prefix, f.limit, std::nullopt}; },
      },
      schema);
}

namespace {

LinearSet view_member(const DriftView& view, std::size_t q) {
  if (q >= 1 && q <= view.prefix.size()) return view.prefix[q - 1];
  if (!view.drift) return view.core;
  return unite(view.core, view.drift->at(Int(q)));
}

void require_bounded_by(const LinearSet& s, const Int& m0, const std::string& what) {
  if (s.is_empty()) return;
  if (!s.is_bounded_below() || *s.min() < m0) {
    throw InvalidParameters(what + " is not bounded below by m0 = " + m0.str());
  }
}

}  // namespace

void validate(const FamilySchema& schema) {
  std::visit(overloaded{
                 [](const ClassTailFamily& f) {
                   if (f.s < 1) throw InvalidParameters("theorem1 requires s >= 1");
                   if (f.h0 < 3) throw InvalidParameters("theorem1 requires h0 >= 3");
                 },
                 [](const ProductFamily& f) {
                   if (f.d < 2) throw InvalidParameters("theorem2 requires d >= 2");
                   if (f.generators.g(1) < 2) {
                     throw InvalidParameters("theorem2 requires g_1 >= 2");
                   }
                 },
                 [](const BoundedBelowFamily& f) {
                   if (f.drift && f.drift->modulus < 1) {
                     throw InvalidParameters("drift modulus must be positive");
                   }
                   for (std::size_t i = 0; i < f.prefix.size(); ++i) {
                     require_bounded_by(f.prefix[i], f.m0, "A_" + std::to_string(i + 1));
                   }
                   require_bounded_by(f.core, f.m0, "core");
                   if (f.drift && f.drift->residue + f.drift->modulus *
                                                         Int(f.prefix.size() + 1) < f.m0) {
                     throw InvalidParameters("drifting tail starts below m0");
                   }
                 },
                 [](const ConstantTailFamily&) {},
             },
             schema);
  if (std::holds_alternative<ProductFamily>(schema)) return;
  const DriftView view = drift_view(schema);
  std::vector<LinearSet> run = view.prefix;
  run.push_back(view_member(view, view.prefix.size() + 1));
  run.push_back(view_member(view, view.prefix.size() + 2));
  if (classify_sequence(run) == SequenceShape::kNotDecreasing) {
    throw InvalidParameters("family is not decreasing");
  }
}

// -- product family members--------------------------------------------------

oracle::WindowSample product_member_sample(const ProductFamily& family, std::size_t q,
                                            std::size_t last) {
  if (q < 1 || last < q) throw InvalidParameters("theorem2 sample needs 1 <= q <= last");
  const Int scale(family.d - 1);
  std::vector<Int> members;
  for (std::size_t r = q; r <= last; ++r) {
    const Int big = family.generators.G(r);
    members.push_back(big);
    members.push_back(-scale * big);
  }
  std::sort(members.begin(), members.end());
  oracle::WindowSample out;
  const Int top = family.generators.G(last);
  out.lo = -scale * top;
  out.hi = top;
  out.members = std::move(members);
  std::ostringstream os;
  os << "A_" << q << " of theorem2(d=" << family.d << ", g=" << family.generators.describe()
     << ") up to index " << last;
  out.source = os.str();
  return out;
}

bool product_contains(const ProductFamily& family, std::size_t q, const Int& x) {
  if (x == 0) return false;
  Int target = x;
  if (x < 0) {
    const Int scale(family.d - 1);
    if ((-x) % scale != 0) return false;
    target = -x / scale;
  }
  Int big = family.generators.G(q);
  for (std::size_t r = q; big <= target; ++r) {
    if (big == target) return true;
    big *= family.generators.g(r + 1);
  }
  return false;
}

Member member_at(const FamilySchema& schema, std::size_t q, std::optional<std::size_t> last) {
  if (q < 1) throw InvalidParameters("member index q starts at 1");
  if (const auto* t2 = std::get_if<ProductFamily>(&schema)) {
    return product_member_sample(*t2, q, last.value_or(q + 2));
  }
  return view_member(drift_view(schema), q);
}

LinearSet limit_set(const FamilySchema& schema) {
  if (std::holds_alternative<ProductFamily>(schema)) return LinearSet();
  const DriftView view = drift_view(schema);
  LinearSet out = view.core;
  for (const LinearSet& s : view.prefix) out = intersect(out, s);
  return out;
}

// -- product family decision and search---------------------------------------

namespace {

std::size_t index_bound(std::uint64_t d, std::uint64_t h, const GeneratorSpec& gen) {
  const Int cap = Int(d - 1) * h;
  std::size_t last = 0;
  for (std::size_t r = 1; gen.g(r) <= cap; ++r) last = r;
  return last + 1;
}

void require_theorem2_args(std::uint64_t d, std::uint64_t h, std::size_t q) {
  if (d < 2) throw InvalidParameters("d must be at least 2");
  require_h(h);
  if (q < 1) throw InvalidParameters("q must be at least 1");
}

}  // namespace

ZeroDecision theorem2_zero_decision(std::uint64_t d, std::uint64_t h,
                                        const GeneratorSpec& gen, std::size_t q) {
  require_theorem2_args(d, h, q);
  ZeroDecision out;
  out.index_bound = index_bound(d, h, gen);
  out.zero_in_limit = h % d == 0;
  if (!out.zero_in_limit) return out;

  // h = d' d = d'(d - 1) + d': d'(d - 1) copies of G_q cancel d' copies of
  // -(d - 1) G_q.
  const std::uint64_t blocks = h / d;
  const Int big = gen.G(q);
  out.witness.assign(blocks * (d - 1), big);
  out.witness.insert(out.witness.end(), blocks, -Int(d - 1) * big);

  Int total = 0;
  const ProductFamily family{d, gen};
  for (const Int& x : out.witness) {
    if (!product_contains(family, q, x)) throw std::logic_error("witness element not in A_q");
    total += x;
  }
  if (total != 0 || out.witness.size() != h) throw std::logic_error("witness does not sum to 0");
  return out;
}

std::size_t product_refutation_index(const Int& n, const GeneratorSpec& gen) {
  if (n == 0) throw InvalidParameters("zero cannot be refuted by size");
  const Int size = abs(n);
  std::size_t q = 1;
  Int big = gen.G(1);
  while (big <= size) {
    ++q;
    big *= gen.g(q);
  }
  return q;
}

namespace {

// Depth-first search over multiplicities (x_r, y_r) from the smallest index
// up. Everything placed at indices > k is a multiple of G_{k+1}, so the
// running total after index k must be divisible by G_{k+1}; the carry is that
// quotient. Branches failing the test cannot reach zero and are cut.
class ZeroSearch {
 public:
  ZeroSearch(std::uint64_t d, std::size_t first, std::size_t last, const GeneratorSpec& gen)
      : d_(d), first_(first), last_(last) {
    for (std::size_t r = first; r <= last + 1; ++r) big_.push_back(gen.G(r));
  }

  bool run(std::uint64_t h) { return step(first_, h, 0); }
  const std::vector<Int>& representation() const { return picked_; }

 private:
  const Int& G(std::size_t r) const { return big_[r - first_]; }

  bool step(std::size_t k, std::uint64_t remaining, const Int& carry) {
    if (remaining == 0) return carry == 0;
    if (k > last_) return false;
    const auto key = std::make_tuple(k, remaining, carry);
    if (dead_.count(key)) return false;
    // Placing nothing at index k is tried last, so lower indices win.
    for (std::uint64_t used = remaining; used >= 1; --used) {
      for (std::uint64_t y = 0; y <= used; ++y) {
        if (place(k, remaining, carry, used - y, y)) return true;
      }
    }
    if (place(k, remaining, carry, 0, 0)) return true;
    dead_.insert(key);
    return false;
  }

  bool place(std::size_t k, std::uint64_t remaining, const Int& carry, std::uint64_t x,
             std::uint64_t y) {
    const Int total = (carry + Int(x) - Int(d_ - 1) * y) * G(k);
    const std::uint64_t left = remaining - x - y;
    if (left == 0) {
      if (total != 0) return false;
      push(k, x, y);
      return true;
    }
    if (k == last_ || total % G(k + 1) != 0) return false;
    push(k, x, y);
    if (step(k + 1, left, total / G(k + 1))) return true;
    pop(x + y);
    return false;
  }

  void push(std::size_t k, std::uint64_t x, std::uint64_t y) {
    for (std::uint64_t i = 0; i < x; ++i) picked_.push_back(G(k));
    for (std::uint64_t i = 0; i < y; ++i) picked_.push_back(-Int(d_ - 1) * G(k));
  }
  void pop(std::uint64_t n) { picked_.resize(picked_.size() - n); }

  std::uint64_t d_;
  std::size_t first_;
  std::size_t last_;
  std::vector<Int> big_;
  std::vector<Int> picked_;
  std::set<std::tuple<std::size_t, std::uint64_t, Int>> dead_;
};

}  // namespace

ZeroSearchResult theorem2_window_search(std::uint64_t d, std::uint64_t h, const GeneratorSpec& gen,
                                      std::size_t q) {
  require_theorem2_args(d, h, q);
  const std::size_t last = std::max(index_bound(d, h, gen), q) + h;
  ZeroSearch search(d, q, last, gen);
  ZeroSearchResult out;
  out.found = search.run(h);
  if (out.found) out.representation = search.representation();
  return out;
}

// -- limits -----------------------------------------------------------------

LinearSet class_tail_closed_form(const ClassTailFamily& family, std::uint64_t h) {
  require_h(h);
  const Int m = family.modulus();
  LinearSet out;
  for (std::uint64_t j = 0; j < h; ++j) {
    const Int shift = Int(j) * (m - 1);
    out = unite(out, LinearSet::interval_mod(shift, shift + Int(h - j) * family.s, m));
  }
  return out;
}

DriftDecomposition decompose(const DriftView& view, std::uint64_t h, const Int& q) {
  require_h(h);
  DriftDecomposition out;
  out.stable = h_fold_sum(view.core, h);
  if (!view.drift) return out;
  const DriftTail& tail = *view.drift;
  for (std::uint64_t j = 1; j <= h; ++j) {
    // (h - j) copies from the core, j from the tail: jT_q = up_tail(j a, m, j q).
    const LinearSet rest =
        j == h ? LinearSet::finite({0}) : h_fold_sum(view.core, h - j);
    if (rest.is_empty()) continue;
    const LinearSet moving = LinearSet::up_tail(Int(j) * tail.residue, tail.modulus, Int(j) * q);

    // A down tail plus an up tail is a union of whole classes, whatever q is.
    const LinearSet down = rest.down_part();
    if (!down.is_empty()) out.stable = unite(out.stable, minkowski_sum(down, moving));

    const LinearSet upper = difference(rest, down);
    if (upper.is_empty()) continue;
    out.drifting.push_back(minkowski_sum(upper, moving));
    out.floors.push_back(*upper.min() + Int(j) * (tail.residue + tail.modulus * q));
  }
  return out;
}

namespace {

// A sample of s whose margin lets brute_hfold certify hs on [lo, hi].
oracle::WindowSample hfold_ready_sample(const LinearSet& s, std::uint64_t h, const Int& lo,
                                        const Int& hi) {
  const Int radius = std::max(abs(s.lo_cut()), abs(s.hi_cut()));
  const Int reach = std::max(abs(lo), abs(hi)) +
                    oracle::hfold_margin(oracle::Provenance{radius, Int(s.modulus())}, h);
  const Int margin = std::max<Int>({Int(0), Int(reach + lo), Int(reach - hi)});
  return oracle::sample(s, lo, hi, margin);
}

// Checks hA_q == stable ∪ drifting(q) exactly, and that every drifting part
// sits above its floor, for a few q past the prefix.
bool certify_decomposition(const DriftView& view, std::uint64_t h, const LinearSet& stable,
                           std::string& why) {
  const std::size_t first = view.prefix.size() + 1;
  for (std::size_t q = first; q < first + kDecompositionChecks; ++q) {
    const DriftDecomposition dec = decompose(view, h, Int(q));
    if (dec.stable != stable) {
      why = "stable part changed with q";
      return false;
    }
    LinearSet rebuilt = dec.stable;
    for (std::size_t i = 0; i < dec.drifting.size(); ++i) {
      const auto lowest = dec.drifting[i].min();
      if (!dec.drifting[i].is_empty() && (!lowest || *lowest < dec.floors[i])) {
        why = "drifting part below its floor";
        return false;
      }
      rebuilt = unite(rebuilt, dec.drifting[i]);
    }
    if (rebuilt != h_fold_sum(view_member(view, q), h)) {
      why = "decomposition disagrees with hA_" + std::to_string(q);
      return false;
    }
  }
  return true;
}

LimitResult windowed_limit(const FamilySchema& schema, std::uint64_t h,
                           const AnalysisOptions& options) {
  const oracle::WindowSample w =
      windowed_intersection(schema, h, options.qmax, options.window_lo, options.window_hi);
  LimitResult out;
  out.set = LinearSet::finite(w.core());
  out.method = Method::kOracleWindow;
  out.certified = false;
  out.note = "window " + options.window_lo.str() + ".." + options.window_hi.str() + ", q <= " +
             std::to_string(options.qmax) + (w.valid ? "" : ", margin insufficient");
  return out;
}

LimitResult product_limit(const ProductFamily& family, std::uint64_t h) {
  const ZeroDecision decision = theorem2_zero_decision(family.d, h, family.generators);
  LimitResult out;
  out.method = Method::kClosedForm;
  out.set = decision.zero_in_limit ? LinearSet::finite({0}) : LinearSet();
  out.note = decision.zero_in_limit ? "0 = sum of witness in every A_q"
                                    : "no zero sum; index bound " +
                                          std::to_string(decision.index_bound);
  return out;
}

}  // namespace

oracle::WindowSample windowed_intersection(const FamilySchema& schema, std::uint64_t h,
                                           std::size_t qmax, const Int& lo, const Int& hi) {
  require_h(h);
  if (qmax < 1) throw InvalidParameters("qmax must be at least 1");
  if (std::holds_alternative<ProductFamily>(schema)) {
    throw UnsupportedSchema("windowed intersections need eventually periodic members");
  }
  const DriftView view = drift_view(schema);
  oracle::WindowSample out;
  out.lo = lo;
  out.hi = hi;
  out.source = "intersection of " + std::to_string(h) + "A_q for q <= " + std::to_string(qmax);
  for (std::size_t q = 1; q <= qmax; ++q) {
    const oracle::WindowSample s = hfold_ready_sample(view_member(view, q), h, lo, hi);
    const oracle::WindowSample sum = oracle::brute_hfold(s, h, lo, hi);
    out.valid = out.valid && sum.valid;
    if (q == 1) {
      out.members = sum.members;
      continue;
    }
    std::vector<Int> kept;
    std::set_intersection(out.members.begin(), out.members.end(), sum.members.begin(),
                          sum.members.end(), std::back_inserter(kept));
    out.members = std::move(kept);
  }
  return out;
}

LimitResult sumset_intersection_limit(const FamilySchema& schema, std::uint64_t h,
                                      const AnalysisOptions& options) {
  require_h(h);
  if (options.force_window) {
    if (!options.allow_window) {
      throw UnsupportedSchema("window-only analysis requires allow_window");
    }
    return windowed_limit(schema, h, options);
  }
  if (const auto* t2 = std::get_if<ProductFamily>(&schema)) return product_limit(*t2, h);

  const DriftView view = drift_view(schema);
  LimitResult out;
  out.method = Method::kAlgebraicLimit;
  if (!view.drift) {
    // Constant from A_{n+1} on: the intersection is finite.
    out.set = h_fold_sum(view_member(view, view.prefix.size() + 1), h);
    for (std::size_t q = view.prefix.size(); q >= 1; --q) {
      out.set = intersect(out.set, h_fold_sum(view.prefix[q - 1], h));
    }
    out.note = "constant after A_" + std::to_string(view.prefix.size() + 1);
    return out;
  }

  const DriftDecomposition dec = decompose(view, h, Int(view.prefix.size() + 1));
  std::string why;
  if (!certify_decomposition(view, h, dec.stable, why)) {
    if (options.allow_window) {
      LimitResult w = windowed_limit(schema, h, options);
      w.note += "; algebraic route rejected: " + why;
      return w;
    }
    throw UnsupportedSchema("no certified limit: " + why);
  }
  out.set = dec.stable;
  out.note = "drifting tails dropped";
  if (const auto* t1 = std::get_if<ClassTailFamily>(&schema)) {
    out.note += class_tail_closed_form(*t1, h) == out.set ? "; matches derived closed form"
                                                        : "; DIFFERS from derived closed form";
  }
  return out;
}

Verdict is_in_H(const FamilySchema& schema, std::uint64_t h, const AnalysisOptions& options) {
  require_h(h);
  if (h == 1) return {true, Method::kClosedForm, true};
  const LimitResult limit = sumset_intersection_limit(schema, h, options);
  const LinearSet hA = h_fold_sum(limit_set(schema), h);
  return {hA == limit.set, limit.method, limit.certified};
}

HSetRecord analyze_h(const FamilySchema& schema, std::uint64_t h,
                     const AnalysisOptions& options) {
  require_h(h);
  HSetRecord rec;
  rec.h = h;
  const LinearSet a = limit_set(schema);
  rec.h_fold = h_fold_sum(a, h);
  if (h == 1) {
    rec.limit_intersection = a;
    rec.method = Method::kClosedForm;
    rec.note = "the intersection of the A_q is A";
  } else {
    LimitResult limit = sumset_intersection_limit(schema, h, options);
    rec.limit_intersection = std::move(limit.set);
    rec.method = limit.method;
    rec.certified = limit.certified;
    rec.note = std::move(limit.note);
  }
  rec.in_h = rec.limit_intersection == rec.h_fold;
  if (!rec.in_h) {
    const auto x = difference(rec.limit_intersection, rec.h_fold).nearest_to_zero();
    if (!x || !rec.limit_intersection.contains(*x) || rec.h_fold.contains(*x)) {
      throw std::logic_error("hA is not contained in the limit intersection for h = " +
                             std::to_string(h));
    }
    rec.witness = *x;
  }
  return rec;
}

HSetReport analyze(const FamilySchema& schema, std::uint64_t hmin, std::uint64_t hmax,
                   const AnalysisOptions& options) {
  validate(schema);
  require_h(hmin);
  if (hmax < hmin) throw InvalidParameters("hmax must be at least hmin");
  HSetReport report{schema, {}};
  for (std::uint64_t h = hmin; h <= hmax; ++h) report.records.push_back(analyze_h(schema, h, options));
  return report;
}

std::uint64_t default_hmax(const FamilySchema& schema) {
  return std::visit(overloaded{
                        [](const ClassTailFamily& f) { return std::max<std::uint64_t>(f.h0 + 3, 12); },
                        [](const ProductFamily& f) { return std::max<std::uint64_t>(2 * f.d, 12); },
                        [](const auto&) { return std::uint64_t{12}; },
                    },
                    schema);
}

// -- bounded below ------------------------------------------------------------

std::optional<WitnessTuple> reconstruct_witness(const BoundedBelowFamily& family, const Int& x,
                                                std::uint64_t h) {
  require_h(h);
  const Int& m0 = family.m0;
  const Int span = x - Int(h) * m0;  // box [m0, x - (h-1) m0] shifted to [0, span]
  if (span < 0) return std::nullopt;
  if (span >= kMaxExplicit) throw CapacityExceeded("witness box too large");
  const auto width = span.convert_to<std::size_t>() + 1;

  const LinearSet a = limit_set(FamilySchema(family));
  std::vector<std::size_t> shifted;
  for (const Int& e : a.window(m0, m0 + span)) shifted.push_back((e - m0).convert_to<std::size_t>());

  // reach[k] = shifted sums of k box elements.
  std::vector<ResidueMask> reach(h + 1, ResidueMask(width));
  reach[0].set(0);
  for (std::uint64_t k = 1; k <= h; ++k) {
    for (std::size_t e : shifted) reach[k] |= reach[k - 1] << e;
  }
  const auto target = span.convert_to<std::size_t>();
  if (!reach[h][target]) return std::nullopt;

  // Greedy smallest first element; minimality makes the picks ascending.
  WitnessTuple out{x, h, {}};
  std::size_t left = target;
  for (std::uint64_t k = h; k >= 1; --k) {
    for (std::size_t e : shifted) {
      if (e <= left && reach[k - 1][left - e]) {
        out.elements.push_back(m0 + e);
        left -= e;
        break;
      }
    }
  }
  return out;
}

BoundedBelowFamily random_bounded_below(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> floor_dist(-20, 5);
  std::uniform_int_distribution<long long> offset(0, 30);
  std::uniform_int_distribution<int> small(1, 6);
  std::uniform_int_distribution<int> prefix_len(0, 2);
  std::bernoulli_distribution coin(0.5);

  BoundedBelowFamily f;
  f.m0 = floor_dist(rng);
  std::vector<Int> points;
  if (coin(rng)) points.push_back(f.m0);
  const int count = small(rng);
  for (int i = 0; i < count; ++i) points.emplace_back(f.m0 + offset(rng));
  f.core = LinearSet::finite(points);
  if (coin(rng)) {
    const Int m = small(rng);
    f.core = unite(f.core, LinearSet::up_tail(f.m0 + offset(rng), m, 0));
  }
  if (std::bernoulli_distribution(0.75)(rng)) {
    f.drift = DriftTail{f.m0 + std::uniform_int_distribution<long long>(0, 10)(rng), Int(small(rng))};
  }

  const int n = prefix_len(rng);
  std::vector<LinearSet> prefix(n);
  const DriftView tail_view{{}, f.core, f.drift};
  LinearSet above = view_member(tail_view, static_cast<std::size_t>(n) + 1);
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Int> extra;
    const int k = small(rng);
    for (int e = 0; e < k; ++e) extra.emplace_back(f.m0 + offset(rng));
    above = unite(above, LinearSet::finite(extra));
    prefix[i] = above;
  }
  f.prefix = std::move(prefix);
  return f;
}

}  // namespace sumset
