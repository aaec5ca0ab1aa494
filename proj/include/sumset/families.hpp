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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sumset/linset.hpp"
#include "sumset/oracle.hpp"

namespace sumset {

/// Strictly increasing generator sequence g_1 < g_2 < ... with g_1 >= 2, and
/// its running products G_q = g_1 * ... * g_q.
class GeneratorSpec {
 public:
  /// g_j = j + 1, so G_q = (q + 1)!.
  static GeneratorSpec successor();

  /// Explicit prefix; beyond it the sequence continues arithmetically with
  /// the last step (step 1 for a one-element prefix).
  static GeneratorSpec explicit_list(std::vector<Int> prefix);

  Int g(std::size_t j) const;
  Int G(std::size_t q) const;

  bool is_successor() const { return prefix_.empty(); }
  const std::vector<Int>& prefix() const { return prefix_; }

  /// `j+1` or `[2,3,5,...]`.
  std::string describe() const;
  static GeneratorSpec parse(std::string_view text);

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;

 private:
  std::vector<Int> prefix_;  // empty means the successor rule
};

/// A_q = ([0, s] + mZ) ∪ {m - 1 + m r : r >= q} with m = (h0 - 1) s + 2.
struct ClassTailFamily {
  Int s = 1;
  std::uint64_t h0 = 3;

  Int modulus() const { return Int(h0 - 1) * s + 2; }
  friend bool operator==(const ClassTailFamily&, const ClassTailFamily&) = default;
};

/// A_q = {G_r, -(d - 1) G_r : r >= q}.
struct ProductFamily {
  std::uint64_t d = 2;
  GeneratorSpec generators = GeneratorSpec::successor();
  friend bool operator==(const ProductFamily&, const ProductFamily&) = default;
};

/// T_q = {residue + modulus * t : t >= q}; a tail that moves off to infinity.
struct DriftTail {
  Int residue;
  Int modulus = 1;

  LinearSet at(const Int& q) const { return LinearSet::up_tail(residue, modulus, q); }
  friend bool operator==(const DriftTail&, const DriftTail&) = default;
};

/// A_q = prefix[q - 1] for q <= n, then core ∪ T_q (or just core without a
/// drift). Every set is bounded below by m0.
struct BoundedBelowFamily {
  std::vector<LinearSet> prefix;
  LinearSet core;
  std::optional<DriftTail> drift;
  Int m0 = 0;
  friend bool operator==(const BoundedBelowFamily&, const BoundedBelowFamily&) = default;
};

/// A_q = prefix[q - 1] for q <= n, then `limit` forever.
struct ConstantTailFamily {
  std::vector<LinearSet> prefix;
  LinearSet limit;
  friend bool operator==(const ConstantTailFamily&, const ConstantTailFamily&) = default;
};

using FamilySchema =
    std::variant<ClassTailFamily, ProductFamily, BoundedBelowFamily, ConstantTailFamily>;

/// Throws InvalidParameters when the schema breaks its invariants (including
/// decreasing-ness of the prefix and its junction with the tail).
void validate(const FamilySchema& schema);

std::string schema_name(const FamilySchema& schema);

/// Finite truncation of a product-family member: {G_r, -(d-1) G_r : q <= r <= last}.
/// Exact on [-(d-1) G_last, G_last].
oracle::WindowSample product_member_sample(const ProductFamily& family, std::size_t q,
                                            std::size_t last);

/// Exact membership in a product-family member A_q.
bool product_contains(const ProductFamily& family, std::size_t q, const Int& x);

using Member = std::variant<LinearSet, oracle::WindowSample>;

/// A_q. Product-family members come back as a truncation up to index `last`
/// (default q + 2).
Member member_at(const FamilySchema& schema, std::size_t q,
                 std::optional<std::size_t> last = std::nullopt);

/// A = ⋂_q A_q.
LinearSet limit_set(const FamilySchema& schema);

enum class Method { kClosedForm, kAlgebraicLimit, kOracleWindow };

std::string to_string(Method method);

struct AnalysisOptions {
  /// Members A_1..A_qmax are recomputed exactly to check the drift
  /// decomposition, and used for windowed intersections.
  std::size_t qmax = 12;
  /// Window for oracle-window answers.
  Int window_lo = -200;
  Int window_hi = 200;
  /// Permit non-certified windowed answers.
  bool allow_window = false;
  /// Skip symbolic routes and answer from the window (requires allow_window).
  bool force_window = false;
};

struct LimitResult {
  LinearSet set;
  Method method = Method::kAlgebraicLimit;
  bool certified = true;
  /// Free-form provenance, e.g. that a value rests on a derived formula.
  std::string note;
};

/// ⋂_q hA_q.
LimitResult sumset_intersection_limit(const FamilySchema& schema, std::uint64_t h,
                                      const AnalysisOptions& options = {});

struct Verdict {
  bool in_h = true;
  Method method = Method::kClosedForm;
  bool certified = true;
};

/// Whether hA = ⋂_q hA_q.
Verdict is_in_H(const FamilySchema& schema, std::uint64_t h, const AnalysisOptions& options = {});

/// ⋃_{0 <= j < h} ([0, (h - j) s] + j (m - 1) + mZ), the derived closed form
/// of the class-tail limit intersection.
LinearSet class_tail_closed_form(const ClassTailFamily& family, std::uint64_t h);

/// The drift decomposition behind the algebraic limit: hA_q is `stable` plus
/// parts whose minimum is at least `drift_floor(q)`, which grows without bound.
struct DriftDecomposition {
  LinearSet stable;
  /// Drifting parts evaluated at one q, with their lower bounds.
  std::vector<LinearSet> drifting;
  std::vector<Int> floors;
};

struct DriftView {
  std::vector<LinearSet> prefix;
  LinearSet core;
  std::optional<DriftTail> drift;
};

/// Prefix/core/drift form of every schema except the product family.
DriftView drift_view(const FamilySchema& schema);

DriftDecomposition decompose(const DriftView& view, std::uint64_t h, const Int& q);

/// ⋂_{q <= qmax} hA_q on [lo, hi] by brute force on certified samples.
oracle::WindowSample windowed_intersection(const FamilySchema& schema, std::uint64_t h,
                                           std::size_t qmax, const Int& lo, const Int& hi);

struct ZeroDecision {
  bool zero_in_limit = false;
  /// h elements of A_q summing to 0 when zero_in_limit.
  std::vector<Int> witness;
  /// max{r : g_r <= (d - 1) h} + 1: past this index no block of the
  /// representation can have a nonzero net coefficient.
  std::size_t index_bound = 0;
};

/// 0 ∈ ⋂_q hA_q for the product family; the witness is built in A_q.
ZeroDecision theorem2_zero_decision(std::uint64_t d, std::uint64_t h,
                                        const GeneratorSpec& gen, std::size_t q = 1);

/// Least q with G_q > |n|: n != 0 is then outside every hA_q from there on.
std::size_t product_refutation_index(const Int& n, const GeneratorSpec& gen);

struct ZeroSearchResult {
  bool found = false;
  std::vector<Int> representation;
};

/// Exhaustive search for h elements of {G_r, -(d-1) G_r : q <= r <= R* + h}
/// summing to zero.
ZeroSearchResult theorem2_window_search(std::uint64_t d, std::uint64_t h, const GeneratorSpec& gen,
                                      std::size_t q);

struct WitnessTuple {
  Int target;
  std::uint64_t h = 1;
  std::vector<Int> elements;  // ascending
};

/// Lexicographically least ascending h-tuple of elements of the limit set in
/// the box [m0, x - (h - 1) m0] summing to x.
std::optional<WitnessTuple> reconstruct_witness(const BoundedBelowFamily& family, const Int& x,
                                                std::uint64_t h);

enum class SequenceShape { kNotDecreasing, kStrictlyDecreasing, kConstant, kDecreasing };

std::string to_string(SequenceShape shape);

SequenceShape classify_sequence(std::span<const LinearSet> prefix);

struct HSetRecord {
  std::uint64_t h = 1;
  bool in_h = true;
  Method method = Method::kClosedForm;
  bool certified = true;
  LinearSet limit_intersection;
  LinearSet h_fold;
  std::optional<Int> witness;
  std::string note;
};

struct HSetReport {
  FamilySchema schema;
  std::vector<HSetRecord> records;
};

HSetRecord analyze_h(const FamilySchema& schema, std::uint64_t h,
                     const AnalysisOptions& options = {});

HSetReport analyze(const FamilySchema& schema, std::uint64_t hmin, std::uint64_t hmax,
                   const AnalysisOptions& options = {});

/// max(h0 + 3, 2d, 12) over whichever parameters the schema has.
std::uint64_t default_hmax(const FamilySchema& schema);

/// Random bounded-below family with a drifting tail or a constant tail.
BoundedBelowFamily random_bounded_below(std::mt19937_64& rng);

}  // namespace sumset
