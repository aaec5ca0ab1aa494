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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sumset {

/// Arbitrary-precision signed integer used for every element, cut and bound.
using Int = boost::multiprecision::cpp_int;

/// Largest modulus a residue table may have. Moduli are products of small
/// periods in practice; anything beyond this is almost certainly a runaway lcm.
inline constexpr std::size_t kMaxModulus = std::size_t{1} << 22;

/// Largest explicit middle (or window listing) materialized in one go.
inline constexpr std::size_t kMaxExplicit = std::size_t{1} << 24;

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value is representable in principle but exceeds the table limits above.
class CapacityExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class UnsupportedSchema : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientMargin : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// x mod m reduced into [0, m), also for negative x.
inline std::size_t floor_mod(const Int& x, std::size_t m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::size_t>();
}

/// Floor division for a positive divisor.
inline Int floor_div(const Int& x, const Int& m) {
  Int q = x / m;
  if (x % m != 0 && x < 0) --q;
  return q;
}

std::size_t gcd_size(std::size_t a, std::size_t b);

/// lcm with a capacity check against kMaxModulus.
std::size_t lcm_size(std::size_t a, std::size_t b);

/// Converts a positive Int modulus into a table size, throwing when too large.
std::size_t to_modulus(const Int& m);

/// Parses a decimal integer with an optional leading sign.
Int parse_int(std::string_view text);

inline std::string to_string(const Int& x) { return x.str(); }

}  // namespace sumset
