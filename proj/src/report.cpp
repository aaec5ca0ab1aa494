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


#include "sumset/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sumset/expr.hpp"

namespace sumset {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const std::set<std::string, std::less<>> kKnownKeys = {
    "schema", "s",          "h0",     "d",     "generators", "core",  "m0",
    "drift_residue",        "drift_modulus",   "prefix",     "limit", "hmin",
    "hmax",   "qmax",       "window", "format", "allow_window",
};

const std::string* find(const ConfigMap& config, std::string_view key) {
  const auto it = config.find(key);
  return it == config.end() ? nullptr : &it->second;
}

const std::string& require(const ConfigMap& config, std::string_view key, std::string_view schema) {
  if (const auto* v = find(config, key)) return *v;
  throw InvalidParameters(std::string(schema) + " needs `" + std::string(key) + "`");
}

Int int_value(const ConfigMap& config, std::string_view key, long long fallback) {
  const auto* v = find(config, key);
  return v ? parse_int(trim(*v)) : Int(fallback);
}

std::uint64_t count_value(const ConfigMap& config, std::string_view key, long long fallback) {
  const Int v = int_value(config, key, fallback);
  if (v < 0 || v > Int(std::numeric_limits<std::uint32_t>::max())) {
    throw InvalidParameters("`" + std::string(key) + "` is out of range");
  }
  return v.convert_to<std::uint64_t>();
}

LinearSet set_value(std::string_view text, std::string_view key) {
  try {
    return evaluate(trim(text));
  } catch (const ParseError& e) {
    throw InvalidParameters("`" + std::string(key) + "`: " + e.what());
  }
}

std::vector<LinearSet> prefix_value(const ConfigMap& config) {
  std::vector<LinearSet> out;
  const auto* v = find(config, "prefix");
  if (!v || trim(*v).empty()) return out;
  std::string_view rest = *v;
  while (true) {
    const auto bar = rest.find('|');
    out.push_back(set_value(rest.substr(0, bar), "prefix"));
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return out;
}

FamilySchema build(const ConfigMap& config) {
  const std::string name(trim(require(config, "schema", "config")));
  if (name == "theorem1") {
    return ClassTailFamily{int_value(config, "s", 1), count_value(config, "h0", 3)};
  }
  if (name == "theorem2") {
    ProductFamily f;
    f.d = count_value(config, "d", 2);
    if (const auto* g = find(config, "generators")) f.generators = GeneratorSpec::parse(*g);
    return f;
  }
  if (name == "bounded-below") {
    BoundedBelowFamily f;
    f.core = set_value(require(config, "core", name), "core");
    f.prefix = prefix_value(config);
    const auto* residue = find(config, "drift_residue");
    const auto* modulus = find(config, "drift_modulus");
    if ((residue == nullptr) != (modulus == nullptr)) {
      throw InvalidParameters("drift_residue and drift_modulus go together");
    }
    if (residue) f.drift = DriftTail{parse_int(trim(*residue)), parse_int(trim(*modulus))};
    if (find(config, "m0")) {
      f.m0 = int_value(config, "m0", 0);
    } else {
      // Default to the least element any member can have.
      std::optional<Int> low;
      auto see = [&](const LinearSet& s) {
        if (s.is_empty()) return;
        if (!s.is_bounded_below()) throw InvalidParameters("bounded-below family has a down tail");
        low = low ? std::min(*low, *s.min()) : *s.min();
      };
      for (const auto& s : f.prefix) see(s);
      see(f.core);
      if (f.drift) see(f.drift->at(Int(f.prefix.size() + 1)));
      f.m0 = low.value_or(0);
    }
    return f;
  }
  if (name == "constant-tail") {
    return ConstantTailFamily{prefix_value(config), set_value(require(config, "limit", name), "limit")};
  }
  throw InvalidParameters("unknown schema `" + name + "`");
}

nlohmann::json schema_json(const FamilySchema& schema) {
  nlohmann::json j;
  j["schema"] = schema_name(schema);
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ClassTailFamily>) {
          j["s"] = f.s.str();
          j["h0"] = f.h0;
          j["m"] = f.modulus().str();
        } else if constexpr (std::is_same_v<T, ProductFamily>) {
          j["d"] = f.d;
          j["generators"] = f.generators.describe();
        } else {
          nlohmann::json prefix = nlohmann::json::array();
          for (const auto& s : f.prefix) prefix.push_back(to_string(s));
          j["prefix"] = prefix;
          if constexpr (std::is_same_v<T, BoundedBelowFamily>) {
            j["core"] = to_string(f.core);
            j["m0"] = f.m0.str();
            if (f.drift) {
              j["drift_residue"] = f.drift->residue.str();
              j["drift_modulus"] = f.drift->modulus.str();
            }
          } else {
            j["limit"] = to_string(f.limit);
          }
        }
      },
      schema);
  return j;
}

}  // namespace

ConfigMap parse_config(std::string_view text) {
  ConfigMap out;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_start, "expected `key = value`");
    const std::string key(trim(line.substr(0, eq)));
    if (!kKnownKeys.count(key)) throw ParseError(line_start, "unknown key `" + key + "`");
    std::string value(trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    out[key] = std::move(value);
  }
  return out;
}

FamilySchema schema_from_config(const ConfigMap& config) {
  FamilySchema schema = build(config);
  validate(schema);
  return schema;
}

std::string describe(const FamilySchema& schema) {
  std::ostringstream os;
  os << schema_name(schema);
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ClassTailFamily>) {
          os << " s=" << f.s << " h0=" << f.h0 << " m=" << f.modulus();
        } else if constexpr (std::is_same_v<T, ProductFamily>) {
          os << " d=" << f.d << " generators=" << f.generators.describe();
        } else if constexpr (std::is_same_v<T, BoundedBelowFamily>) {
          os << " m0=" << f.m0 << " prefix=" << f.prefix.size() << " core=(" << f.core << ")";
          if (f.drift) {
            os << " drift={" << f.drift->residue << "+" << f.drift->modulus << "*t : t>=q}";
          }
        } else {
          os << " prefix=" << f.prefix.size() << " limit=(" << f.limit << ")";
        }
      },
      schema);
  return os.str();
}

std::string format_table(const HSetReport& report) {
  std::ostringstream os;
  os << "# " << describe(report.schema) << "\n";
  os << std::left << std::setw(4) << "h" << std::setw(7) << "in_H" << std::setw(17) << "method"
     << std::setw(10) << "witness" << "limit | hA | note\n";
  for (const HSetRecord& r : report.records) {
    std::string method = to_string(r.method);
    if (!r.certified) method += "*";
    os << std::left << std::setw(4) << r.h << std::setw(7) << (r.in_h ? "yes" : "no")
       << std::setw(17) << method << std::setw(10) << (r.witness ? r.witness->str() : "-")
       << to_string(r.limit_intersection) << " | " << to_string(r.h_fold);
    if (!r.note.empty()) os << " | " << r.note;
    os << "\n";
  }
  std::string in;
  for (const HSetRecord& r : report.records) {
    if (r.in_h) in += (in.empty() ? "" : ",") + std::to_string(r.h);
  }
  os << "H contains: {" << in << "}\n";
  if (std::any_of(report.records.begin(), report.records.end(),
                  [](const HSetRecord& r) { return !r.certified; })) {
    os << "* window-only result, not certified\n";
  }
  return os.str();
}

std::string format_json(const HSetReport& report) {
  nlohmann::json doc;
  doc["family"] = schema_json(report.schema);
  doc["records"] = nlohmann::json::array();
  for (const HSetRecord& r : report.records) {
    nlohmann::json rec;
    rec["h"] = r.h;
    rec["in_H"] = r.in_h;
    rec["method"] = to_string(r.method);
    rec["certified"] = r.certified;
    rec["limit_intersection"] = to_string(r.limit_intersection);
    rec["hA"] = to_string(r.h_fold);
    rec["witness"] = r.witness ? nlohmann::json(r.witness->str()) : nlohmann::json(nullptr);
    rec["note"] = r.note;
    doc["records"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace sumset
