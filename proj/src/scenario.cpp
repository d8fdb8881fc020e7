// Copyright 2026 The xpmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xpm/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace xpm {

namespace {

struct Entry {
  std::string value;
  int line;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "kind",  "nbar",      "sigma_c",     "sigma_s",     "separation",    "chi_over_v", "chi_t",
      "vt",    "kernel",    "epsilon",     "epsilon_T",   "range",         "phase_offset", "theta_min",
      "theta_max", "theta_steps", "coarse_points", "tol", "output"};
  return keys;
}

struct KeySet {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

KeySet keys_for(ScenarioKind kind, const std::string& kernel) {
  KeySet ks;
  ks.optional = {"sigma_c", "sigma_s", "theta_min", "theta_max", "theta_steps", "coarse_points", "tol", "output"};
  auto kernel_keys = [&]() {
    ks.optional.push_back("kernel");
    if (kernel == "gaussian_regularized") ks.required.push_back("epsilon");
    if (kernel == "top_hat") ks.required.push_back("range");
  };
  switch (kind) {
    case ScenarioKind::counter_propagating:
      ks.required = {"nbar", "chi_over_v", "separation", "vt"};
      ks.optional.push_back("phase_offset");
      kernel_keys();
      break;
    case ScenarioKind::co_propagating:
      ks.required = {"nbar", "chi_t", "epsilon"};
      ks.optional.push_back("separation");
      break;
    case ScenarioKind::transverse:
      ks.required = {"nbar", "chi_over_v", "epsilon_T"};
      ks.optional.push_back("phase_offset");
      break;
    case ScenarioKind::photon_photon:
      ks.required = {"chi_over_v", "separation", "vt"};
      ks.optional.push_back("phase_offset");
      kernel_keys();
      break;
  }
  return ks;
}

double parse_number(const std::string& key, const Entry& e) {
  const std::string& s = e.value;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("non-numeric value for key: " + key + at_line(e.line), key, e.line);
  }
  return v;
}

int parse_count(const std::string& key, const Entry& e) {
  const double v = parse_number(key, e);
  if (v != std::floor(v) || v < 1.0 || v > 1e9) {
    throw ParseError("expected a positive integer for key: " + key + at_line(e.line), key, e.line);
  }
  return static_cast<int>(v);
}

[[noreturn]] void invalid(const std::string& key, const Entry& e, const std::string& why) {
  throw ParseError("invalid value for key: " + key + " (" + why + ")" + at_line(e.line), key, e.line);
}

}  // namespace

std::string_view kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::counter_propagating:
      return "counter_propagating";
    case ScenarioKind::co_propagating:
      return "co_propagating";
    case ScenarioKind::transverse:
      return "transverse";
    case ScenarioKind::photon_photon:
      return "photon_photon";
  }
  return "";
}

std::vector<double> Scenario::theta_grid() const {
  std::vector<double> grid;
  grid.reserve(theta_steps);
  if (!theta_min && !theta_max) {
    const double step = 2.0 * std::numbers::pi / theta_steps;
    for (int k = 0; k < theta_steps; ++k) grid.push_back(-std::numbers::pi + step * k);
    return grid;
  }
  const double lo = theta_min.value_or(-std::numbers::pi);
  const double hi = theta_max.value_or(std::numbers::pi);
  if (theta_steps == 1) return {lo};
  for (int k = 0; k < theta_steps; ++k) grid.push_back(lo + (hi - lo) * k / (theta_steps - 1));
  return grid;
}

Scenario parse_scenario(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  bool seen_header = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line != "[scenario]" || seen_header || !entries.empty()) {
        throw ParseError("unexpected section header" + at_line(line_no), std::string(line), line_no);
      }
      seen_header = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key = value" + at_line(line_no), std::string(line), line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!known_keys().count(key)) throw ParseError("unknown key: " + key + at_line(line_no), key, line_no);
    if (value.empty()) throw ParseError("empty value for key: " + key + at_line(line_no), key, line_no);
    if (entries.count(key)) throw ParseError("duplicate key: " + key + at_line(line_no), key, line_no);
    entries.emplace(key, Entry{value, line_no});
  }

  const auto kind_it = entries.find("kind");
  if (kind_it == entries.end()) throw ParseError("missing key: kind", "kind", 0);
  Scenario s;
  const std::string& kind = kind_it->second.value;
  if (kind == "counter_propagating") {
    s.kind = ScenarioKind::counter_propagating;
  } else if (kind == "co_propagating") {
    s.kind = ScenarioKind::co_propagating;
  } else if (kind == "transverse") {
    s.kind = ScenarioKind::transverse;
  } else if (kind == "photon_photon") {
    s.kind = ScenarioKind::photon_photon;
  } else {
    invalid("kind", kind_it->second, "expected counter_propagating, co_propagating, transverse or photon_photon");
  }

  if (const auto it = entries.find("kernel"); it != entries.end()) {
    s.kernel = it->second.value;
    if (s.kernel != "contact" && s.kernel != "gaussian_regularized" && s.kernel != "top_hat") {
      invalid("kernel", it->second, "expected contact, gaussian_regularized or top_hat");
    }
  }

  const KeySet ks = keys_for(s.kind, s.kernel);
  for (const auto& [key, e] : entries) {
    if (key == "kind") continue;
    const bool allowed = std::find(ks.required.begin(), ks.required.end(), key) != ks.required.end() ||
                         std::find(ks.optional.begin(), ks.optional.end(), key) != ks.optional.end();
    if (!allowed) throw ParseError("extraneous key: " + key + at_line(e.line), key, e.line);
  }
  for (const auto& key : ks.required) {
    if (!entries.count(key)) throw ParseError("missing key: " + key, key, 0);
  }

  auto number = [&](const std::string& key, double& out) -> const Entry* {
    const auto it = entries.find(key);
    if (it == entries.end()) return nullptr;
    out = parse_number(key, it->second);
    return &it->second;
  };
  auto positive = [&](const std::string& key, double& out) {
    if (const Entry* e = number(key, out); e && !(out > 0.0)) invalid(key, *e, "must be positive");
  };
  auto non_negative = [&](const std::string& key, double& out) {
    if (const Entry* e = number(key, out); e && !(out >= 0.0)) invalid(key, *e, "must be non-negative");
  };

  non_negative("nbar", s.nbar);
  positive("sigma_c", s.sigma_c);
  positive("sigma_s", s.sigma_s);
  number("separation", s.separation);
  number("chi_over_v", s.chi_over_v);
  number("chi_t", s.chi_t);
  non_negative("vt", s.vt);
  positive("epsilon", s.epsilon);
  positive("epsilon_T", s.epsilon_t);
  positive("range", s.range);
  number("phase_offset", s.phase_offset);
  positive("tol", s.tol);
  double v = 0.0;
  if (number("theta_min", v)) s.theta_min = v;
  if (number("theta_max", v)) s.theta_max = v;
  if (const auto it = entries.find("theta_steps"); it != entries.end()) {
    s.theta_steps = parse_count("theta_steps", it->second);
  }
  if (const auto it = entries.find("coarse_points"); it != entries.end()) {
    s.coarse_points = parse_count("coarse_points", it->second);
    if (s.coarse_points < 8) invalid("coarse_points", it->second, "must be at least 8");
  }
  if (const auto it = entries.find("output"); it != entries.end()) s.output = it->second.value;

  if ((s.theta_min || s.theta_max) && s.theta_steps > 1 &&
      !(s.theta_min.value_or(-std::numbers::pi) < s.theta_max.value_or(std::numbers::pi))) {
    const char* key = s.theta_max ? "theta_max" : "theta_min";
    invalid(key, entries.at(key), "theta range is empty");
  }
  return s;
}

}  // namespace xpm
