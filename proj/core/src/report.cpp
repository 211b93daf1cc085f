// Copyright 2026 The combs Authors
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

#include <sstream>

#include "combs/cli/cli.hpp"

namespace combs::cli {

nlohmann::ordered_json decision_json(const Decision& d) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(d.verdict);
  j["method"] = d.method;
  j["certified"] = d.certified;
  j["tolerance"] = d.tolerance;
  j["coverage"] = {{"probes", d.coverage.probes}, {"truncated", d.coverage.truncated}};
  if (d.witness) {
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.witness->fields) fields[k] = v;
    j["witness"] = {{"kind", d.witness->kind}, {"fields", fields}};
  } else {
    j["witness"] = nullptr;
  }
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

namespace {

bool is_scalar_list(const nlohmann::ordered_json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object()) return false;
  return true;
}

void write_value(std::ostream& os, const nlohmann::ordered_json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      os << pad << k << ":";
      if (v.is_object() || (v.is_array() && !is_scalar_list(v))) {
        os << "\n";
        write_value(os, v, indent + 2);
      } else {
        os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      os << pad << "-\n";
      write_value(os, v, indent + 2);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const std::vector<QueryReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "[line " << r.line << "] " << r.query << "\n";
    write_value(os, r.result, 2);
    if (r.elapsed_ms) os << "  elapsed_ms: " << *r.elapsed_ms << "\n";
    os << "\n";
  }
  return os.str();
}

std::string render_json(const std::vector<QueryReport>& reports,
                        const std::string& theory_kind) {
  nlohmann::ordered_json j;
  j["schema"] = "combs-report/1";
  j["backend"] = theory_kind;
  j["queries"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json q;
    q["line"] = r.line;
    q["query"] = r.query;
    q["result"] = r.result;
    if (r.elapsed_ms) q["elapsed_ms"] = *r.elapsed_ms;
    j["queries"].push_back(std::move(q));
  }
  return j.dump(2) + "\n";
}

}  // namespace combs::cli
