// Copyright 2026 The corrlab Authors.
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

#include "corrlab/report_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "corrlab/errors.hpp"

namespace corrlab {

std::string report_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["corpus"] = report.corpus;
  j["instances"] = report.instances;
  j["checked"] = report.checked;
  j["vacuous"] = report.vacuous;
  j["passed"] = report.passed();
  j["elapsed_ms"] = report.elapsed_ms;
  j["stats"] = report.stats;
  auto& v = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& x : report.violations) {
    v.push_back({{"index", x.index}, {"matrix", x.matrix}, {"detail", x.detail}});
  }
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_to_csv(const SuiteReport& report) {
  std::string out = "kind,index,key,value\n";
  auto row = [&](const std::string& kind, const std::string& index, const std::string& key,
                 const std::string& value) {
    out += csv_field(kind) + "," + csv_field(index) + "," + csv_field(key) + "," +
           csv_field(value) + "\n";
  };
  row("summary", "", "suite", report.suite);
  row("summary", "", "corpus", report.corpus);
  row("summary", "", "instances", std::to_string(report.instances));
  row("summary", "", "checked", std::to_string(report.checked));
  row("summary", "", "vacuous", std::to_string(report.vacuous));
  row("summary", "", "violations", std::to_string(report.violations.size()));
  row("summary", "", "result", report.passed() ? "PASS" : "FAIL");
  for (const auto& [k, v] : report.stats) row("stat", "", k, v);
  for (const auto& x : report.violations) {
    row("violation", std::to_string(x.index), x.matrix, x.detail);
  }
  return out;
}

std::string trend_to_csv(const TrendTable& table) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace corrlab
