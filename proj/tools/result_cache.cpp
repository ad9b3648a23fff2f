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

#include "result_cache.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "corrlab/errors.hpp"

namespace corrlab::cli {

std::string record_to_line(const ResultRecord& r) {
  nlohmann::ordered_json j;
  j["hash"] = r.hash;
  j["op"] = r.op;
  j["params"] = r.params;
  j["value"] = r.value;
  j["witness"] = r.witness;
  j["version"] = r.version;
  j["elapsed_ms"] = r.elapsed_ms;
  j["output"] = r.output;
  return j.dump();
}

std::optional<ResultRecord> record_from_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  try {
    ResultRecord r;
    r.hash = j.at("hash").get<std::string>();
    r.op = j.at("op").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.value = j.at("value").get<std::string>();
    r.witness = j.value("witness", "");
    r.version = j.at("version").get<std::string>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    r.output = j.at("output").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // a missing cache is an empty cache
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto rec = record_from_line(line);
    if (!rec) {
      ++skipped_;
      continue;
    }
    index_[{rec->hash, rec->op, rec->params, rec->version}] = records_.size();
    records_.push_back(std::move(*rec));
  }
}

std::optional<ResultRecord> ResultCache::find(const std::string& hash, const std::string& op,
                                              const std::string& params,
                                              const std::string& version) const {
  const auto it = index_.find({hash, op, params, version});
  if (it == index_.end()) return std::nullopt;
  return records_[it->second];
}

void ResultCache::append(const ResultRecord& record) {
  if (!enabled()) return;
  std::lock_guard lock(write_mu_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot append to cache '" + path_ + "'");
  out << record_to_line(record) << '\n';
  if (!out) throw IoError("write to cache '" + path_ + "' failed");
  index_[{record.hash, record.op, record.params, record.version}] = records_.size();
  records_.push_back(record);
}

}  // namespace corrlab::cli
