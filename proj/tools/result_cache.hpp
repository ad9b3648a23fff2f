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

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace corrlab::cli {

struct ResultRecord {
  std::string hash;
  std::string op;
  std::string params;  // canonical "key=p/q;..." string
  std::string value;   // exact: integer or "p/q"
  std::string witness;
  std::string version;
  double elapsed_ms = 0.0;
  std::string output;  // the text printed for this result
};

std::string record_to_line(const ResultRecord& r);
// Returns nullopt for a malformed line.
std::optional<ResultRecord> record_from_line(const std::string& line);

// Append-only JSON Lines store. A corrupt line is skipped on load and
// does not affect its neighbours.
class ResultCache {
 public:
  ResultCache() = default;
  explicit ResultCache(std::string path);

  bool enabled() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

  std::optional<ResultRecord> find(const std::string& hash, const std::string& op,
                                   const std::string& params, const std::string& version) const;
  void append(const ResultRecord& record);

  const std::vector<ResultRecord>& records() const { return records_; }
  std::size_t skipped_lines() const { return skipped_; }

 private:
  using Key = std::tuple<std::string, std::string, std::string, std::string>;

  std::string path_;
  std::vector<ResultRecord> records_;
  std::map<Key, std::size_t> index_;
  std::size_t skipped_ = 0;
  mutable std::mutex write_mu_;
};

}  // namespace corrlab::cli
