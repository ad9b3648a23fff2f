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

#include <string>

#include "corrlab/suites.hpp"

namespace corrlab {

std::string report_to_json(const SuiteReport& report);
// Rows of (kind, index, key, value); kind is summary, stat or violation.
std::string report_to_csv(const SuiteReport& report);
std::string trend_to_csv(const TrendTable& table);

// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& value);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace corrlab
