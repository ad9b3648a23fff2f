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
#include <string_view>
#include <vector>

#include "corrlab/sign_matrix.hpp"

namespace corrlab {

// Text format: a header line "m n", then m lines of n characters from
// {+, -}. The parser also accepts {0, 1} (0 -> +1, 1 -> -1). Blank lines
// and lines starting with '#' between matrices are ignored.
SignMatrix parse_matrix(std::string_view text);
std::vector<SignMatrix> parse_matrices(std::string_view text);

// Always the +/- form, newline-terminated.
std::string serialize_matrix(const SignMatrix& a);

SignMatrix read_matrix_file(const std::string& path);
std::vector<SignMatrix> read_matrices_file(const std::string& path);

}  // namespace corrlab
