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

#include <cstdint>

namespace corrlab {

// Process-wide count of top-level engine calls (rank, dcc, measures, disc,
// heuristic). The CLI cache tests use it to prove a warm hit computes nothing.
std::uint64_t engine_invocations();
void note_engine_invocation();

}  // namespace corrlab
