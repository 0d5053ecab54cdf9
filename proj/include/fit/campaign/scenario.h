/*
 * Copyright (c) 2026 The FIT Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fit/faults/fault_spec.h"

namespace fit {

struct Selector {
  enum class Kind { kNamed, kRandom, kWhitelist };

  Kind kind = Kind::kNamed;
  std::string label;               // kNamed
  std::vector<std::string> pool;   // kRandom; empty means the whole inventory
  std::string whitelist_path;      // kWhitelist

  bool operator==(const Selector&) const = default;
};

// "web1", "random", "random:web1,web2" or "whitelist:/path".
Selector ParseSelector(std::string_view text);

struct ScenarioStep {
  Selector selector;
  FaultSpec fault;
  std::chrono::milliseconds start_offset{0};
  std::optional<std::chrono::milliseconds> hold;
  int line = 0;
};

struct Scenario {
  std::string name;
  std::vector<ScenarioStep> steps;
  int parallelism = 1;
  std::optional<std::uint64_t> seed;
};

// Strict parser: `key = value` header lines (name, parallelism, seed) then
// `[step]` blocks (selector, fault, params, start_offset, hold). Throws
// kSyntaxError, kUnknownFault or kInvalidField, naming the line.
Scenario ParseScenario(std::string_view text);

// "1.5", "1500ms", "2s", "1m", "1h". Plain numbers are seconds.
std::chrono::milliseconds ParseTimeSpan(std::string_view text);

}  // namespace fit
