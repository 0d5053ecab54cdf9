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

#include <optional>
#include <string>
#include <string_view>

#include "fit/osprobe/os_profile.h"

namespace fit {

enum class Tool {
  kMemtester,
  kStress,
  kIperf,
  kIptables,
  kServiceManager,
  kYcsb,
  kJmeter,
};

struct ToolId {
  Tool tool = Tool::kMemtester;
  // ycsb/jmeter only: where the operator staged the distribution.
  std::string install_root;

  std::string_view name() const;

  bool operator==(const ToolId&) const = default;
};

// Remote command that exits 0 iff the tool is usable.
std::string PresenceProbe(const ToolId& id);

// Distribution package providing the tool, or nullopt when it has to be
// staged by the operator.
std::optional<std::string> PackageName(Tool tool, OsFamily family);

}  // namespace fit
