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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fit/faults/fault_spec.h"

namespace fit {

// Ordered key=value pairs, the shared textual form of fault parameters in
// CLI flags (--key=value) and scenario files (params = k=v, k=v).
using ParamList = std::vector<std::pair<std::string, std::string>>;

// Throws kUnknownFault for an unrecognized name and kInvalidParameter for an
// unknown key, a malformed value, a missing required key or a value that
// breaks the variant's invariants.
FaultSpec FaultFromParams(std::string_view fault_name, const ParamList& params);

// Canonical parameters; FaultFromParams(FaultName(s), FaultToParams(s)) == s.
ParamList FaultToParams(const FaultSpec& spec);

// Sizes: plain bytes or a k/m/g/t suffix (binary units), e.g. "2048m".
std::uint64_t ParseSize(std::string_view text);
// Whole seconds with an optional s/m/h suffix.
int ParseDurationSeconds(std::string_view text);
// Bits per second with an optional k/m/g suffix (decimal units).
std::uint64_t ParseRate(std::string_view text);

}  // namespace fit
