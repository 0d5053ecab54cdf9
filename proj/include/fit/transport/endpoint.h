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
#include <variant>

namespace fit {

// VM-Admin operations target kVm endpoints, Cloud-Admin operations target
// kNode endpoints.
enum class TargetClass { kVm, kNode };

std::string_view TargetClassName(TargetClass c);
std::optional<TargetClass> ParseTargetClass(std::string_view name);

struct AgentAuth {
  bool operator==(const AgentAuth&) const = default;
};
struct KeyFileAuth {
  std::string path;
  bool operator==(const KeyFileAuth&) const = default;
};
struct PasswordAuth {
  std::string password;
  bool operator==(const PasswordAuth&) const = default;
};
using Auth = std::variant<AgentAuth, KeyFileAuth, PasswordAuth>;

struct Endpoint {
  std::string host;
  int port = 22;
  std::string username;
  Auth auth;
  std::string label;
  TargetClass target_class = TargetClass::kVm;

  // Throws FitError(kInvalidParameter) on empty host/username or a port
  // outside [1, 65535].
  void Validate() const;

  // "user@host" or "user@host:port" when the port is not 22.
  std::string Address() const;

  // Label if set, otherwise Address().
  std::string DisplayName() const;

  bool operator==(const Endpoint&) const = default;
};

// Parses "user@host" or "user@host:port". The label defaults to the input.
Endpoint ParseEndpoint(std::string_view text);

}  // namespace fit
