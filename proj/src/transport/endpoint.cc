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

#include "fit/transport/endpoint.h"

#include <charconv>

#include "fit/error.h"

namespace fit {

std::string_view TargetClassName(TargetClass c) {
  return c == TargetClass::kVm ? "vm" : "node";
}

std::optional<TargetClass> ParseTargetClass(std::string_view name) {
  if (name == "vm") return TargetClass::kVm;
  if (name == "node") return TargetClass::kNode;
  return std::nullopt;
}

void Endpoint::Validate() const {
  if (host.empty()) {
    throw FitError(ErrorCode::kInvalidParameter, "endpoint host is empty");
  }
  if (username.empty()) {
    throw FitError(ErrorCode::kInvalidParameter,
                   "endpoint " + host + " has no username");
  }
  if (port < 1 || port > 65535) {
    throw FitError(ErrorCode::kInvalidParameter,
                   "endpoint " + host + " port " + std::to_string(port) +
                       " outside [1, 65535]");
  }
}

std::string Endpoint::Address() const {
  std::string out = username + "@" + host;
  if (port != 22) out += ":" + std::to_string(port);
  return out;
}

std::string Endpoint::DisplayName() const {
  return label.empty() ? Address() : label;
}

Endpoint ParseEndpoint(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos || at == 0 || at + 1 == text.size()) {
    throw FitError(ErrorCode::kInvalidParameter,
                   "expected user@host, got '" + std::string(text) + "'");
  }
  Endpoint ep;
  ep.username = std::string(text.substr(0, at));
  std::string_view rest = text.substr(at + 1);
  // A bracket-less IPv6 address has several colons; only treat a single
  // trailing ":digits" as a port.
  auto colon = rest.rfind(':');
  if (colon != std::string_view::npos &&
      rest.find(':') == colon) {
    std::string_view port_text = rest.substr(colon + 1);
    int port = 0;
    auto [ptr, ec] = std::from_chars(port_text.data(),
                                     port_text.data() + port_text.size(), port);
    if (ec != std::errc() || ptr != port_text.data() + port_text.size()) {
      throw FitError(ErrorCode::kInvalidParameter,
                     "bad port in '" + std::string(text) + "'");
    }
    ep.port = port;
    rest = rest.substr(0, colon);
  }
  ep.host = std::string(rest);
  ep.label = std::string(text);
  ep.Validate();
  return ep;
}

}  // namespace fit
