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

#include "fit/osprobe/tools.h"

#include "fit/transport/subprocess.h"

namespace fit {

std::string_view ToolId::name() const {
  switch (tool) {
    case Tool::kMemtester: return "memtester";
    case Tool::kStress: return "stress";
    case Tool::kIperf: return "iperf";
    case Tool::kIptables: return "iptables";
    case Tool::kServiceManager: return "service-manager";
    case Tool::kYcsb: return "ycsb";
    case Tool::kJmeter: return "jmeter";
  }
  return "?";
}

std::string PresenceProbe(const ToolId& id) {
  switch (id.tool) {
    case Tool::kServiceManager:
      return "command -v systemctl || command -v service";
    case Tool::kYcsb:
    case Tool::kJmeter:
      if (!id.install_root.empty()) {
        return "test -x " + ShellQuote(id.install_root + "/bin/" + std::string(id.name()));
      }
      break;
    default:
      break;
  }
  return "command -v " + std::string(id.name());
}

std::optional<std::string> PackageName(Tool tool, OsFamily family) {
  if (family == OsFamily::kUnknown) return std::nullopt;
  // CentOS takes memtester, stress and iperf from EPEL, which the operator
  // is expected to have configured.
  switch (tool) {
    case Tool::kMemtester: return "memtester";
    case Tool::kStress: return "stress";
    case Tool::kIperf: return "iperf";
    case Tool::kIptables: return "iptables";
    case Tool::kServiceManager:
    case Tool::kYcsb:
    case Tool::kJmeter:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace fit
