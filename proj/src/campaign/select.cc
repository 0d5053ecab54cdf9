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

#include "fit/campaign/select.h"

#include <fstream>

#include "block_text.h"
#include "fit/error.h"

namespace fit {

std::vector<std::string> ReadWhitelist(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FitError(ErrorCode::kWhitelistUnreadable, "cannot read whitelist " + path);
  }
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = TrimSpace(line);
    if (entry.empty() || entry.front() == '#') continue;
    entries.emplace_back(entry);
  }
  if (in.bad()) {
    throw FitError(ErrorCode::kWhitelistUnreadable, "error reading whitelist " + path);
  }
  return entries;
}

Endpoint ResolveEntry(const std::string& entry, const Inventory& inventory,
                      const Auth& default_auth) {
  if (auto it = inventory.find(entry); it != inventory.end()) return it->second;
  if (entry.find('@') != std::string::npos) {
    try {
      Endpoint ep = ParseEndpoint(entry);
      ep.auth = default_auth;
      return ep;
    } catch (const FitError& e) {
      throw FitError(ErrorCode::kUnknownLabel, e.what());
    }
  }
  throw FitError(ErrorCode::kUnknownLabel, "no endpoint labelled '" + entry + "'");
}

Endpoint SelectTarget(const Selector& selector, const Inventory& inventory,
                      SplitMix64& rng, const Auth& default_auth) {
  std::vector<std::string> pool;
  switch (selector.kind) {
    case Selector::Kind::kNamed:
      return ResolveEntry(selector.label, inventory, default_auth);
    case Selector::Kind::kRandom:
      pool = selector.pool;
      if (pool.empty()) {
        for (const auto& [label, ep] : inventory) pool.push_back(label);
      }
      break;
    case Selector::Kind::kWhitelist:
      pool = ReadWhitelist(selector.whitelist_path);
      break;
  }
  if (pool.empty()) {
    throw FitError(ErrorCode::kEmptyPool, "nothing to choose from");
  }
  return ResolveEntry(pool[rng.Below(pool.size())], inventory, default_auth);
}

}  // namespace fit
