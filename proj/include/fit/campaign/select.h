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

#include <string>
#include <vector>

#include "fit/campaign/inventory.h"
#include "fit/campaign/rng.h"
#include "fit/campaign/scenario.h"

namespace fit {

// Non-empty, non-comment lines of a whitelist file, trimmed. Throws
// kWhitelistUnreadable.
std::vector<std::string> ReadWhitelist(const std::string& path);

// An inventory label, or a user@host entry using `default_auth`. Throws
// kUnknownLabel.
Endpoint ResolveEntry(const std::string& entry, const Inventory& inventory,
                      const Auth& default_auth);

// Named selectors consume no draws; random and whitelist selectors consume
// exactly one. Throws kUnknownLabel, kEmptyPool or kWhitelistUnreadable.
Endpoint SelectTarget(const Selector& selector, const Inventory& inventory,
                      SplitMix64& rng, const Auth& default_auth = AgentAuth{});

}  // namespace fit
