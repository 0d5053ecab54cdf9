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

#include <map>
#include <string>
#include <string_view>

#include "fit/transport/endpoint.h"

namespace fit {

// Endpoints by label. Map order is the pool order for whole-inventory draws.
using Inventory = std::map<std::string, Endpoint>;

// `[endpoint]` blocks with keys label, host, port, username, key, class.
// Endpoints without a key use `default_auth`. Throws kSyntaxError or
// kInvalidField naming the line.
Inventory ParseInventory(std::string_view text, const Auth& default_auth = AgentAuth{});

// Reads and parses a file; an unreadable file is kInvalidField.
Inventory LoadInventory(const std::string& path, const Auth& default_auth = AgentAuth{});

}  // namespace fit
