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

#include "fit/campaign/inventory.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "block_text.h"
#include "fit/error.h"

namespace fit {

namespace {

[[noreturn]] void InvalidField(int line, const std::string& why) {
  throw FitError(ErrorCode::kInvalidField, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

Inventory ParseInventory(std::string_view text, const Auth& default_auth) {
  BlockDocument doc = ParseBlocks(text, {"endpoint"});
  if (!doc.header.empty()) {
    InvalidField(doc.header.front().line, "key outside an [endpoint] block");
  }
  Inventory inventory;
  for (const Block& block : doc.blocks) {
    Endpoint ep;
    ep.auth = default_auth;
    for (const KeyValue& kv : block.entries) {
      if (kv.key == "label") {
        ep.label = kv.value;
      } else if (kv.key == "host") {
        ep.host = kv.value;
      } else if (kv.key == "port") {
        int port = 0;
        auto [ptr, ec] = std::from_chars(kv.value.data(),
                                         kv.value.data() + kv.value.size(), port);
        if (ec != std::errc() || ptr != kv.value.data() + kv.value.size()) {
          InvalidField(kv.line, "bad port '" + kv.value + "'");
        }
        ep.port = port;
      } else if (kv.key == "username") {
        ep.username = kv.value;
      } else if (kv.key == "key") {
        ep.auth = KeyFileAuth{kv.value};
      } else if (kv.key == "class") {
        auto c = ParseTargetClass(kv.value);
        if (!c) InvalidField(kv.line, "class must be vm or node");
        ep.target_class = *c;
      } else {
        InvalidField(kv.line, "unknown key '" + kv.key + "'");
      }
    }
    if (ep.label.empty()) InvalidField(block.line, "endpoint without label");
    try {
      ep.Validate();
    } catch (const FitError& e) {
      InvalidField(block.line, e.what());
    }
    if (!inventory.emplace(ep.label, ep).second) {
      InvalidField(block.line, "duplicate label '" + ep.label + "'");
    }
  }
  return inventory;
}

Inventory LoadInventory(const std::string& path, const Auth& default_auth) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FitError(ErrorCode::kInvalidField, "cannot read inventory " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseInventory(buf.str(), default_auth);
}

}  // namespace fit
