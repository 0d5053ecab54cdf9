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

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fit {

// Line-oriented `key = value` documents with `[section]` blocks, shared by
// the scenario and inventory formats.
struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

struct Block {
  std::string section;
  int line = 0;
  std::vector<KeyValue> entries;
};

struct BlockDocument {
  std::vector<KeyValue> header;
  std::vector<Block> blocks;
};

// Blank lines and lines starting with '#' are skipped. Throws
// FitError(kSyntaxError) on invalid UTF-8, a line without '=', an empty key,
// a section not in `sections`, or a key repeated within one block.
BlockDocument ParseBlocks(std::string_view text, const std::set<std::string>& sections);

std::string_view TrimSpace(std::string_view s);

}  // namespace fit
