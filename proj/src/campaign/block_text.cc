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

#include "block_text.h"

#include <cctype>

#include "fit/error.h"

namespace fit {

namespace {

bool ValidUtf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                                   : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += len;
  }
  return true;
}

[[noreturn]] void SyntaxError(int line, const std::string& why) {
  throw FitError(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string_view TrimSpace(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BlockDocument ParseBlocks(std::string_view text, const std::set<std::string>& sections) {
  if (!ValidUtf8(text)) {
    throw FitError(ErrorCode::kSyntaxError, "input is not valid UTF-8");
  }
  BlockDocument doc;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = TrimSpace(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') SyntaxError(line_no, "unterminated section header");
      std::string name(TrimSpace(line.substr(1, line.size() - 2)));
      if (!sections.count(name)) SyntaxError(line_no, "unknown section [" + name + "]");
      doc.blocks.push_back({name, line_no, {}});
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) SyntaxError(line_no, "expected key = value");
    KeyValue kv{std::string(TrimSpace(line.substr(0, eq))),
                std::string(TrimSpace(line.substr(eq + 1))), line_no};
    if (kv.key.empty()) SyntaxError(line_no, "empty key");
    auto& target = doc.blocks.empty() ? doc.header : doc.blocks.back().entries;
    for (const auto& prev : target) {
      if (prev.key == kv.key) SyntaxError(line_no, "duplicate key '" + kv.key + "'");
    }
    target.push_back(std::move(kv));
  }
  return doc;
}

}  // namespace fit
