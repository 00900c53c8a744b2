// Copyright 2026 The mbrforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbrforge/tokenizer.hpp"

#include <cctype>

#include "mbrforge/error.hpp"

namespace mbrforge {

namespace {
inline bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
}  // namespace

WhitespaceTokenizer::WhitespaceTokenizer()
    : spec_{"whitespace", TokenizerKind::kWhitespace, false} {}

std::vector<std::string> WhitespaceTokenizer::tokenize(
    std::string_view text) const {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space_byte(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space_byte(text[i])) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::size_t WhitespaceTokenizer::count(std::string_view text) const {
  std::size_t n = 0;
  bool in_token = false;
  for (unsigned char c : text) {
    if (is_space_byte(c)) {
      in_token = false;
    } else if (!in_token) {
      in_token = true;
      ++n;
    }
  }
  return n;
}

std::unique_ptr<Tokenizer> make_tokenizer(const std::string& name) {
  if (name == "whitespace") return std::make_unique<WhitespaceTokenizer>();
  if (name == "moses") return std::make_unique<MosesTokenizer>();
  throw InvalidArgumentError("unknown tokenizer: " + name);
}

}  // namespace mbrforge
