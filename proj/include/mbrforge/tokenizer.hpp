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

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mbrforge {

enum class TokenizerKind { kWhitespace, kMosesStyle, kExternal };

struct TokenizerSpec {
  std::string name;
  TokenizerKind kind = TokenizerKind::kWhitespace;
  bool budget_only = false;  // true when only counts are consumed
};

/// Deterministic token counter; count(text) >= 1 for non-empty text.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;
  virtual const TokenizerSpec& spec() const = 0;
  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
  virtual std::size_t count(std::string_view text) const {
    return tokenize(text).size();
  }
};

/// Tokens are maximal runs of non-whitespace bytes.
class WhitespaceTokenizer : public Tokenizer {
 public:
  WhitespaceTokenizer();
  const TokenizerSpec& spec() const override { return spec_; }
  std::vector<std::string> tokenize(std::string_view text) const override;
  std::size_t count(std::string_view text) const override;

 private:
  TokenizerSpec spec_;
};

/// Reimplementation of the Moses tokenizer.perl rule set (English defaults,
/// no entity escaping). Used for dataset statistics.
class MosesTokenizer : public Tokenizer {
 public:
  explicit MosesTokenizer(std::string lang = "en");
  const TokenizerSpec& spec() const override { return spec_; }
  std::vector<std::string> tokenize(std::string_view text) const override;

 private:
  TokenizerSpec spec_;
  std::string lang_;
};

/// Adapter for a caller-provided counting function (e.g. a Python callback
/// registered through the binding layer).
class ExternalTokenizer : public Tokenizer {
 public:
  using CountFn = std::function<std::size_t(const std::string&)>;
  ExternalTokenizer(std::string name, CountFn fn)
      : spec_{std::move(name), TokenizerKind::kExternal, true},
        fn_(std::move(fn)) {}
  const TokenizerSpec& spec() const override { return spec_; }
  std::vector<std::string> tokenize(std::string_view) const override {
    return {};  // budget_only: counting is the whole contract
  }
  std::size_t count(std::string_view text) const override {
    return fn_(std::string(text));
  }

 private:
  TokenizerSpec spec_;
  CountFn fn_;
};

/// Factory for the CLI names "whitespace" and "moses".
std::unique_ptr<Tokenizer> make_tokenizer(const std::string& name);

}  // namespace mbrforge
