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

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "mbrforge/ingest.hpp"
#include "mbrforge/tokenizer.hpp"

namespace mbrforge {

/// A contiguous complete-sentence span of one document, packed to a token
/// budget. Blobs of a document tile its sentences without gaps or overlaps.
struct Blob {
  std::string doc_id;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;  // exclusive
  std::string text;
  std::size_t token_count = 0;
  bool has_headline = false;
  bool oversize = false;  // single sentence over budget; excluded downstream

  nlohmann::json to_json() const;
  static Blob from_json(const nlohmann::json& j);
};

/// Joins a sentence span: a headline is followed by a blank line ("\n\n"),
/// everything else by single spaces. A headline-only span has no separator.
std::string render_blob(const std::vector<std::string>& sentences,
                        bool headline_present);

/// Greedy left-to-right packing: a sentence joins the current blob iff the
/// extended rendering stays within max_tokens. A single sentence that alone
/// exceeds the budget becomes a singleton blob flagged oversize (sentences
/// are never fragmented).
std::vector<Blob> pack_blobs(const Document& doc, const Tokenizer& tokenizer,
                             std::size_t max_tokens = 512);

}  // namespace mbrforge
