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

#include "mbrforge/blob.hpp"

#include "mbrforge/error.hpp"

namespace mbrforge {

nlohmann::json Blob::to_json() const {
  return nlohmann::json{
      {"doc_id", doc_id},
      {"span", {span_begin, span_end}},
      {"text", text},
      {"token_count", token_count},
      {"has_headline", has_headline},
      {"oversize", oversize},
  };
}

Blob Blob::from_json(const nlohmann::json& j) {
  Blob b;
  b.doc_id = j.at("doc_id").get<std::string>();
  b.span_begin = j.at("span").at(0).get<std::size_t>();
  b.span_end = j.at("span").at(1).get<std::size_t>();
  b.text = j.at("text").get<std::string>();
  b.token_count = j.at("token_count").get<std::size_t>();
  b.has_headline = j.at("has_headline").get<bool>();
  b.oversize = j.at("oversize").get<bool>();
  return b;
}

std::string render_blob(const std::vector<std::string>& sentences,
                        bool headline_present) {
  if (sentences.empty()) {
    throw InvalidArgumentError("render_blob: empty sentence span");
  }
  std::string out = sentences[0];
  for (std::size_t i = 1; i < sentences.size(); ++i) {
    out += (headline_present && i == 1) ? "\n\n" : " ";
    out += sentences[i];
  }
  return out;
}

std::vector<Blob> pack_blobs(const Document& doc, const Tokenizer& tokenizer,
                             std::size_t max_tokens) {
  if (max_tokens < 1) {
    throw InvalidArgumentError("pack_blobs: max_tokens must be >= 1");
  }
  std::vector<Blob> blobs;
  const std::size_t n = doc.sentences.size();

  auto span_has_headline = [&](std::size_t begin, std::size_t end) {
    return doc.headline_index && *doc.headline_index >= begin &&
           *doc.headline_index < end;
  };
  auto render_span = [&](std::size_t begin, std::size_t end) {
    std::vector<std::string> span(doc.sentences.begin() + begin,
                                  doc.sentences.begin() + end);
    return render_blob(span, span_has_headline(begin, end));
  };
  auto close = [&](std::size_t begin, std::size_t end, std::string text,
                   std::size_t tokens, bool oversize) {
    Blob b;
    b.doc_id = doc.doc_id;
    b.span_begin = begin;
    b.span_end = end;
    b.text = std::move(text);
    b.token_count = tokens;
    b.has_headline = span_has_headline(begin, end);
    b.oversize = oversize;
    blobs.push_back(std::move(b));
  };

  std::size_t start = 0;
  std::string current_text;
  std::size_t current_tokens = 0;

  for (std::size_t i = 0; i < n; ++i) {
    std::string extended = render_span(start, i + 1);
    std::size_t extended_tokens = tokenizer.count(extended);
    if (extended_tokens <= max_tokens) {
      current_text = std::move(extended);
      current_tokens = extended_tokens;
      continue;
    }
    if (i == start) {
      // Lone sentence over budget: flag it, never fragment it.
      close(start, i + 1, std::move(extended), extended_tokens, true);
      start = i + 1;
      current_text.clear();
      current_tokens = 0;
      continue;
    }
    close(start, i, std::move(current_text), current_tokens, false);
    start = i;
    current_text = render_span(start, i + 1);
    current_tokens = tokenizer.count(current_text);
    if (current_tokens > max_tokens) {
      close(start, i + 1, std::move(current_text), current_tokens, true);
      start = i + 1;
      current_text.clear();
      current_tokens = 0;
    }
  }
  if (start < n) {
    close(start, n, std::move(current_text), current_tokens, false);
  }
  return blobs;
}

}  // namespace mbrforge
