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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

namespace mbrforge {

struct RawLine {
  std::string text;          // no trailing newline
  std::size_t line_no = 0;   // 1-based, strictly increasing within a file
  std::optional<std::string> doc_id;
};

struct Document {
  std::string doc_id;
  std::vector<std::string> sentences;
  std::optional<std::size_t> headline_index;  // 0 or absent

  nlohmann::json to_json() const;
  static Document from_json(const nlohmann::json& j);
};

struct CleaningReport {
  std::uint64_t lines_in = 0;
  std::uint64_t lines_removed_no_ascii = 0;
  std::uint64_t lines_deduped = 0;
  std::uint64_t lines_reencoded = 0;
  std::uint64_t lines_out = 0;
  std::uint64_t blocks_skipped_empty = 0;  // doc-split blocks empty after cleaning

  nlohmann::json to_json() const;
};

/// Drops lines without an ASCII letter, repairs Latin-1/UTF-8 double-encoding
/// mojibake, and trims surrounding whitespace. Invalid UTF-8 bytes are
/// replaced with U+FFFD first. Returns nullopt for dropped lines; sets
/// *reencoded when a repair was applied.
std::optional<std::string> clean_line(const std::string& text,
                                      bool* reencoded = nullptr);

/// The mojibake round trip on its own: re-encode code points <= U+00FF as
/// Latin-1 bytes and re-decode as UTF-8. Returns the repaired string only if
/// the round trip succeeds and strictly reduces the number of U+00C2/U+00C3-led
/// digraphs; otherwise nullopt.
std::optional<std::string> repair_mojibake(const std::string& text);

/// Exact-match membership index used by dedup_stream.
class DedupIndex {
 public:
  virtual ~DedupIndex() = default;
  /// Returns true if the line was absent (and records it).
  virtual bool insert(const std::string& line) = 0;
};

/// Hash-set index holding the full line bytes. Throws ResourceLimitError once
/// stored bytes exceed the budget, signalling callers to switch to the
/// on-disk mode.
class MemoryDedupIndex : public DedupIndex {
 public:
  explicit MemoryDedupIndex(
      std::uint64_t max_bytes = std::uint64_t{4} << 30);
  bool insert(const std::string& line) override;

 private:
  std::unordered_set<std::string> seen_;
  std::uint64_t bytes_ = 0;
  std::uint64_t max_bytes_;
};

/// SQLite-backed index (BLOB primary key = line bytes), for corpora whose
/// distinct-line set does not fit the memory budget.
class DiskDedupIndex : public DedupIndex {
 public:
  explicit DiskDedupIndex(const std::filesystem::path& db_path);
  ~DiskDedupIndex() override;
  DiskDedupIndex(const DiskDedupIndex&) = delete;
  DiskDedupIndex& operator=(const DiskDedupIndex&) = delete;
  bool insert(const std::string& line) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// First-occurrence-order dedup of an already-cleaned line stream.
std::vector<std::string> dedup_stream(const std::vector<std::string>& lines,
                                      DedupIndex& index,
                                      std::uint64_t* removed = nullptr);

enum class CorpusFormat { kSentenceLevel, kDocSplit };

CorpusFormat parse_corpus_format(const std::string& name);

/// Cleans, dedups, and groups raw lines into Documents.
///
/// Sentence-level: one single-sentence Document per surviving line, no
/// headline. Doc-split: blank lines delimit documents; headline_index = 0 iff
/// the block's original first line survived cleaning. Blocks that clean to
/// nothing are skipped and counted in the report.
std::vector<Document> parse_documents(const std::vector<RawLine>& lines,
                                      CorpusFormat format, DedupIndex& dedup,
                                      CleaningReport& report);

/// File-level driver: plain-text UTF-8 in, canonical document store
/// (JSONL of Document) plus cleaning report out.
CleaningReport ingest_file(const std::filesystem::path& input,
                           CorpusFormat format,
                           const std::filesystem::path& docs_out,
                           DedupIndex& dedup);

std::vector<Document> load_document_store(const std::filesystem::path& path);

}  // namespace mbrforge
