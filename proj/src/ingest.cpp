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

#include "mbrforge/ingest.hpp"

#include <sqlite3.h>

#include <fstream>

#include "mbrforge/error.hpp"
#include "mbrforge/jsonl.hpp"
#include "mbrforge/unicode.hpp"

namespace mbrforge {

namespace {

bool has_ascii_letter(std::string_view s) {
  for (char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) return true;
  }
  return false;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  auto is_ws = [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  };
  while (b < e && is_ws(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_ws(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Double-encoded UTF-8 shows up as U+00C2/U+00C3 followed by a second
// character; count those lead positions.
std::size_t mojibake_digraph_count(const std::u32string& cps) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
    if (cps[i] == 0xC2 || cps[i] == 0xC3) ++n;
  }
  return n;
}

}  // namespace

std::optional<std::string> repair_mojibake(const std::string& text) {
  std::u32string cps = utf8_decode_replacing(text);
  const std::size_t before = mojibake_digraph_count(cps);
  if (before == 0) return std::nullopt;

  // The round trip is only meaningful when every code point fits in one
  // Latin-1 byte.
  std::string latin1;
  latin1.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp > 0xFF) return std::nullopt;
    latin1.push_back(static_cast<char>(cp));
  }
  auto redecoded = utf8_decode_strict(latin1);
  if (!redecoded) return std::nullopt;
  if (mojibake_digraph_count(*redecoded) >= before) return std::nullopt;
  return utf8_encode(*redecoded);
}

std::optional<std::string> clean_line(const std::string& text,
                                      bool* reencoded) {
  if (reencoded) *reencoded = false;
  std::string s = utf8_encode(utf8_decode_replacing(text));
  if (!has_ascii_letter(s)) return std::nullopt;
  if (auto repaired = repair_mojibake(s)) {
    s = std::move(*repaired);
    if (reencoded) *reencoded = true;
  }
  return trim(s);
}

MemoryDedupIndex::MemoryDedupIndex(std::uint64_t max_bytes)
    : max_bytes_(max_bytes) {}

bool MemoryDedupIndex::insert(const std::string& line) {
  auto [it, inserted] = seen_.insert(line);
  if (inserted) {
    // Rough accounting: stored bytes plus hash-set node overhead.
    bytes_ += line.size() + sizeof(std::string) + 32;
    if (bytes_ > max_bytes_) {
      throw ResourceLimitError(
          "dedup index exceeded memory budget (" + std::to_string(max_bytes_) +
          " bytes); rerun with the on-disk index");
    }
  }
  return inserted;
}

struct DiskDedupIndex::Impl {
  sqlite3* db = nullptr;
  sqlite3_stmt* insert_stmt = nullptr;
};

DiskDedupIndex::DiskDedupIndex(const std::filesystem::path& db_path)
    : impl_(std::make_unique<Impl>()) {
  if (sqlite3_open(db_path.string().c_str(), &impl_->db) != SQLITE_OK) {
    throw Error("cannot open dedup index db: " + db_path.string());
  }
  char* err = nullptr;
  const char* setup =
      "PRAGMA journal_mode=OFF;"
      "PRAGMA synchronous=OFF;"
      "CREATE TABLE IF NOT EXISTS seen (line BLOB PRIMARY KEY) WITHOUT ROWID;";
  if (sqlite3_exec(impl_->db, setup, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown sqlite error";
    sqlite3_free(err);
    throw Error("dedup index setup failed: " + msg);
  }
  if (sqlite3_prepare_v2(impl_->db,
                         "INSERT OR IGNORE INTO seen (line) VALUES (?1)", -1,
                         &impl_->insert_stmt, nullptr) != SQLITE_OK) {
    throw Error("dedup index prepare failed");
  }
}

DiskDedupIndex::~DiskDedupIndex() {
  if (impl_->insert_stmt) sqlite3_finalize(impl_->insert_stmt);
  if (impl_->db) sqlite3_close(impl_->db);
}

bool DiskDedupIndex::insert(const std::string& line) {
  sqlite3_reset(impl_->insert_stmt);
  sqlite3_bind_blob(impl_->insert_stmt, 1, line.data(),
                    static_cast<int>(line.size()), SQLITE_STATIC);
  if (sqlite3_step(impl_->insert_stmt) != SQLITE_DONE) {
    throw Error("dedup index insert failed");
  }
  return sqlite3_changes(impl_->db) > 0;
}

std::vector<std::string> dedup_stream(const std::vector<std::string>& lines,
                                      DedupIndex& index,
                                      std::uint64_t* removed) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  std::uint64_t dropped = 0;
  for (const auto& line : lines) {
    if (index.insert(line)) {
      out.push_back(line);
    } else {
      ++dropped;
    }
  }
  if (removed) *removed = dropped;
  return out;
}

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "sentence" || name == "sentence-level") {
    return CorpusFormat::kSentenceLevel;
  }
  if (name == "doc-split" || name == "docsplit") return CorpusFormat::kDocSplit;
  throw InvalidArgumentError("unknown corpus format: " + name);
}

nlohmann::json Document::to_json() const {
  nlohmann::json j;
  j["doc_id"] = doc_id;
  j["sentences"] = sentences;
  if (headline_index) {
    j["headline_index"] = *headline_index;
  } else {
    j["headline_index"] = nullptr;
  }
  return j;
}

Document Document::from_json(const nlohmann::json& j) {
  Document d;
  d.doc_id = j.at("doc_id").get<std::string>();
  d.sentences = j.at("sentences").get<std::vector<std::string>>();
  if (j.contains("headline_index") && !j.at("headline_index").is_null()) {
    d.headline_index = j.at("headline_index").get<std::size_t>();
  }
  return d;
}

nlohmann::json CleaningReport::to_json() const {
  return nlohmann::json{{"lines_in", lines_in},
                        {"lines_removed_no_ascii", lines_removed_no_ascii},
                        {"lines_deduped", lines_deduped},
                        {"lines_reencoded", lines_reencoded},
                        {"lines_out", lines_out},
                        {"blocks_skipped_empty", blocks_skipped_empty}};
}

namespace {

std::string format_doc_id(const char* prefix, std::size_t ordinal) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%08zu", prefix, ordinal);
  return buf;
}

}  // namespace

std::vector<Document> parse_documents(const std::vector<RawLine>& lines,
                                      CorpusFormat format, DedupIndex& dedup,
                                      CleaningReport& report) {
  std::vector<Document> docs;

  // Cleans and dedups one content line; returns the surviving text.
  auto process = [&](const std::string& text) -> std::optional<std::string> {
    ++report.lines_in;
    bool reencoded = false;
    auto cleaned = clean_line(text, &reencoded);
    if (!cleaned) {
      ++report.lines_removed_no_ascii;
      return std::nullopt;
    }
    if (reencoded) ++report.lines_reencoded;
    if (!dedup.insert(*cleaned)) {
      ++report.lines_deduped;
      return std::nullopt;
    }
    ++report.lines_out;
    return cleaned;
  };

  if (format == CorpusFormat::kSentenceLevel) {
    for (const auto& raw : lines) {
      if (auto s = process(raw.text)) {
        Document d;
        d.doc_id = raw.doc_id ? *raw.doc_id : format_doc_id("s", docs.size());
        d.sentences.push_back(std::move(*s));
        docs.push_back(std::move(d));
      }
    }
    return docs;
  }

  // Doc-split: blank lines delimit documents, the first line of a block is
  // its headline.
  std::vector<std::string> block;
  bool first_line_survived = false;
  bool block_started = false;
  std::size_t emitted = 0;

  auto flush_block = [&]() {
    if (!block_started) return;
    if (block.empty()) {
      ++report.blocks_skipped_empty;
    } else {
      Document d;
      d.doc_id = format_doc_id("d", emitted++);
      d.sentences = std::move(block);
      if (first_line_survived) d.headline_index = 0;
      docs.push_back(std::move(d));
    }
    block.clear();
    block_started = false;
    first_line_survived = false;
  };

  for (const auto& raw : lines) {
    if (trim(raw.text).empty()) {  // delimiter, not content
      flush_block();
      continue;
    }
    const bool is_block_first = !block_started;
    block_started = true;
    if (auto s = process(raw.text)) {
      if (is_block_first) first_line_survived = true;
      block.push_back(std::move(*s));
    }
  }
  flush_block();
  return docs;
}

CleaningReport ingest_file(const std::filesystem::path& input,
                           CorpusFormat format,
                           const std::filesystem::path& docs_out,
                           DedupIndex& dedup) {
  std::ifstream in(input, std::ios::binary);
  if (!in.is_open()) {
    throw MalformedInputError("cannot open corpus file: " + input.string());
  }
  std::vector<RawLine> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(RawLine{line, ++line_no, std::nullopt});
  }

  CleaningReport report;
  auto docs = parse_documents(lines, format, dedup, report);

  JsonlWriter writer(docs_out);
  for (const auto& d : docs) writer.write(d.to_json());
  writer.commit();
  return report;
}

std::vector<Document> load_document_store(const std::filesystem::path& path) {
  std::vector<Document> docs;
  JsonlReader reader(path);
  reader.for_each(
      [&](const json& j) { docs.push_back(Document::from_json(j)); });
  return docs;
}

}  // namespace mbrforge
