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

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "mbrforge/error.hpp"

namespace mbrforge {

using json = nlohmann::json;

/// Streams one parsed JSON object per line. Blank lines are skipped.
class JsonlReader {
 public:
  explicit JsonlReader(const std::filesystem::path& path)
      : path_(path), in_(path) {
    if (!in_.is_open()) {
      throw MalformedInputError("cannot open " + path.string());
    }
  }

  std::optional<json> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (line.empty()) continue;
      try {
        return json::parse(line);
      } catch (const json::parse_error& e) {
        throw MalformedInputError(path_.string() + ":" +
                                  std::to_string(line_no_) + ": " + e.what());
      }
    }
    return std::nullopt;
  }

  void for_each(const std::function<void(const json&)>& fn) {
    while (auto rec = next()) fn(*rec);
  }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

/// Writes one compact JSON object per line. Output is written to a temporary
/// sibling and renamed into place on commit(), so partial files are never
/// visible under the final name.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::filesystem::path& path)
      : path_(path), tmp_(path.string() + ".tmp") {
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path());
    }
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_.is_open()) {
      throw Error("cannot open " + tmp_.string() + " for writing");
    }
  }

  ~JsonlWriter() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      std::filesystem::remove(tmp_, ec);
    }
  }

  void write(const json& rec) {
    out_ << rec.dump() << '\n';
    ++count_;
  }

  std::size_t count() const { return count_; }

  void commit() {
    out_.flush();
    if (!out_) throw Error("write failed for " + tmp_.string());
    out_.close();
    std::filesystem::rename(tmp_, path_);
    committed_ = true;
  }

 private:
  std::filesystem::path path_;
  std::filesystem::path tmp_;
  std::ofstream out_;
  std::size_t count_ = 0;
  bool committed_ = false;
};

}  // namespace mbrforge
