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

#include <memory>
#include <string>
#include <vector>

#include "mbrforge/http_client.hpp"

namespace mbrforge {

struct EmbeddingVector {
  std::string segment_id;
  std::vector<double> values;
};

/// Maps a batch of texts to one vector each, order-aligned.
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) = 0;
};

/// Hash-seeded deterministic vectors; the test/desk-scale stand-in for a real
/// encoder. Each component is a uniform draw in [-1, 1) keyed by
/// (text, component index).
class StubEmbeddingBackend : public EmbeddingBackend {
 public:
  explicit StubEmbeddingBackend(std::size_t dim = 16) : dim_(dim) {}
  std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) override;

 private:
  std::size_t dim_;
};

/// Wire protocol: POST /embed {"texts": [str]} -> {"vectors": [[float]]}.
class HttpEmbeddingBackend : public EmbeddingBackend {
 public:
  explicit HttpEmbeddingBackend(std::string base_url, RetryPolicy retry = {})
      : base_url_(std::move(base_url)), retry_(std::move(retry)) {}
  std::vector<std::vector<double>> embed(
      const std::vector<std::string>& texts) override;

 private:
  std::string base_url_;
  RetryPolicy retry_;
};

/// Embeds every segment, in order, issuing ceil(n / batch_size) backend
/// calls. Enforces a constant dimension across the pool.
std::vector<EmbeddingVector> embed_pool(
    const std::vector<std::string>& segment_ids,
    const std::vector<std::string>& texts, EmbeddingBackend& backend,
    std::size_t batch_size = 64);

/// "stub" or a http(s) URL.
std::unique_ptr<EmbeddingBackend> make_embedding_backend(
    const std::string& name, std::size_t stub_dim = 16, RetryPolicy retry = {});

}  // namespace mbrforge
