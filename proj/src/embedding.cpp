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

#include "mbrforge/embedding.hpp"

#include "mbrforge/error.hpp"
#include "mbrforge/rng.hpp"

namespace mbrforge {

std::vector<std::vector<double>> StubEmbeddingBackend::embed(
    const std::vector<std::string>& texts) {
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) {
    const std::uint64_t base = fnv1a64(text);
    std::vector<double> v(dim_);
    for (std::size_t d = 0; d < dim_; ++d) {
      Rng rng(hash_combine(base, d));
      v[d] = rng.next_double() * 2.0 - 1.0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> HttpEmbeddingBackend::embed(
    const std::vector<std::string>& texts) {
  nlohmann::json body{{"texts", texts}};
  auto response = with_retries(
      retry_, [&] { return http_post_json(base_url_, "/embed", body); });
  if (!response.contains("vectors") || !response["vectors"].is_array() ||
      response["vectors"].size() != texts.size()) {
    throw BackendError("embedding backend returned " +
                           std::to_string(response.value(
                               "vectors", nlohmann::json::array()).size()) +
                           " vectors for " + std::to_string(texts.size()) +
                           " texts",
                       /*retryable=*/false);
  }
  return response["vectors"].get<std::vector<std::vector<double>>>();
}

std::vector<EmbeddingVector> embed_pool(
    const std::vector<std::string>& segment_ids,
    const std::vector<std::string>& texts, EmbeddingBackend& backend,
    std::size_t batch_size) {
  if (segment_ids.size() != texts.size()) {
    throw InvalidArgumentError("embed_pool: ids/texts size mismatch");
  }
  if (batch_size < 1) batch_size = 1;

  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::size_t dim = 0;
  for (std::size_t start = 0; start < texts.size(); start += batch_size) {
    const std::size_t end = std::min(texts.size(), start + batch_size);
    std::vector<std::string> batch(texts.begin() + start, texts.begin() + end);
    auto vectors = backend.embed(batch);
    if (vectors.size() != batch.size()) {
      throw BackendError("embedding backend returned wrong batch size",
                         /*retryable=*/false);
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (out.empty() && i == 0) {
        dim = vectors[i].size();
      } else if (vectors[i].size() != dim) {
        throw DimensionMismatchError(
            "embedding dimension changed mid-stream: " +
            std::to_string(vectors[i].size()) + " vs " + std::to_string(dim));
      }
      out.push_back(EmbeddingVector{segment_ids[start + i],
                                    std::move(vectors[i])});
    }
  }
  return out;
}

std::unique_ptr<EmbeddingBackend> make_embedding_backend(
    const std::string& name, std::size_t stub_dim, RetryPolicy retry) {
  if (name == "stub") return std::make_unique<StubEmbeddingBackend>(stub_dim);
  if (name.rfind("http://", 0) == 0 || name.rfind("https://", 0) == 0) {
    return std::make_unique<HttpEmbeddingBackend>(name, std::move(retry));
  }
  throw InvalidArgumentError("unknown embedding backend: " + name);
}

}  // namespace mbrforge
