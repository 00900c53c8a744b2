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

#include <stdexcept>
#include <string>

namespace mbrforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or configuration value.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// In-memory dedup index exceeded its byte budget; callers should switch to
/// the on-disk index mode.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A document block or record that cannot be parsed.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// A remote backend (generation, embedding, metric) could not be reached or
/// returned an unusable response after the configured retries.
class BackendError : public Error {
 public:
  BackendError(const std::string& what, bool retryable)
      : Error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

/// Backend returned fewer candidates than requested.
class TruncatedResponseError : public Error {
 public:
  using Error::Error;
};

/// Combined token count of a metric input pair exceeds the metric's context
/// window.
class ContextLimitError : public Error {
 public:
  using Error::Error;
};

/// A metric evaluation failed after retries; the segment must be quarantined.
class MetricFailureError : public Error {
 public:
  using Error::Error;
};

/// Requested sample or filter size exceeds availability.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// epsilon_filter would remove every token.
class EmptySupportError : public Error {
 public:
  using Error::Error;
};

/// Plan-mode subsampling on a dataset without recorded cluster assignments.
class MissingClusterAssignmentError : public Error {
 public:
  using Error::Error;
};

/// Embedding backend changed vector dimension mid-stream.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace mbrforge
