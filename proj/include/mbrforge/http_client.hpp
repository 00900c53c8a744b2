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

#include <chrono>
#include <functional>
#include <string>
#include <thread>

#include <json.hpp>

#include "mbrforge/error.hpp"

namespace mbrforge {

/// Bounded exponential backoff. 5 attempts starting at 1s by default; tests
/// inject a no-op sleep.
struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_delay{1000};
  double multiplier = 2.0;
  std::function<void(std::chrono::milliseconds)> sleep =
      [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
};

/// Runs fn until it succeeds or attempts are exhausted. fn must throw
/// BackendError on failure; non-retryable errors propagate immediately.
template <typename Fn>
auto with_retries(const RetryPolicy& policy, Fn&& fn) {
  auto delay = policy.initial_delay;
  for (int attempt = 1;; ++attempt) {
    try {
      return fn();
    } catch (const BackendError& e) {
      if (!e.retryable() || attempt >= policy.max_attempts) throw;
      policy.sleep(delay);
      delay = std::chrono::milliseconds(static_cast<long long>(
          static_cast<double>(delay.count()) * policy.multiplier));
    }
  }
}

/// POST json to url+path, expect a 200 with a JSON body. Throws BackendError
/// (retryable for transport failures and 5xx, fatal for other statuses).
nlohmann::json http_post_json(const std::string& base_url,
                              const std::string& path,
                              const nlohmann::json& body);

}  // namespace mbrforge
