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

#include "mbrforge/http_client.hpp"

#include <httplib.h>

namespace mbrforge {

nlohmann::json http_post_json(const std::string& base_url,
                              const std::string& path,
                              const nlohmann::json& body) {
  httplib::Client client(base_url);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(300, 0);

  auto res = client.Post(path, body.dump(), "application/json");
  if (!res) {
    throw BackendError(
        "POST " + base_url + path + ": " + httplib::to_string(res.error()),
        /*retryable=*/true);
  }
  if (res->status >= 500) {
    throw BackendError("POST " + base_url + path + ": HTTP " +
                           std::to_string(res->status),
                       /*retryable=*/true);
  }
  if (res->status != 200) {
    throw BackendError("POST " + base_url + path + ": HTTP " +
                           std::to_string(res->status),
                       /*retryable=*/false);
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw BackendError(
        "POST " + base_url + path + ": bad JSON in response: " + e.what(),
        /*retryable=*/false);
  }
}

}  // namespace mbrforge
