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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mbrforge {

inline constexpr char32_t kReplacementChar = 0xFFFD;

/// Strict UTF-8 decode: rejects overlong forms, surrogates, and values past
/// U+10FFFF. Returns nullopt on the first invalid sequence.
std::optional<std::u32string> utf8_decode_strict(std::string_view bytes);

/// Lossy UTF-8 decode: each invalid byte becomes U+FFFD.
std::u32string utf8_decode_replacing(std::string_view bytes);

std::string utf8_encode(std::u32string_view cps);
void utf8_append(std::string& out, char32_t cp);

}  // namespace mbrforge
