// Copyright 2026 The layoutkit Authors. All Rights Reserved.
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

// UTF-8 handling and the character classes used for tokenization.

#include <string>
#include <string_view>

namespace layoutkit::text {

// Malformed sequences decode to U+FFFD, one per offending byte.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

bool is_space(char32_t c) noexcept;
bool is_punctuation(char32_t c) noexcept;
// Simple one-to-one lowercase mapping for Latin, Greek and Cyrillic.
char32_t fold_case(char32_t c) noexcept;

// Whitespace runs collapsed to a single U+0020, leading/trailing removed.
std::u32string collapse_whitespace(std::u32string_view s);

}  // namespace layoutkit::text
