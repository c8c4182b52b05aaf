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

#include <array>
#include <cstdint>
#include <filesystem>

#include "layoutkit/doc_model.hpp"

namespace layoutkit {

using Rgb = std::array<std::uint8_t, 3>;

// Fixed overlay colour per class code.
const std::array<Rgb, kNumClasses>& class_palette() noexcept;

// 8-bit gray or RGB; palettes are expanded, alpha and 16-bit depth stripped.
Image load_image_png(const std::filesystem::path& path);
void save_image_png(const std::filesystem::path& path, const Image& image);

// Paletted 8-bit PNG whose indices are class codes 0..7.
void save_classmap_png(const std::filesystem::path& path, const ClassMap& cmap);
// Accepts paletted or 8-bit gray files; any value above 7 is a SchemaError.
ClassMap load_classmap_png(const std::filesystem::path& path);

// Nonzero sample (gray value or palette index) = true.
BinaryMask load_mask_png(const std::filesystem::path& path);
void save_mask_png(const std::filesystem::path& path, const BinaryMask& mask);

}  // namespace layoutkit
