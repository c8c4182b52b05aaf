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

// Deterministic synthetic newspaper pages for end-to-end checks: a rendered
// raster whose painted blocks equal the annotation, the page text, and a
// mock atlas holding each block's text.

#include <cstdint>
#include <string>
#include <vector>

#include "layoutkit/doc_model.hpp"
#include "layoutkit/ocr_engine.hpp"

namespace layoutkit {

struct SynthBlock {
  BBox bbox;
  LayoutClass cls = LayoutClass::article_body;

  friend bool operator==(const SynthBlock&, const SynthBlock&) = default;
};

struct SynthSpec {
  std::string page_id = "synth";
  int page_width = 0;
  int page_height = 0;
  // In read order; ground-truth text follows this order.
  std::vector<SynthBlock> blocks;

  // Throws InvalidInput for empty or out-of-page blocks and overlaps.
  void validate() const;
};

// Equal-width columns of equal-height article-body blocks, listed column by
// column, top to bottom.
SynthSpec grid_spec(int page_width, int page_height, int columns, int blocks_per_column,
                    int margin = 32, int gutter = 32);

struct SynthPage {
  Image image;
  PageAnnotation annotation;
  std::string gt_text;
  MockAtlas atlas;
};

SynthPage synth_page(const SynthSpec& spec, std::uint64_t seed);

// Gray value of the block ground; text bars are darker, the page is 255.
inline constexpr std::uint8_t kBlockFill = 235;

}  // namespace layoutkit
