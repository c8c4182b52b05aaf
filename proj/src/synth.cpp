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

#include "layoutkit/synth.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace layoutkit {

namespace {

constexpr std::array<const char*, 48> kWords = {
    "the",     "city",    "council", "voted",   "on",      "new",    "bridge", "over",
    "river",   "mayor",   "said",    "that",    "funds",   "were",   "held",   "by",
    "state",   "treasury", "market", "prices",  "rose",    "sharply", "wheat", "cotton",
    "railroad", "company", "reported", "earnings", "farmers", "gathered", "at", "county",
    "fair",    "weather", "will",    "be",      "fair",    "and",    "warmer", "tomorrow",
    "school",  "board",   "meeting", "editor",  "letters", "from",   "readers", "week"};

// Plain modulo: std distributions differ between standard libraries.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

void SynthSpec::validate() const {
  if (page_width <= 0 || page_height <= 0) throw InvalidInput("synth: page size must be positive");
  if (blocks.empty()) throw InvalidInput("synth: spec has no blocks");
  const PageDims dims{page_width, page_height};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i].bbox;
    if (!b.valid() || !b.within(dims)) {
      throw InvalidInput("synth: block " + std::to_string(i) + " " + to_string(b) +
                         " is empty or outside the page");
    }
    if (blocks[i].cls == LayoutClass::background) {
      throw InvalidInput("synth: block " + std::to_string(i) + " is background");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (overlap_area(b, blocks[j].bbox) > 0) {
        throw InvalidInput("synth: blocks " + std::to_string(j) + " and " + std::to_string(i) +
                           " overlap");
      }
    }
  }
}

SynthSpec grid_spec(int page_width, int page_height, int columns, int blocks_per_column,
                    int margin, int gutter) {
  if (columns < 1 || blocks_per_column < 1 || margin < 0 || gutter < 0) {
    throw InvalidInput("synth: bad grid parameters");
  }
  const int col_w = (page_width - 2 * margin - (columns - 1) * gutter) / columns;
  const int blk_h = (page_height - 2 * margin - (blocks_per_column - 1) * gutter) / blocks_per_column;
  if (col_w <= 0 || blk_h <= 0) throw InvalidInput("synth: page too small for the grid");

  SynthSpec spec;
  spec.page_width = page_width;
  spec.page_height = page_height;
  for (int c = 0; c < columns; ++c) {
    for (int r = 0; r < blocks_per_column; ++r) {
      const int x = margin + c * (col_w + gutter);
      const int y = margin + r * (blk_h + gutter);
      spec.blocks.push_back({BBox{x, y, x + col_w, y + blk_h}, LayoutClass::article_body});
    }
  }
  return spec;
}

SynthPage synth_page(const SynthSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(seed);

  SynthPage out;
  out.image = Image(spec.page_width, spec.page_height, 1, 255);
  out.annotation.page_id = spec.page_id;
  out.annotation.page_width = spec.page_width;
  out.annotation.page_height = spec.page_height;

  constexpr int kLine = 12, kBar = 6, kCharW = 4, kInset = 4;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const BBox& b = spec.blocks[i].bbox;
    out.annotation.segments.push_back({b, spec.blocks[i].cls, 1.0});

    for (int y = b.y_min; y < b.y_max; ++y) {
      std::fill_n(out.image.px(b.x_min, y), b.width(), kBlockFill);
    }

    // Words fill the block line by line; each word is a dark bar.
    std::string text;
    const int lines = std::max(1, (b.height() - 2 * kInset) / kLine);
    for (int line = 0; line < lines; ++line) {
      int x = b.x_min + kInset;
      const int y0 = b.y_min + kInset + line * kLine;
      bool first = true;
      while (true) {
        const char* word = kWords[pick(rng, kWords.size())];
        const int w = static_cast<int>(std::char_traits<char>::length(word)) * kCharW;
        if (x + w > b.x_max - kInset && !first) break;
        if (!first || line > 0) text += ' ';
        text += word;
        first = false;
        for (int y = y0; y < std::min(y0 + kBar, b.y_max); ++y) {
          for (int xx = x; xx < std::min(x + w, b.x_max); ++xx) {
            *out.image.px(xx, y) = static_cast<std::uint8_t>(40 + pick(rng, 40));
          }
        }
        x += w + kCharW;
        if (x >= b.x_max - kInset) break;
      }
    }

    if (i > 0) out.gt_text += "\n\n";
    out.gt_text += text;
    out.atlas.entries.push_back({b, std::move(text)});
  }
  out.gt_text += '\n';
  return out;
}

}  // namespace layoutkit
