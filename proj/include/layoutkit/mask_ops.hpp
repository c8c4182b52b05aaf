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

// Segmentation-map to candidate-box conversion: binarization, opening,
// connected components, box fitting and rescaling.

#include <cstdint>
#include <span>
#include <vector>

#include "layoutkit/doc_model.hpp"
#include "layoutkit/kernels.hpp"

namespace layoutkit {

struct OtsuThreshold {
  std::uint8_t value = 0;
  // Histogram holds a single intensity; no split exists.
  bool degenerate = false;
};

// Threshold maximizing between-class variance, where class 0 is
// intensity <= t. The lowest maximizing t wins.
OtsuThreshold otsu_threshold(const kernels::Histogram& hist);

struct OtsuResult {
  std::uint8_t threshold = 0;
  BinaryMask mask;
  bool degenerate = false;
};

// mask pixel is true iff intensity > threshold; all-false when degenerate.
OtsuResult otsu_binarize(const GrayMap& gray);

BinaryMask morphological_open(const BinaryMask& mask, int radius, int iterations);

struct ComponentLabels {
  int width = 0;
  int height = 0;
  // 0 = unlabeled, otherwise 1..num_components in raster discovery order.
  std::vector<std::int32_t> labels;
  int num_components = 0;

  std::int32_t at(int x, int y) const noexcept {
    return labels[static_cast<std::size_t>(y) * width + x];
  }
};

// 4-connected flood fill.
ComponentLabels connected_components(const BinaryMask& mask);

struct ComponentBox {
  std::int32_t label = 0;
  BBox bbox;
  std::int64_t pixel_count = 0;
};

// Tight box and pixel count of every component with at least min_area pixels,
// in label order.
std::vector<ComponentBox> component_boxes(const ComponentLabels& labels, std::int64_t min_area);
std::vector<BBox> fit_bboxes(const ComponentLabels& labels, std::int64_t min_area);

// Per-axis rescale: mins round down, maxes round up, clamped to `to`.
std::vector<BBox> scale_boxes(std::span<const BBox> boxes, PageDims from, PageDims to);

// Blocks are the 4-connected components of the non-separator pixels.
std::vector<BBox> separators_to_blocks(const BinaryMask& sep_mask, std::int64_t min_area);

ClassMap argmax_classmap(const ProbMap& prob);
BinaryMask class_mask(const ClassMap& cmap, LayoutClass cls);

// One probability channel rescaled to 0..255 (round to nearest).
GrayMap channel_to_gray(const ProbMap& prob, int channel);

BinaryMask invert(const BinaryMask& mask);

}  // namespace layoutkit
