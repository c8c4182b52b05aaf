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

// Data-parallel pixel and index kernels.
//
// Every kernel exists twice with the same signature: `serial` is the direct
// reference formulation kept for testing, `omp` is the OpenMP version used by
// the public operations. Both must agree bit for bit.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "layoutkit/doc_model.hpp"

namespace layoutkit::kernels {

using Histogram = std::array<std::uint64_t, 256>;
// Row = ground-truth code, column = predicted code.
using ConfusionMatrix = std::array<std::uint64_t, kNumClasses * kNumClasses>;

#define LAYOUTKIT_KERNEL_DECLS                                                          \
  Histogram histogram(std::span<const std::uint8_t> values);                            \
  /* true iff value > threshold */                                                      \
  BinaryMask threshold_mask(const GrayMap& gray, std::uint8_t threshold);               \
  /* square element of side 2r+1; pixels outside the raster count as foreground */     \
  BinaryMask erode(const BinaryMask& mask, int radius);                                 \
  /* square element of side 2r+1; pixels outside the raster count as background */     \
  BinaryMask dilate(const BinaryMask& mask, int radius);                                \
  /* flat index of the first non-finite value, if any */                                \
  std::optional<std::size_t> first_nonfinite(const ProbMap& prob);                      \
  /* lowest class code wins ties; requires finite values and num_classes <= 8 */       \
  ClassMap argmax(const ProbMap& prob);                                                 \
  BinaryMask class_mask(const ClassMap& cmap, LayoutClass cls);                         \
  ConfusionMatrix confusion(const ClassMap& pred, const ClassMap& gt);                  \
  /* boxes in source coordinates painted in order, nearest-neighbour resampled */       \
  ClassMap rasterize(std::span<const Segment> segments, PageDims source, PageDims target); \
  /* matches[s] = #{i : pred[i] == gt[s + i]} for every start s */                      \
  std::vector<std::int32_t> window_scores(std::span<const std::int32_t> gt,             \
                                          std::span<const std::int32_t> pred);

namespace serial {
LAYOUTKIT_KERNEL_DECLS
}  // namespace serial

namespace omp {
LAYOUTKIT_KERNEL_DECLS
}  // namespace omp

#undef LAYOUTKIT_KERNEL_DECLS

// Thread count used by the omp kernels (0 restores the runtime default).
void set_threads(int n);
int max_threads();

}  // namespace layoutkit::kernels
