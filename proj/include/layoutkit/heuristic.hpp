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

// Column merging and read-order recovery.

#include <span>
#include <vector>

#include "layoutkit/doc_model.hpp"

namespace layoutkit {

struct HeuristicParams {
  // Max |x_min difference| and |x_max difference| for two boxes to share a column.
  int x_align_tolerance = 15;
  // Horizontal overlap, as a fraction of the narrower box, that puts two super
  // boxes in one reading column.
  double column_overlap_ratio = 0.5;

  void validate() const;
};

// Groups x-aligned segments (of any class) into super boxes, transitively.
// Groups are emitted in order of their first member; members keep input order.
std::vector<SuperBox> merge_vertical(std::span<const Segment> segments,
                                     const HeuristicParams& params);

// Column-major order: columns left to right, top to bottom inside a column.
// Throws InvalidInput on empty input.
OrderedLayout order_reading(std::vector<SuperBox> boxes, PageDims page,
                            const HeuristicParams& params);

OrderedLayout heuristic_pipeline(std::span<const Segment> segments, PageDims page,
                                 const HeuristicParams& params);

// One super box per segment, for methods that order without merging.
std::vector<SuperBox> singleton_boxes(std::span<const Segment> segments);

}  // namespace layoutkit
