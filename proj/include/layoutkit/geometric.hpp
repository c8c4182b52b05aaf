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

#include <cstdint>
#include <span>
#include <vector>

#include "layoutkit/doc_model.hpp"

namespace layoutkit {

struct GeometricParams {
  int open_radius = 1;
  int open_iterations = 2;
  // Minimum component size at map resolution.
  std::int64_t min_area = 64;
  // Vertex clustering link distance at page resolution.
  int cluster_epsilon = 12;

  void validate() const;
};

// Snaps box edges onto shared lines. All x edges (x_min and x_max of every
// box) are clustered by 1-D single linkage with link distance <= epsilon and
// replaced by the cluster's rounded mean; y edges likewise. Output order
// matches input order. Throws InvalidInput if a box collapses.
std::vector<BBox> cluster_snap_boxes(std::span<const BBox> boxes, int epsilon);

// Mask -> opened mask -> components -> boxes scaled to `page`, one class at a
// time. No snapping. Shared by the geometric and heuristic methods.
std::vector<Segment> extract_segments(const ClassMap& cmap, PageDims page,
                                      const GeometricParams& params);

// Channel k of the map is class code k, except that a two-channel
// (background/foreground) map labels its foreground `foreground_class`.
// Each channel is Otsu-binarized; score = mean channel probability over the
// component.
std::vector<Segment> extract_segments(const ProbMap& prob, PageDims page,
                                      const GeometricParams& params,
                                      LayoutClass foreground_class = LayoutClass::article_body);

std::vector<Segment> geometric_pipeline(const ClassMap& cmap, PageDims page,
                                        const GeometricParams& params);
std::vector<Segment> geometric_pipeline(const ProbMap& prob, PageDims page,
                                        const GeometricParams& params,
                                        LayoutClass foreground_class = LayoutClass::article_body);

// Replaces each segment's box by cluster_snap_boxes over all segments jointly.
std::vector<Segment> snap_segments(std::vector<Segment> segments, int epsilon);

}  // namespace layoutkit
