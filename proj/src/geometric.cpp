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

#include "layoutkit/geometric.hpp"

#include <algorithm>
#include <numeric>

#include "layoutkit/mask_ops.hpp"

namespace layoutkit {

void GeometricParams::validate() const {
  if (open_radius <= 0 || open_iterations <= 0 || min_area <= 0 || cluster_epsilon <= 0) {
    throw InvalidInput("geometric parameters must be strictly positive");
  }
}

namespace {

// Single-linkage clustering of one axis, in place.
void snap_axis(std::vector<int>& coords, int epsilon) {
  std::vector<std::size_t> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return coords[a] < coords[b]; });
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    std::int64_t sum = coords[order[begin]];
    while (end < order.size() && coords[order[end]] - coords[order[end - 1]] <= epsilon) {
      sum += coords[order[end]];
      ++end;
    }
    const std::int64_t n = static_cast<std::int64_t>(end - begin);
    // Round half up; coordinates are non-negative.
    const int centroid = static_cast<int>((2 * sum + n) / (2 * n));
    for (std::size_t i = begin; i < end; ++i) coords[order[i]] = centroid;
    begin = end;
  }
}

}  // namespace

std::vector<BBox> cluster_snap_boxes(std::span<const BBox> boxes, int epsilon) {
  if (epsilon < 0) throw InvalidInput("cluster_snap_boxes: epsilon must be >= 0");
  std::vector<int> xs, ys;
  xs.reserve(boxes.size() * 2);
  ys.reserve(boxes.size() * 2);
  for (const auto& b : boxes) {
    xs.push_back(b.x_min);
    xs.push_back(b.x_max);
    ys.push_back(b.y_min);
    ys.push_back(b.y_max);
  }
  snap_axis(xs, epsilon);
  snap_axis(ys, epsilon);
  std::vector<BBox> out;
  out.reserve(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    BBox s{xs[2 * i], ys[2 * i], xs[2 * i + 1], ys[2 * i + 1]};
    if (!s.valid()) {
      throw InvalidInput("cluster_snap_boxes: box " + to_string(boxes[i]) +
                         " collapses to " + to_string(s));
    }
    out.push_back(s);
  }
  return out;
}

std::vector<Segment> snap_segments(std::vector<Segment> segments, int epsilon) {
  std::vector<BBox> boxes;
  boxes.reserve(segments.size());
  for (const auto& s : segments) boxes.push_back(s.bbox);
  const auto snapped = cluster_snap_boxes(boxes, epsilon);
  for (std::size_t i = 0; i < segments.size(); ++i) segments[i].bbox = snapped[i];
  return segments;
}

std::vector<Segment> extract_segments(const ClassMap& cmap, PageDims page,
                                      const GeometricParams& params) {
  params.validate();
  std::vector<Segment> out;
  for (LayoutClass cls : content_classes()) {
    const auto opened =
        morphological_open(class_mask(cmap, cls), params.open_radius, params.open_iterations);
    std::vector<BBox> boxes = fit_bboxes(connected_components(opened), params.min_area);
    for (const auto& b : scale_boxes(boxes, cmap.dims(), page)) out.push_back({b, cls, 1.0});
  }
  return out;
}

std::vector<Segment> extract_segments(const ProbMap& prob, PageDims page,
                                      const GeometricParams& params,
                                      LayoutClass foreground_class) {
  params.validate();
  if (prob.num_classes() < 2 || prob.num_classes() > kNumClasses) {
    throw InvalidInput("extract_segments: probability map needs 2..8 channels");
  }
  if (auto bad = kernels::omp::first_nonfinite(prob)) {
    throw InvalidInput("extract_segments: non-finite probability at flat index " +
                       std::to_string(*bad));
  }
  if (foreground_class == LayoutClass::background) {
    throw InvalidInput("extract_segments: foreground class cannot be background");
  }
  std::vector<Segment> out;
  for (int channel = 1; channel < prob.num_classes(); ++channel) {
    const LayoutClass cls =
        prob.num_classes() == 2 ? foreground_class : static_cast<LayoutClass>(channel);
    const auto bin = otsu_binarize(channel_to_gray(prob, channel));
    if (bin.degenerate) continue;
    const auto labels = connected_components(
        morphological_open(bin.mask, params.open_radius, params.open_iterations));
    const auto comps = component_boxes(labels, params.min_area);
    if (comps.empty()) continue;

    std::vector<double> prob_sum(labels.num_components + 1, 0.0);
    for (int y = 0; y < prob.height(); ++y)
      for (int x = 0; x < prob.width(); ++x) prob_sum[labels.at(x, y)] += prob.at(x, y, channel);

    std::vector<BBox> boxes;
    for (const auto& c : comps) boxes.push_back(c.bbox);
    const auto scaled = scale_boxes(boxes, prob.dims(), page);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const double mean = prob_sum[comps[i].label] / static_cast<double>(comps[i].pixel_count);
      out.push_back({scaled[i], cls, std::clamp(mean, 0.0, 1.0)});
    }
  }
  return out;
}

std::vector<Segment> geometric_pipeline(const ClassMap& cmap, PageDims page,
                                        const GeometricParams& params) {
  return snap_segments(extract_segments(cmap, page, params), params.cluster_epsilon);
}

std::vector<Segment> geometric_pipeline(const ProbMap& prob, PageDims page,
                                        const GeometricParams& params,
                                        LayoutClass foreground_class) {
  return snap_segments(extract_segments(prob, page, params, foreground_class),
                       params.cluster_epsilon);
}

}  // namespace layoutkit
