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

#include "layoutkit/mask_ops.hpp"

#include <algorithm>
#include <cmath>

namespace layoutkit {

OtsuThreshold otsu_threshold(const kernels::Histogram& hist) {
  int distinct = 0;
  int only = 0;
  std::uint64_t total = 0;
  long double sum_all = 0;
  for (int v = 0; v < 256; ++v) {
    if (hist[v] == 0) continue;
    ++distinct;
    only = v;
    total += hist[v];
    sum_all += static_cast<long double>(v) * hist[v];
  }
  if (distinct <= 1) return {static_cast<std::uint8_t>(only), true};

  // sigma_b^2(t) ~ (n1*S0 - n0*S1)^2 / (n0*n1); the 1/N^2 factor is common.
  long double best = -1;
  int best_t = 0;
  std::uint64_t n0 = 0;
  long double s0 = 0;
  for (int t = 0; t < 255; ++t) {
    n0 += hist[t];
    s0 += static_cast<long double>(t) * hist[t];
    const std::uint64_t n1 = total - n0;
    if (n0 == 0 || n1 == 0) continue;
    const long double s1 = sum_all - s0;
    const long double d = static_cast<long double>(n1) * s0 - static_cast<long double>(n0) * s1;
    const long double var = d * d / (static_cast<long double>(n0) * static_cast<long double>(n1));
    if (var > best) {
      best = var;
      best_t = t;
    }
  }
  return {static_cast<std::uint8_t>(best_t), false};
}

OtsuResult otsu_binarize(const GrayMap& gray) {
  if (gray.empty()) throw InvalidInput("otsu_binarize: empty map");
  const auto t = otsu_threshold(kernels::omp::histogram(gray.pixels()));
  if (t.degenerate) return {t.value, BinaryMask(gray.width(), gray.height(), 0), true};
  return {t.value, kernels::omp::threshold_mask(gray, t.value), false};
}

BinaryMask morphological_open(const BinaryMask& mask, int radius, int iterations) {
  if (radius < 1 || iterations < 1) {
    throw InvalidInput("morphological_open: radius and iterations must be >= 1");
  }
  BinaryMask m = mask;
  for (int i = 0; i < iterations; ++i) m = kernels::omp::erode(m, radius);
  for (int i = 0; i < iterations; ++i) m = kernels::omp::dilate(m, radius);
  return m;
}

ComponentLabels connected_components(const BinaryMask& mask) {
  ComponentLabels out;
  out.width = mask.width();
  out.height = mask.height();
  out.labels.assign(mask.size(), 0);
  const int w = mask.width(), h = mask.height();
  const auto px = mask.pixels();
  std::vector<std::int64_t> stack;
  std::int32_t next = 0;
  for (std::int64_t start = 0; start < static_cast<std::int64_t>(px.size()); ++start) {
    if (!px[start] || out.labels[start] != 0) continue;
    ++next;
    out.labels[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::int64_t i = stack.back();
      stack.pop_back();
      const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
      auto visit = [&](std::int64_t j) {
        if (px[j] && out.labels[j] == 0) {
          out.labels[j] = next;
          stack.push_back(j);
        }
      };
      if (x > 0) visit(i - 1);
      if (x + 1 < w) visit(i + 1);
      if (y > 0) visit(i - w);
      if (y + 1 < h) visit(i + w);
    }
  }
  out.num_components = next;
  return out;
}

std::vector<ComponentBox> component_boxes(const ComponentLabels& labels, std::int64_t min_area) {
  std::vector<ComponentBox> acc(labels.num_components);
  for (int i = 0; i < labels.num_components; ++i) {
    acc[i].label = i + 1;
    acc[i].bbox = {labels.width, labels.height, 0, 0};
  }
  for (int y = 0; y < labels.height; ++y) {
    for (int x = 0; x < labels.width; ++x) {
      const auto l = labels.at(x, y);
      if (l == 0) continue;
      auto& c = acc[l - 1];
      c.bbox.x_min = std::min(c.bbox.x_min, x);
      c.bbox.y_min = std::min(c.bbox.y_min, y);
      c.bbox.x_max = std::max(c.bbox.x_max, x + 1);
      c.bbox.y_max = std::max(c.bbox.y_max, y + 1);
      ++c.pixel_count;
    }
  }
  std::erase_if(acc, [&](const ComponentBox& c) { return c.pixel_count < min_area; });
  return acc;
}

std::vector<BBox> fit_bboxes(const ComponentLabels& labels, std::int64_t min_area) {
  std::vector<BBox> out;
  for (const auto& c : component_boxes(labels, min_area)) out.push_back(c.bbox);
  return out;
}

namespace {

int floor_div(std::int64_t a, std::int64_t b) { return static_cast<int>(a / b); }
int ceil_div(std::int64_t a, std::int64_t b) { return static_cast<int>((a + b - 1) / b); }

}  // namespace

std::vector<BBox> scale_boxes(std::span<const BBox> boxes, PageDims from, PageDims to) {
  if (from.width <= 0 || from.height <= 0 || to.width <= 0 || to.height <= 0) {
    throw InvalidInput("scale_boxes: dimensions must be positive");
  }
  std::vector<BBox> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) {
    BBox s{floor_div(std::int64_t{std::max(b.x_min, 0)} * to.width, from.width),
           floor_div(std::int64_t{std::max(b.y_min, 0)} * to.height, from.height),
           ceil_div(std::int64_t{std::max(b.x_max, 0)} * to.width, from.width),
           ceil_div(std::int64_t{std::max(b.y_max, 0)} * to.height, from.height)};
    s.x_max = std::min(s.x_max, to.width);
    s.y_max = std::min(s.y_max, to.height);
    if (!s.valid()) {
      throw InvalidInput("scale_boxes: box " + to_string(b) + " collapses to empty");
    }
    out.push_back(s);
  }
  return out;
}

BinaryMask invert(const BinaryMask& mask) {
  BinaryMask out(mask.width(), mask.height());
  std::transform(mask.pixels().begin(), mask.pixels().end(), out.pixels().begin(),
                 [](std::uint8_t v) -> std::uint8_t { return v ? 0 : 1; });
  return out;
}

std::vector<BBox> separators_to_blocks(const BinaryMask& sep_mask, std::int64_t min_area) {
  return fit_bboxes(connected_components(invert(sep_mask)), min_area);
}

ClassMap argmax_classmap(const ProbMap& prob) {
  if (prob.num_classes() > kNumClasses) {
    throw InvalidInput("argmax_classmap: at most 8 classes supported, got " +
                       std::to_string(prob.num_classes()));
  }
  if (auto bad = kernels::omp::first_nonfinite(prob)) {
    const std::size_t pixel = *bad / prob.num_classes();
    throw InvalidInput("argmax_classmap: non-finite probability at x=" +
                       std::to_string(pixel % prob.width()) +
                       " y=" + std::to_string(pixel / prob.width()) +
                       " class=" + std::to_string(*bad % prob.num_classes()));
  }
  return kernels::omp::argmax(prob);
}

BinaryMask class_mask(const ClassMap& cmap, LayoutClass cls) {
  return kernels::omp::class_mask(cmap, cls);
}

GrayMap channel_to_gray(const ProbMap& prob, int channel) {
  if (channel < 0 || channel >= prob.num_classes()) {
    throw InvalidInput("channel_to_gray: channel out of range");
  }
  GrayMap out(prob.width(), prob.height());
  for (int y = 0; y < prob.height(); ++y) {
    for (int x = 0; x < prob.width(); ++x) {
      const float p = std::clamp(prob.at(x, y, channel), 0.0f, 1.0f);
      out.at(x, y) = static_cast<std::uint8_t>(std::lround(p * 255.0f));
    }
  }
  return out;
}

}  // namespace layoutkit
