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

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "layoutkit/kernels.hpp"

namespace layoutkit::kernels {

namespace {

#ifdef _OPENMP
const int kDefaultThreads = omp_get_max_threads();
#endif

// Horizontal pass of a separable square element. For erosion a pixel survives
// when its clipped row window holds no zero; for dilation when it holds a one.
BinaryMask row_pass(const BinaryMask& in, int radius, bool erosion) {
  const int w = in.width(), h = in.height();
  BinaryMask out(w, h);
#pragma omp parallel
  {
    std::vector<int> prefix(static_cast<std::size_t>(w) + 1);
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) {
      const auto row = in.row(y);
      prefix[0] = 0;
      for (int x = 0; x < w; ++x) {
        const bool counted = erosion ? row[x] == 0 : row[x] != 0;
        prefix[x + 1] = prefix[x] + (counted ? 1 : 0);
      }
      auto dst = out.row(y);
      for (int x = 0; x < w; ++x) {
        const int lo = std::max(0, x - radius), hi = std::min(w - 1, x + radius);
        const int n = prefix[hi + 1] - prefix[lo];
        dst[x] = erosion ? (n == 0) : (n > 0);
      }
    }
  }
  return out;
}

BinaryMask column_pass(const BinaryMask& in, int radius, bool erosion) {
  const int w = in.width(), h = in.height();
  BinaryMask out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const int lo = std::max(0, y - radius), hi = std::min(h - 1, y + radius);
    auto dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      bool v = erosion;
      for (int yy = lo; yy <= hi; ++yy) {
        const bool px = in.at(x, yy) != 0;
        if (erosion && !px) { v = false; break; }
        if (!erosion && px) { v = true; break; }
      }
      dst[x] = v ? 1 : 0;
    }
  }
  return out;
}

}  // namespace

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : kDefaultThreads);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace omp {

Histogram histogram(std::span<const std::uint8_t> values) {
  std::uint64_t h[256] = {};
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const std::uint8_t* v = values.data();
#pragma omp parallel for reduction(+ : h[:256]) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) ++h[v[i]];
  Histogram out;
  std::copy(std::begin(h), std::end(h), out.begin());
  return out;
}

BinaryMask threshold_mask(const GrayMap& gray, std::uint8_t threshold) {
  BinaryMask out(gray.width(), gray.height());
  const auto src = gray.pixels();
  auto dst = out.pixels();
  const std::int64_t n = static_cast<std::int64_t>(src.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) dst[i] = src[i] > threshold ? 1 : 0;
  return out;
}

BinaryMask erode(const BinaryMask& mask, int radius) {
  return column_pass(row_pass(mask, radius, true), radius, true);
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
  return column_pass(row_pass(mask, radius, false), radius, false);
}

std::optional<std::size_t> first_nonfinite(const ProbMap& prob) {
  const auto v = prob.values();
  const std::int64_t n = static_cast<std::int64_t>(v.size());
  std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    if (!std::isfinite(v[i]) && i < first) first = i;
  }
  if (first == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return static_cast<std::size_t>(first);
}

ClassMap argmax(const ProbMap& prob) {
  ClassMap out(prob.width(), prob.height());
  const int k = prob.num_classes();
  const float* v = prob.values().data();
  auto dst = out.pixels();
  const std::int64_t n = static_cast<std::int64_t>(dst.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const float* p = v + i * k;
    int best = 0;
    for (int c = 1; c < k; ++c) {
      if (p[c] > p[best]) best = c;
    }
    dst[i] = static_cast<LayoutClass>(best);
  }
  return out;
}

BinaryMask class_mask(const ClassMap& cmap, LayoutClass cls) {
  BinaryMask out(cmap.width(), cmap.height());
  const auto src = cmap.pixels();
  auto dst = out.pixels();
  const std::int64_t n = static_cast<std::int64_t>(src.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) dst[i] = src[i] == cls ? 1 : 0;
  return out;
}

ConfusionMatrix confusion(const ClassMap& pred, const ClassMap& gt) {
  constexpr int kCells = kNumClasses * kNumClasses;
  std::uint64_t m[kCells] = {};
  const auto p = pred.pixels();
  const auto g = gt.pixels();
  const std::int64_t n = static_cast<std::int64_t>(g.size());
#pragma omp parallel for reduction(+ : m[:kCells]) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) ++m[code(g[i]) * kNumClasses + code(p[i])];
  ConfusionMatrix out;
  std::copy(std::begin(m), std::end(m), out.begin());
  return out;
}

ClassMap rasterize(std::span<const Segment> segments, PageDims source, PageDims target) {
  ClassMap out(target.width, target.height);
  // Source column sampled by each target column; non-decreasing in x.
  std::vector<int> src_x(target.width);
  for (int x = 0; x < target.width; ++x) {
    src_x[x] = static_cast<int>((2LL * x + 1) * source.width / (2LL * target.width));
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (int y = 0; y < target.height; ++y) {
    const int sy = static_cast<int>((2LL * y + 1) * source.height / (2LL * target.height));
    auto dst = out.row(y);
    for (const auto& s : segments) {
      if (sy < s.bbox.y_min || sy >= s.bbox.y_max) continue;
      const auto lo = std::lower_bound(src_x.begin(), src_x.end(), s.bbox.x_min);
      const auto hi = std::lower_bound(lo, src_x.end(), s.bbox.x_max);
      std::fill(dst.begin() + (lo - src_x.begin()), dst.begin() + (hi - src_x.begin()), s.cls);
    }
  }
  return out;
}

std::vector<std::int32_t> window_scores(std::span<const std::int32_t> gt,
                                        std::span<const std::int32_t> pred) {
  if (pred.size() > gt.size()) return {};
  const std::int64_t windows = static_cast<std::int64_t>(gt.size() - pred.size() + 1);
  const std::size_t len = pred.size();
  std::vector<std::int32_t> scores(windows, 0);
#pragma omp parallel for schedule(static) if (windows * static_cast<std::int64_t>(len) > 4096)
  for (std::int64_t s = 0; s < windows; ++s) {
    std::int32_t hits = 0;
    for (std::size_t i = 0; i < len; ++i) hits += gt[s + i] == pred[i] ? 1 : 0;
    scores[s] = hits;
  }
  return scores;
}

}  // namespace omp
}  // namespace layoutkit::kernels
