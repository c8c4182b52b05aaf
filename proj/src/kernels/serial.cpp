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

// Reference kernels. Written for obviousness, not speed.

#include <algorithm>
#include <cmath>

#include "layoutkit/kernels.hpp"

namespace layoutkit::kernels::serial {

Histogram histogram(std::span<const std::uint8_t> values) {
  Histogram h{};
  for (std::uint8_t v : values) ++h[v];
  return h;
}

BinaryMask threshold_mask(const GrayMap& gray, std::uint8_t threshold) {
  BinaryMask out(gray.width(), gray.height());
  for (int y = 0; y < gray.height(); ++y)
    for (int x = 0; x < gray.width(); ++x) out.at(x, y) = gray.at(x, y) > threshold ? 1 : 0;
  return out;
}

BinaryMask erode(const BinaryMask& mask, int radius) {
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool all = true;
      for (int dy = -radius; dy <= radius && all; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
          const int xx = x + dx, yy = y + dy;
          if (xx < 0 || yy < 0 || xx >= mask.width() || yy >= mask.height()) continue;
          if (!mask.at(xx, yy)) {
            all = false;
            break;
          }
        }
      }
      out.at(x, y) = all ? 1 : 0;
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
  BinaryMask out(mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      bool any = false;
      for (int dy = -radius; dy <= radius && !any; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
          const int xx = x + dx, yy = y + dy;
          if (xx < 0 || yy < 0 || xx >= mask.width() || yy >= mask.height()) continue;
          if (mask.at(xx, yy)) {
            any = true;
            break;
          }
        }
      }
      out.at(x, y) = any ? 1 : 0;
    }
  }
  return out;
}

std::optional<std::size_t> first_nonfinite(const ProbMap& prob) {
  const auto v = prob.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) return i;
  }
  return std::nullopt;
}

ClassMap argmax(const ProbMap& prob) {
  ClassMap out(prob.width(), prob.height());
  for (int y = 0; y < prob.height(); ++y) {
    for (int x = 0; x < prob.width(); ++x) {
      int best = 0;
      for (int c = 1; c < prob.num_classes(); ++c) {
        if (prob.at(x, y, c) > prob.at(x, y, best)) best = c;
      }
      out.at(x, y) = static_cast<LayoutClass>(best);
    }
  }
  return out;
}

BinaryMask class_mask(const ClassMap& cmap, LayoutClass cls) {
  BinaryMask out(cmap.width(), cmap.height());
  for (int y = 0; y < cmap.height(); ++y)
    for (int x = 0; x < cmap.width(); ++x) out.at(x, y) = cmap.at(x, y) == cls ? 1 : 0;
  return out;
}

ConfusionMatrix confusion(const ClassMap& pred, const ClassMap& gt) {
  ConfusionMatrix m{};
  for (int y = 0; y < gt.height(); ++y)
    for (int x = 0; x < gt.width(); ++x)
      ++m[code(gt.at(x, y)) * kNumClasses + code(pred.at(x, y))];
  return m;
}

ClassMap rasterize(std::span<const Segment> segments, PageDims source, PageDims target) {
  ClassMap out(target.width, target.height);
  for (int y = 0; y < target.height; ++y) {
    const int sy = static_cast<int>((2LL * y + 1) * source.height / (2LL * target.height));
    for (int x = 0; x < target.width; ++x) {
      const int sx = static_cast<int>((2LL * x + 1) * source.width / (2LL * target.width));
      LayoutClass c = LayoutClass::background;
      for (const auto& s : segments) {
        if (s.bbox.contains(sx, sy)) c = s.cls;
      }
      out.at(x, y) = c;
    }
  }
  return out;
}

std::vector<std::int32_t> window_scores(std::span<const std::int32_t> gt,
                                        std::span<const std::int32_t> pred) {
  if (pred.size() > gt.size()) return {};
  std::vector<std::int32_t> scores(gt.size() - pred.size() + 1, 0);
  for (std::size_t s = 0; s < scores.size(); ++s) {
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (gt[s + i] == pred[i]) ++scores[s];
    }
  }
  return scores;
}

}  // namespace layoutkit::kernels::serial
