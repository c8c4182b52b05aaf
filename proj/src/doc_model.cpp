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

#include "layoutkit/doc_model.hpp"

#include <algorithm>
#include <cmath>

namespace layoutkit {

namespace {

constexpr std::array<std::string_view, kNumClasses> kNames = {
    "background", "header", "article title", "article body",
    "advertisement", "image", "table", "other",
};

constexpr std::array<LayoutClass, 7> kContent = {
    LayoutClass::header,        LayoutClass::article_title, LayoutClass::article_body,
    LayoutClass::advertisement, LayoutClass::image,         LayoutClass::table,
    LayoutClass::other,
};

}  // namespace

std::string_view class_name(LayoutClass c) noexcept {
  const int i = code(c);
  return (i >= 0 && i < kNumClasses) ? kNames[i] : std::string_view{"invalid"};
}

std::optional<LayoutClass> class_from_name(std::string_view name) noexcept {
  for (int i = 0; i < kNumClasses; ++i) {
    if (kNames[i] == name) return static_cast<LayoutClass>(i);
  }
  return std::nullopt;
}

std::optional<LayoutClass> class_from_code(int c) noexcept {
  if (c < 0 || c >= kNumClasses) return std::nullopt;
  return static_cast<LayoutClass>(c);
}

std::span<const LayoutClass> content_classes() noexcept { return kContent; }

BBox make_bbox(int x_min, int y_min, int x_max, int y_max) {
  BBox b{x_min, y_min, x_max, y_max};
  if (!b.valid() || x_min < 0 || y_min < 0) {
    throw InvalidInput("invalid box " + to_string(b));
  }
  return b;
}

std::optional<BBox> intersect(const BBox& a, const BBox& b) noexcept {
  BBox r{std::max(a.x_min, b.x_min), std::max(a.y_min, b.y_min),
         std::min(a.x_max, b.x_max), std::min(a.y_max, b.y_max)};
  if (!r.valid()) return std::nullopt;
  return r;
}

std::int64_t overlap_area(const BBox& a, const BBox& b) noexcept {
  auto r = intersect(a, b);
  return r ? r->area() : 0;
}

BBox bounding_union(const BBox& a, const BBox& b) noexcept {
  return {std::min(a.x_min, b.x_min), std::min(a.y_min, b.y_min),
          std::max(a.x_max, b.x_max), std::max(a.y_max, b.y_max)};
}

std::optional<BBox> clamp_to(const BBox& b, PageDims dims) noexcept {
  return intersect(b, BBox{0, 0, dims.width, dims.height});
}

std::string to_string(const BBox& b) {
  return "(" + std::to_string(b.x_min) + "," + std::to_string(b.y_min) + "," +
         std::to_string(b.x_max) + "," + std::to_string(b.y_max) + ")";
}

void validate(const Segment& s) {
  if (!s.bbox.valid() || s.bbox.x_min < 0 || s.bbox.y_min < 0) {
    throw InvalidInput("segment has invalid box " + to_string(s.bbox));
  }
  if (!class_from_code(code(s.cls)) || s.cls == LayoutClass::background) {
    throw InvalidInput("segment class must be a content class");
  }
  if (!(s.score >= 0.0 && s.score <= 1.0)) {
    throw InvalidInput("segment score outside [0,1]");
  }
}

ProbMap::ProbMap(int width, int height, int num_classes, float fill)
    : width_(width), height_(height), num_classes_(num_classes) {
  if (width <= 0 || height <= 0 || num_classes <= 0) {
    throw InvalidInput("probability map dimensions must be positive");
  }
  values_.assign(static_cast<std::size_t>(width) * height * num_classes, fill);
}

void ProbMap::validate() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const float v = values_[i];
    if (!std::isfinite(v) || v < 0.0f || v > 1.0f) {
      const std::size_t pixel = i / num_classes_;
      throw SchemaError("probability out of range at x=" + std::to_string(pixel % width_) +
                        " y=" + std::to_string(pixel / width_) +
                        " class=" + std::to_string(i % num_classes_));
    }
  }
}

Image::Image(int w, int h, int ch, std::uint8_t fill) : width(w), height(h), channels(ch) {
  if (w <= 0 || h <= 0 || (ch != 1 && ch != 3)) {
    throw InvalidInput("image must be non-empty with 1 or 3 channels");
  }
  pixels.assign(static_cast<std::size_t>(w) * h * ch, fill);
}

Image to_image(const GrayMap& gray) {
  Image img(gray.width(), gray.height(), 1);
  std::copy(gray.pixels().begin(), gray.pixels().end(), img.pixels.begin());
  return img;
}

SuperBox make_super_box(std::vector<Segment> members, int order_index) {
  if (members.empty()) throw InvalidInput("super box needs at least one member");
  BBox cover = members.front().bbox;
  for (const auto& m : members) cover = bounding_union(cover, m.bbox);
  return SuperBox{cover, std::move(members), order_index};
}

void validate(const OrderedLayout& layout) {
  if (layout.page_width <= 0 || layout.page_height <= 0) {
    throw SchemaError("layout page dimensions must be positive");
  }
  for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
    const auto& box = layout.boxes[i];
    if (box.order_index != static_cast<int>(i)) {
      throw SchemaError("layout order indices must be 0..n-1 in sequence");
    }
    if (box.members.empty()) throw SchemaError("super box without members");
    BBox cover = box.members.front().bbox;
    for (const auto& m : box.members) {
      try {
        validate(m);
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
      }
      cover = bounding_union(cover, m.bbox);
    }
    if (cover != box.bbox) {
      throw SchemaError("super box " + to_string(box.bbox) + " is not the tight union of its members");
    }
  }
}

void validate(const PageAnnotation& page) {
  if (page.page_width <= 0 || page.page_height <= 0) {
    throw SchemaError("page '" + page.page_id + "' has non-positive dimensions");
  }
  for (const auto& s : page.segments) {
    try {
      validate(s);
    } catch (const InvalidInput& e) {
      throw SchemaError("page '" + page.page_id + "': " + e.what());
    }
    if (!s.bbox.within(page.dims())) {
      throw SchemaError("page '" + page.page_id + "': box " + to_string(s.bbox) +
                        " outside page " + std::to_string(page.page_width) + "x" +
                        std::to_string(page.page_height));
    }
  }
}

}  // namespace layoutkit
