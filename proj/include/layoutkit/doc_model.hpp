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

// Value types shared by every stage of the layout pipeline.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "layoutkit/errors.hpp"

namespace layoutkit {

enum class LayoutClass : std::uint8_t {
  background = 0,
  header = 1,
  article_title = 2,
  article_body = 3,
  advertisement = 4,
  image = 5,
  table = 6,
  other = 7,
};

inline constexpr int kNumClasses = 8;

constexpr int code(LayoutClass c) noexcept { return static_cast<int>(c); }

// Human-readable category name, e.g. "article body". Background is "background".
std::string_view class_name(LayoutClass c) noexcept;
std::optional<LayoutClass> class_from_name(std::string_view name) noexcept;
std::optional<LayoutClass> class_from_code(int code) noexcept;

// The seven annotated categories in code order (background excluded).
std::span<const LayoutClass> content_classes() noexcept;

struct PageDims {
  int width = 0;
  int height = 0;

  friend bool operator==(const PageDims&, const PageDims&) = default;
};

// Axis-aligned pixel rectangle, half-open: [x_min, x_max) x [y_min, y_max).
struct BBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  int width() const noexcept { return x_max - x_min; }
  int height() const noexcept { return y_max - y_min; }
  std::int64_t area() const noexcept {
    return valid() ? std::int64_t{width()} * height() : 0;
  }
  bool valid() const noexcept { return x_min < x_max && y_min < y_max; }
  bool contains(int x, int y) const noexcept {
    return x >= x_min && x < x_max && y >= y_min && y < y_max;
  }
  bool within(PageDims dims) const noexcept {
    return x_min >= 0 && y_min >= 0 && x_max <= dims.width && y_max <= dims.height;
  }

  friend auto operator<=>(const BBox&, const BBox&) = default;
};

// Throws InvalidInput when the rectangle is empty or has negative coordinates.
BBox make_bbox(int x_min, int y_min, int x_max, int y_max);

std::optional<BBox> intersect(const BBox& a, const BBox& b) noexcept;
std::int64_t overlap_area(const BBox& a, const BBox& b) noexcept;
// Tight cover of both boxes.
BBox bounding_union(const BBox& a, const BBox& b) noexcept;
std::optional<BBox> clamp_to(const BBox& b, PageDims dims) noexcept;
std::string to_string(const BBox& b);

struct Segment {
  BBox bbox;
  LayoutClass cls = LayoutClass::other;
  double score = 1.0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

void validate(const Segment& s);

// Dense row-major 2-D raster. Tag keeps mask kinds from mixing.
template <typename T, typename Tag>
class Grid {
 public:
  using value_type = T;

  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height) {
    if (width <= 0 || height <= 0) {
      throw InvalidInput("raster dimensions must be positive, got " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * height, fill);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  PageDims dims() const noexcept { return {width_, height_}; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  T& at(int x, int y) noexcept { return pixels_[index(x, y)]; }
  const T& at(int x, int y) const noexcept { return pixels_[index(x, y)]; }

  std::span<T> pixels() noexcept { return pixels_; }
  std::span<const T> pixels() const noexcept { return pixels_; }
  std::span<T> row(int y) noexcept { return std::span<T>(pixels_).subspan(index(0, y), width_); }
  std::span<const T> row(int y) const noexcept {
    return std::span<const T>(pixels_).subspan(index(0, y), width_);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> pixels_;
};

struct GrayTag {};
struct MaskTag {};
struct ClassTag {};

using GrayMap = Grid<std::uint8_t, GrayTag>;
// 0 = false, 1 = true.
using BinaryMask = Grid<std::uint8_t, MaskTag>;
using ClassMap = Grid<LayoutClass, ClassTag>;

// Per-pixel per-class probabilities, row-major with the class index fastest.
class ProbMap {
 public:
  ProbMap() = default;
  ProbMap(int width, int height, int num_classes, float fill = 0.0f);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int num_classes() const noexcept { return num_classes_; }
  PageDims dims() const noexcept { return {width_, height_}; }

  float& at(int x, int y, int c) noexcept { return values_[index(x, y, c)]; }
  float at(int x, int y, int c) const noexcept { return values_[index(x, y, c)]; }
  std::span<float> values() noexcept { return values_; }
  std::span<const float> values() const noexcept { return values_; }

  // Throws SchemaError naming the first non-finite or out-of-range value.
  void validate() const;

  friend bool operator==(const ProbMap&, const ProbMap&) = default;

 private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * num_classes_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int num_classes_ = 0;
  std::vector<float> values_;
};

// 8-bit page raster with 1 (gray) or 3 (RGB) interleaved channels.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h, int ch, std::uint8_t fill = 255);
  PageDims dims() const noexcept { return {width, height}; }
  std::uint8_t* px(int x, int y) noexcept {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * channels;
  }
  const std::uint8_t* px(int x, int y) const noexcept {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * channels;
  }

  friend bool operator==(const Image&, const Image&) = default;
};

Image to_image(const GrayMap& gray);

struct SuperBox {
  BBox bbox;
  std::vector<Segment> members;
  int order_index = 0;

  friend bool operator==(const SuperBox&, const SuperBox&) = default;
};

// Builds a super box whose bbox is the tight union of its members.
SuperBox make_super_box(std::vector<Segment> members, int order_index);

struct OrderedLayout {
  int page_width = 0;
  int page_height = 0;
  std::vector<SuperBox> boxes;

  PageDims dims() const noexcept { return {page_width, page_height}; }
  friend bool operator==(const OrderedLayout&, const OrderedLayout&) = default;
};

// Checks sorted, gap-free order indices and tight super-box covers.
void validate(const OrderedLayout& layout);

struct PageAnnotation {
  std::string page_id;
  int page_width = 0;
  int page_height = 0;
  std::vector<Segment> segments;

  PageDims dims() const noexcept { return {page_width, page_height}; }
  friend bool operator==(const PageAnnotation&, const PageAnnotation&) = default;
};

void validate(const PageAnnotation& page);

}  // namespace layoutkit
