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

#include "layoutkit/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

namespace layoutkit {

void HeuristicParams::validate() const {
  if (x_align_tolerance < 0) throw InvalidInput("x_align_tolerance must be >= 0");
  if (!(column_overlap_ratio >= 0.0 && column_overlap_ratio <= 1.0)) {
    throw InvalidInput("column_overlap_ratio must lie in [0,1]");
  }
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

bool segment_less(const Segment& a, const Segment& b) {
  return std::tie(a.bbox, a.cls, a.score) < std::tie(b.bbox, b.cls, b.score);
}

// Total order on super boxes used inside a column.
bool box_less(const SuperBox& a, const SuperBox& b) {
  const auto ka = std::tie(a.bbox.y_min, a.bbox.x_min, a.bbox.y_max, a.bbox.x_max);
  const auto kb = std::tie(b.bbox.y_min, b.bbox.x_min, b.bbox.y_max, b.bbox.x_max);
  if (ka != kb) return ka < kb;
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                      b.members.end(), segment_less);
}

bool share_column(const BBox& a, const BBox& b, double ratio) {
  const int overlap = std::max(0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
  return overlap >= ratio * std::min(a.width(), b.width());
}

}  // namespace

std::vector<SuperBox> merge_vertical(std::span<const Segment> segments,
                                     const HeuristicParams& params) {
  params.validate();
  const std::size_t n = segments.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = segments[i].bbox;
      const auto& b = segments[j].bbox;
      if (std::abs(a.x_min - b.x_min) <= params.x_align_tolerance &&
          std::abs(a.x_max - b.x_max) <= params.x_align_tolerance) {
        sets.unite(i, j);
      }
    }
  }
  // Roots are the smallest index of each group, so map order = first-member order.
  std::map<std::size_t, std::vector<Segment>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[sets.find(i)].push_back(segments[i]);
  std::vector<SuperBox> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) {
    out.push_back(make_super_box(std::move(members), static_cast<int>(out.size())));
  }
  return out;
}

OrderedLayout order_reading(std::vector<SuperBox> boxes, PageDims page,
                            const HeuristicParams& params) {
  params.validate();
  if (boxes.empty()) throw InvalidInput("order_reading: no boxes to order");
  if (page.width <= 0 || page.height <= 0) throw InvalidInput("order_reading: bad page dims");

  const std::size_t n = boxes.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (share_column(boxes[i].bbox, boxes[j].bbox, params.column_overlap_ratio)) sets.unite(i, j);

  std::map<std::size_t, std::vector<SuperBox>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[sets.find(i)].push_back(std::move(boxes[i]));

  std::vector<std::vector<SuperBox>> columns;
  for (auto& [root, col] : by_root) {
    std::sort(col.begin(), col.end(), box_less);
    columns.push_back(std::move(col));
  }
  auto left_edge = [](const std::vector<SuperBox>& col) {
    int x = col.front().bbox.x_min;
    for (const auto& b : col) x = std::min(x, b.bbox.x_min);
    return x;
  };
  std::sort(columns.begin(), columns.end(), [&](const auto& a, const auto& b) {
    const int la = left_edge(a), lb = left_edge(b);
    if (la != lb) return la < lb;
    return box_less(a.front(), b.front());
  });

  OrderedLayout layout{page.width, page.height, {}};
  layout.boxes.reserve(n);
  for (auto& col : columns) {
    for (auto& b : col) {
      b.order_index = static_cast<int>(layout.boxes.size());
      layout.boxes.push_back(std::move(b));
    }
  }
  return layout;
}

OrderedLayout heuristic_pipeline(std::span<const Segment> segments, PageDims page,
                                 const HeuristicParams& params) {
  if (segments.empty()) throw InvalidInput("heuristic_pipeline: no segments");
  return order_reading(merge_vertical(segments, params), page, params);
}

std::vector<SuperBox> singleton_boxes(std::span<const Segment> segments) {
  std::vector<SuperBox> out;
  out.reserve(segments.size());
  for (const auto& s : segments) out.push_back(make_super_box({s}, static_cast<int>(out.size())));
  return out;
}

}  // namespace layoutkit
