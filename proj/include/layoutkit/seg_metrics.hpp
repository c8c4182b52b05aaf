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

// Pixel-wise layout segmentation scores: per-class IoU, accuracy, precision,
// recall and F-score, macro-averaged over classes.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "layoutkit/doc_model.hpp"
#include "layoutkit/kernels.hpp"

namespace layoutkit {

struct ClassCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct ConfusionCounts {
  std::array<ClassCounts, kNumClasses> per_class{};
  std::uint64_t total_pixels = 0;

  const ClassCounts& operator[](LayoutClass c) const { return per_class[code(c)]; }
  ConfusionCounts& operator+=(const ConfusionCounts& other);
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

ConfusionCounts counts_from_matrix(const kernels::ConfusionMatrix& m);

// Throws InvalidInput on a dimension mismatch.
ConfusionCounts confusion_matrix(const ClassMap& pred, const ClassMap& gt);

struct ClassScores {
  LayoutClass cls = LayoutClass::background;
  // False when TP+FP+FN = 0; the class then takes no part in the means.
  bool defined = false;
  double iou = 0;
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f_score = 0;
  ClassCounts counts;

  friend bool operator==(const ClassScores&, const ClassScores&) = default;
};

struct MetricOptions {
  bool exclude_background = false;
};

struct SegMetricsReport {
  // One row per class code 0..7.
  std::vector<ClassScores> per_class;
  std::vector<LayoutClass> evaluated;
  // nullopt when no class is defined.
  std::optional<double> miou, mac, mpr, mre, mfs;
  bool exclude_background = false;
  std::uint64_t total_pixels = 0;
  std::size_t pages = 0;

  friend bool operator==(const SegMetricsReport&, const SegMetricsReport&) = default;
};

SegMetricsReport class_metrics(const ConfusionCounts& counts, const MetricOptions& options = {});

struct NamedClassMap {
  std::string page_id;
  ClassMap map;
};

// Counts are summed over pages before scoring. Throws InvalidInput listing
// page ids without a counterpart.
SegMetricsReport evaluate_layout(std::span<const NamedClassMap> pred,
                                 std::span<const NamedClassMap> gt,
                                 const MetricOptions& options = {});

}  // namespace layoutkit
