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

// File codecs and dataset utilities.
//
//   annotations  COCO-style JSON (images / categories / annotations with
//                [x, y, width, height] boxes), converted to half-open corners
//   class maps   paletted 8-bit PNG, see png_io.hpp
//   prob maps    "LPM1" little-endian binary: magic, u32 width, height,
//                num_classes, then row-major per-pixel per-class f32
//   layouts, atlases, page texts, reports
//                JSON documents carrying "format_version" and "kind"

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "layoutkit/doc_model.hpp"
#include "layoutkit/ocr_engine.hpp"
#include "layoutkit/ocr_eval.hpp"
#include "layoutkit/seg_metrics.hpp"

namespace layoutkit {

inline constexpr int kFormatVersion = 1;

struct AnnotationFile {
  std::vector<PageAnnotation> pages;
  // page_id -> split label ("train" / "test") when the file provides one.
  std::map<std::string, std::string> splits;

  friend bool operator==(const AnnotationFile&, const AnnotationFile&) = default;
};

AnnotationFile parse_annotations(std::string_view json_text, const std::string& source = "<memory>");
AnnotationFile load_annotations(const std::filesystem::path& path);
std::string dump_annotations(const AnnotationFile& ann);
void save_annotations(const std::filesystem::path& path, const AnnotationFile& ann);

// Background except inside boxes; later boxes win on overlap. When `dims`
// differ from the page size the result is nearest-neighbour resampled.
ClassMap rasterize_annotations(const PageAnnotation& page, PageDims dims);

struct CategoryCount {
  LayoutClass cls = LayoutClass::other;
  std::uint64_t train = 0;
  std::uint64_t test = 0;
  std::uint64_t total() const noexcept { return train + test; }
};

struct DatasetStats {
  // Seven rows in the order image, article title, article body,
  // advertisement, table, header, other.
  std::vector<CategoryCount> rows;
  std::uint64_t train_total = 0;
  std::uint64_t test_total = 0;
  std::uint64_t total() const noexcept { return train_total + test_total; }
  const CategoryCount& row(LayoutClass c) const;
};

// Split per page: `split_labels`, then the file's own labels, then
// `default_split`. Labels other than train/test are an InvalidInput.
DatasetStats summarize_dataset(const AnnotationFile& ann,
                               const std::map<std::string, std::string>& split_labels = {},
                               const std::string& default_split = "train");
std::string format_stats_table(const DatasetStats& stats);
nlohmann::json stats_to_json(const DatasetStats& stats);

std::vector<std::uint8_t> encode_probmap(const ProbMap& prob);
ProbMap decode_probmap(std::span<const std::uint8_t> bytes, const std::string& source = "<memory>");
void save_probmap(const std::filesystem::path& path, const ProbMap& prob);
ProbMap load_probmap(const std::filesystem::path& path);

nlohmann::json layout_to_json(const OrderedLayout& layout);
OrderedLayout layout_from_json(const nlohmann::json& j);
void save_layout(const std::filesystem::path& path, const OrderedLayout& layout);
OrderedLayout load_layout(const std::filesystem::path& path);

nlohmann::json atlas_to_json(const MockAtlas& atlas);
MockAtlas atlas_from_json(const nlohmann::json& j);
void save_atlas(const std::filesystem::path& path, const MockAtlas& atlas);
MockAtlas load_atlas(const std::filesystem::path& path);

nlohmann::json page_text_to_json(const PageText& page);
PageText page_text_from_json(const nlohmann::json& j);

nlohmann::json seg_report_to_json(const SegMetricsReport& report);
SegMetricsReport seg_report_from_json(const nlohmann::json& j);

nlohmann::json ocr_report_to_json(const OcrCorpusReport& report);
OcrCorpusReport ocr_report_from_json(const nlohmann::json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace layoutkit
