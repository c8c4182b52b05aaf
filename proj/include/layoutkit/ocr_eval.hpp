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

// End-to-end OCR scoring against plain-text ground truth: segment-to-interval
// matching, normalized edit distance, read-order accuracy and word recall.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace layoutkit {

struct TokenSeq {
  std::vector<std::string> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  const std::string& operator[](std::size_t i) const { return tokens[i]; }
  friend bool operator==(const TokenSeq&, const TokenSeq&) = default;
};

// Whitespace split, edge punctuation stripped, case folded, empties dropped.
TokenSeq tokenize(std::string_view text);

// Half-open token range [start, end).
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;

  bool intersects(const Interval& o) const noexcept { return start < o.end && o.start < end; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SegmentMatch {
  std::size_t segment_id = 0;
  std::optional<Interval> gt_interval;
  // Positional exact-match count inside the interval.
  std::size_t score = 0;

  friend bool operator==(const SegmentMatch&, const SegmentMatch&) = default;
};

// Best window of length |pred| in gt avoiding `blocked`; earliest start on
// ties. No interval when gt is too short or every window is blocked. Throws
// InvalidInput for an empty pred.
SegmentMatch match_interval(const TokenSeq& pred, const TokenSeq& gt,
                            std::span<const Interval> blocked = {});

// One-to-one greedy assignment: repeatedly give the segment with the highest
// unblocked score (lowest id on ties) its best window, then block it. Segments
// whose best score is 0 stay unmatched. Result is in segment order.
std::vector<SegmentMatch> map_segments(std::span<const TokenSeq> segments, const TokenSeq& gt);

std::size_t levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t levenshtein(const TokenSeq& a, const TokenSeq& b);

// Levenshtein over code points after whitespace collapsing, divided by the
// longer length. Both empty -> 0.
double edit_distance_norm(std::string_view pred, std::string_view gt);
double word_edit_distance_norm(const TokenSeq& pred, const TokenSeq& gt);

struct ReadOrder {
  double roa = 1.0;
  // Blocks out of order and matched blocks.
  std::size_t m = 0;
  std::size_t n = 0;
};

// m = n - LIS of the interval starts taken in predicted order over matched
// segments. Throws InvalidInput when nothing matched.
ReadOrder read_order_accuracy(std::span<const SegmentMatch> matches);

// sum_w min(count_pred(w), count_gt(w)) / |gt|. Throws InvalidInput on empty gt.
double word_recall(const TokenSeq& pred, const TokenSeq& gt);

enum class EditGranularity { character, word };

struct OcrOptions {
  EditGranularity edit = EditGranularity::character;
};

struct OcrReport {
  std::string page_id;
  double edit_distance = 0;
  // nullopt when no segment matched.
  std::optional<double> roa;
  double word_recall = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t segments = 0;
  std::vector<SegmentMatch> matches;

  friend bool operator==(const OcrReport&, const OcrReport&) = default;
};

// Segments are joined in the given (predicted) order. Throws InvalidInput on
// empty ground truth.
OcrReport evaluate_ocr(std::span<const std::string> segments, std::string_view gt,
                       const OcrOptions& options = {});

struct PageFailure {
  std::string page_id;
  std::string error;

  friend bool operator==(const PageFailure&, const PageFailure&) = default;
};

struct OcrCorpusReport {
  std::vector<OcrReport> pages;
  std::vector<PageFailure> failures;
  EditGranularity edit = EditGranularity::character;
  // Uniform per-page means; ROA over pages where it is defined.
  std::optional<double> mean_edit_distance, mean_roa, mean_word_recall;

  friend bool operator==(const OcrCorpusReport&, const OcrCorpusReport&) = default;
};

OcrCorpusReport aggregate_ocr(std::vector<OcrReport> pages, std::vector<PageFailure> failures,
                              EditGranularity edit = EditGranularity::character);

}  // namespace layoutkit
