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

#include "layoutkit/seg_metrics.hpp"

#include <map>

namespace layoutkit {

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& other) {
  for (int c = 0; c < kNumClasses; ++c) {
    per_class[c].tp += other.per_class[c].tp;
    per_class[c].fp += other.per_class[c].fp;
    per_class[c].fn += other.per_class[c].fn;
    per_class[c].tn += other.per_class[c].tn;
  }
  total_pixels += other.total_pixels;
  return *this;
}

ConfusionCounts counts_from_matrix(const kernels::ConfusionMatrix& m) {
  ConfusionCounts out;
  for (auto v : m) out.total_pixels += v;
  for (int c = 0; c < kNumClasses; ++c) {
    auto& k = out.per_class[c];
    k.tp = m[c * kNumClasses + c];
    for (int o = 0; o < kNumClasses; ++o) {
      if (o == c) continue;
      k.fn += m[c * kNumClasses + o];  // gt c, predicted o
      k.fp += m[o * kNumClasses + c];  // gt o, predicted c
    }
    k.tn = out.total_pixels - k.tp - k.fp - k.fn;
  }
  return out;
}

ConfusionCounts confusion_matrix(const ClassMap& pred, const ClassMap& gt) {
  if (pred.dims() != gt.dims()) {
    throw InvalidInput("confusion_matrix: prediction is " + std::to_string(pred.width()) + "x" +
                       std::to_string(pred.height()) + " but ground truth is " +
                       std::to_string(gt.width()) + "x" + std::to_string(gt.height()));
  }
  return counts_from_matrix(kernels::omp::confusion(pred, gt));
}

namespace {

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

SegMetricsReport class_metrics(const ConfusionCounts& counts, const MetricOptions& options) {
  SegMetricsReport r;
  r.exclude_background = options.exclude_background;
  r.total_pixels = counts.total_pixels;
  double s_iou = 0, s_acc = 0, s_pr = 0, s_re = 0, s_f = 0;
  for (int c = 0; c < kNumClasses; ++c) {
    const auto& k = counts.per_class[c];
    ClassScores s;
    s.cls = static_cast<LayoutClass>(c);
    s.counts = k;
    s.defined = k.tp + k.fp + k.fn > 0;
    if (s.defined) {
      s.iou = ratio(k.tp, k.tp + k.fp + k.fn);
      s.precision = ratio(k.tp, k.tp + k.fp);
      s.recall = ratio(k.tp, k.tp + k.fn);
      s.accuracy = ratio(k.tp + k.tn, counts.total_pixels);
      const double pr = s.precision + s.recall;
      s.f_score = pr > 0 ? 2 * s.precision * s.recall / pr : 0.0;
    }
    const bool counted = s.defined && !(options.exclude_background && c == 0);
    if (counted) {
      r.evaluated.push_back(s.cls);
      s_iou += s.iou;
      s_acc += s.accuracy;
      s_pr += s.precision;
      s_re += s.recall;
      s_f += s.f_score;
    }
    r.per_class.push_back(s);
  }
  if (!r.evaluated.empty()) {
    const double n = static_cast<double>(r.evaluated.size());
    r.miou = s_iou / n;
    r.mac = s_acc / n;
    r.mpr = s_pr / n;
    r.mre = s_re / n;
    r.mfs = s_f / n;
  }
  return r;
}

SegMetricsReport evaluate_layout(std::span<const NamedClassMap> pred,
                                 std::span<const NamedClassMap> gt,
                                 const MetricOptions& options) {
  std::map<std::string, const ClassMap*> gt_by_id;
  for (const auto& g : gt) gt_by_id[g.page_id] = &g.map;
  std::map<std::string, bool> seen;
  std::string missing;
  for (const auto& p : pred) {
    if (!gt_by_id.count(p.page_id)) missing += " pred:" + p.page_id;
    seen[p.page_id] = true;
  }
  for (const auto& g : gt) {
    if (!seen.count(g.page_id)) missing += " gt:" + g.page_id;
  }
  if (!missing.empty()) throw InvalidInput("evaluate_layout: pages without counterpart:" + missing);

  ConfusionCounts total;
  for (const auto& p : pred) {
    try {
      total += confusion_matrix(p.map, *gt_by_id.at(p.page_id));
    } catch (const InvalidInput& e) {
      throw InvalidInput("page '" + p.page_id + "': " + e.what());
    }
  }
  auto report = class_metrics(total, options);
  report.pages = pred.size();
  return report;
}

}  // namespace layoutkit
