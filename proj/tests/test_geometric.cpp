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

#include <cmath>
#include <random>

#include "doctest.h"
#include "layoutkit/geometric.hpp"
#include "oracles.hpp"

using namespace layoutkit;

namespace {

// Agglomerative reference: merge any two clusters closer than epsilon until
// nothing changes. Returns, per input value, (snapped value, cluster size).
std::vector<std::pair<int, int>> snap_reference(const std::vector<int>& v, int eps) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < v.size(); ++i) clusters.push_back({i});
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t a = 0; a < clusters.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < clusters.size() && !merged; ++b) {
        for (auto i : clusters[a]) {
          for (auto j : clusters[b]) {
            if (std::abs(v[i] - v[j]) <= eps) merged = true;
          }
        }
        if (merged) {
          clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
          clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
        }
      }
    }
  }
  std::vector<std::pair<int, int>> out(v.size());
  for (const auto& c : clusters) {
    double sum = 0;
    for (auto i : c) sum += v[i];
    const int centroid = static_cast<int>(std::floor(sum / static_cast<double>(c.size()) + 0.5));
    for (auto i : c) out[i] = {centroid, static_cast<int>(c.size())};
  }
  return out;
}

ClassMap classmap(int w, int h, std::initializer_list<std::pair<BBox, LayoutClass>> blocks) {
  ClassMap m(w, h);
  for (const auto& [b, c] : blocks) {
    for (int y = b.y_min; y < b.y_max; ++y)
      for (int x = b.x_min; x < b.x_max; ++x) m.at(x, y) = c;
  }
  return m;
}

}  // namespace

TEST_CASE("snap examples") {
  const std::vector<BBox> one{{3, 4, 50, 60}};
  CHECK(cluster_snap_boxes(one, 10) == one);

  const std::vector<BBox> ab{{0, 0, 100, 50}, {104, 0, 200, 50}};
  CHECK(cluster_snap_boxes(ab, 10) == std::vector<BBox>{{0, 0, 102, 50}, {102, 0, 200, 50}});

  const std::vector<BBox> far{{0, 0, 104, 50}, {200, 0, 300, 50}};
  CHECK(cluster_snap_boxes(far, 10) == far);

  CHECK(cluster_snap_boxes(std::vector<BBox>{}, 5).empty());
  CHECK_THROWS_AS(cluster_snap_boxes(ab, -1), InvalidInput);
  // A box thinner than epsilon has both edges in one cluster.
  CHECK_THROWS_AS(cluster_snap_boxes(std::vector<BBox>{{10, 0, 14, 50}}, 5), InvalidInput);
}

TEST_CASE("snap matches the agglomerative reference") {
  std::mt19937_64 rng(201);
  int checked = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const int eps = static_cast<int>(oracle::uniform(rng, 15));
    std::vector<BBox> boxes;
    const int n = 1 + static_cast<int>(oracle::uniform(rng, 8));
    for (int i = 0; i < n; ++i) boxes.push_back(oracle::random_box(rng, 300, 120));
    std::vector<int> xs, ys;
    for (const auto& b : boxes) {
      xs.insert(xs.end(), {b.x_min, b.x_max});
      ys.insert(ys.end(), {b.y_min, b.y_max});
    }
    const auto rx = snap_reference(xs, eps), ry = snap_reference(ys, eps);
    bool collapses = false;
    for (int i = 0; i < n; ++i) {
      collapses |= rx[2 * i].first >= rx[2 * i + 1].first || ry[2 * i].first >= ry[2 * i + 1].first;
    }
    if (collapses) {
      CHECK_THROWS_AS(cluster_snap_boxes(boxes, eps), InvalidInput);
      continue;
    }
    const auto got = cluster_snap_boxes(boxes, eps);
    ++checked;
    for (int i = 0; i < n; ++i) {
      CHECK(got[i] == BBox{rx[2 * i].first, ry[2 * i].first, rx[2 * i + 1].first, ry[2 * i + 1].first});
      // Chain bound on the displacement of every edge.
      CHECK(std::abs(got[i].x_min - boxes[i].x_min) <= eps * (rx[2 * i].second - 1));
      CHECK(std::abs(got[i].y_max - boxes[i].y_max) <= eps * (ry[2 * i + 1].second - 1));
    }
    CHECK(cluster_snap_boxes(got, eps) == got);
  }
  CHECK(checked > 200);
}

TEST_CASE("one block survives the pipeline exactly") {
  const auto m = classmap(100, 100, {{{30, 30, 70, 70}, LayoutClass::article_body}});
  const auto segs = geometric_pipeline(m, {100, 100}, GeometricParams{});
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].cls == LayoutClass::article_body);
  CHECK(segs[0].bbox == BBox{30, 30, 70, 70});
  CHECK(segs[0].score == 1.0);
}

TEST_CASE("all-background map gives nothing") {
  CHECK(geometric_pipeline(ClassMap(64, 64), {128, 128}, GeometricParams{}).empty());
}

TEST_CASE("upscaled column gap is closed by snapping") {
  // Columns 4 px apart at map scale become 8 px apart at 2x.
  const auto m = classmap(100, 100, {{{10, 10, 48, 90}, LayoutClass::article_body},
                                     {{52, 10, 90, 90}, LayoutClass::article_body}});
  GeometricParams p;
  p.cluster_epsilon = 8;
  const auto raw = extract_segments(m, {200, 200}, p);
  REQUIRE(raw.size() == 2);
  CHECK(raw[0].bbox == BBox{20, 20, 96, 180});
  CHECK(raw[1].bbox == BBox{104, 20, 180, 180});
  const auto segs = geometric_pipeline(m, {200, 200}, p);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].bbox.x_max == 100);
  CHECK(segs[1].bbox.x_min == 100);
}

TEST_CASE("classes are extracted separately and labelled") {
  const auto m = classmap(80, 80, {{{0, 0, 40, 30}, LayoutClass::article_title},
                                   {{0, 30, 40, 80}, LayoutClass::article_body},
                                   {{50, 0, 80, 80}, LayoutClass::advertisement}});
  const auto segs = extract_segments(m, {80, 80}, GeometricParams{});
  REQUIRE(segs.size() == 3);
  // Content classes in code order.
  CHECK(segs[0].cls == LayoutClass::article_title);
  CHECK(segs[0].bbox == BBox{0, 0, 40, 30});
  CHECK(segs[1].cls == LayoutClass::article_body);
  CHECK(segs[1].bbox == BBox{0, 30, 40, 80});
  CHECK(segs[2].cls == LayoutClass::advertisement);
}

TEST_CASE("same-class boxes from disjoint blocks do not overlap before snapping") {
  std::mt19937_64 rng(202);
  for (int iter = 0; iter < 30; ++iter) {
    // One random rectangle per 16x16 cell, never touching its neighbours.
    ClassMap m(64, 64);
    for (int cy = 0; cy < 4; ++cy) {
      for (int cx = 0; cx < 4; ++cx) {
        if (oracle::uniform(rng, 3) == 0) continue;
        const int x0 = cx * 16 + 1 + static_cast<int>(oracle::uniform(rng, 4));
        const int y0 = cy * 16 + 1 + static_cast<int>(oracle::uniform(rng, 4));
        const int x1 = x0 + 3 + static_cast<int>(oracle::uniform(rng, 16 * (cx + 1) - x0 - 3));
        const int y1 = y0 + 3 + static_cast<int>(oracle::uniform(rng, 16 * (cy + 1) - y0 - 3));
        const auto cls = static_cast<LayoutClass>(1 + oracle::uniform(rng, 3));
        for (int y = y0; y < y1; ++y)
          for (int x = x0; x < x1; ++x) m.at(x, y) = cls;
      }
    }
    GeometricParams p;
    p.min_area = 4;
    const auto segs = extract_segments(m, {64, 64}, p);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (segs[i].cls == segs[j].cls) CHECK(overlap_area(segs[i].bbox, segs[j].bbox) == 0);
      }
    }
  }
}

TEST_CASE("probability map input") {
  ProbMap p(60, 60, 2);
  for (int y = 0; y < 60; ++y) {
    for (int x = 0; x < 60; ++x) {
      const bool fg = x >= 10 && x < 40 && y >= 20 && y < 50;
      p.at(x, y, 0) = fg ? 0.1f : 0.8f;
      p.at(x, y, 1) = fg ? 0.9f : 0.2f;
    }
  }
  const auto segs = geometric_pipeline(p, {120, 120}, GeometricParams{});
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].cls == LayoutClass::article_body);
  CHECK(segs[0].bbox == BBox{20, 40, 80, 100});
  CHECK(segs[0].score == doctest::Approx(0.9).epsilon(1e-6));

  const auto as_table = extract_segments(p, {60, 60}, GeometricParams{}, LayoutClass::table);
  REQUIRE(as_table.size() == 1);
  CHECK(as_table[0].cls == LayoutClass::table);

  // A flat channel has no Otsu split and yields nothing.
  CHECK(extract_segments(ProbMap(10, 10, 3, 0.5f), {10, 10}, GeometricParams{}).empty());
  CHECK_THROWS_AS(extract_segments(ProbMap(10, 10, 1), {10, 10}, GeometricParams{}), InvalidInput);
}

TEST_CASE("multi-channel probability maps use channel k as class k") {
  ProbMap p(40, 40, 6);
  for (int y = 0; y < 40; ++y) {
    for (int x = 0; x < 40; ++x) p.at(x, y, 5) = (x < 20 && y < 20) ? 1.0f : 0.0f;
  }
  const auto segs = extract_segments(p, {40, 40}, GeometricParams{});
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].cls == LayoutClass::image);
  CHECK(segs[0].bbox == BBox{0, 0, 20, 20});
}

TEST_CASE("parameters must be positive") {
  GeometricParams p;
  CHECK_NOTHROW(p.validate());
  p.open_radius = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p = {};
  p.cluster_epsilon = 0;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p = {};
  p.min_area = -1;
  CHECK_THROWS_AS(extract_segments(ClassMap(4, 4), {4, 4}, p), InvalidInput);
}
