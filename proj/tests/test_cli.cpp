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
#include <filesystem>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "layoutkit/dataset_io.hpp"
#include "layoutkit/png_io.hpp"
#include "tempdir.hpp"

using namespace layoutkit;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int lk(std::vector<std::string> args) {
  args.insert(args.begin(), "layoutkit");
  return cli::run(args);
}

std::string s(const fs::path& p) { return p.string(); }

// Synthetic corpus of `pages` two-column pages under dir/corpus.
fs::path make_corpus(const testutil::TempDir& dir, int pages) {
  const auto out = dir / "corpus";
  REQUIRE(lk({"synth", "--output", s(out), "--pages", std::to_string(pages), "--seed", "11",
              "--page-width", "400", "--page-height", "500"}) == 0);
  return out;
}

std::vector<std::string> dir_listing(const fs::path& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("synth writes a complete corpus") {
  testutil::TempDir dir("cli-synth");
  const auto corpus = make_corpus(dir, 3);
  CHECK(dir_listing(corpus / "images") == std::vector<std::string>{"page_0000.png", "page_0001.png", "page_0002.png"});
  CHECK(dir_listing(corpus / "gt").size() == 3);
  CHECK(dir_listing(corpus / "atlas").size() == 3);
  CHECK(dir_listing(corpus / "classmaps").size() == 3);
  CHECK(load_annotations(corpus / "annotations.json").pages.size() == 3);
}

TEST_CASE("postprocess, ocr and ocr-eval end to end") {
  testutil::TempDir dir("cli-e2e");
  const auto corpus = make_corpus(dir, 3);
  REQUIRE(lk({"postprocess", "--input", s(corpus / "classmaps"), "--images", s(corpus / "images"),
              "--output", s(dir / "layouts"), "--overlay"}) == 0);
  CHECK(dir_listing(dir / "layouts").size() == 6);
  const auto layout = load_layout(dir / "layouts" / "page_0001.json");
  // Two blocks per column merge: one super box per column, left first.
  REQUIRE(layout.boxes.size() == 2);
  CHECK(layout.boxes[0].members.size() == 2);
  CHECK(layout.boxes[0].bbox.x_min < layout.boxes[1].bbox.x_min);

  REQUIRE(lk({"ocr", "--images", s(corpus / "images"), "--layouts", s(dir / "layouts"), "--engine", "mock",
              "--atlas", s(corpus / "atlas"), "--output", s(dir / "text")}) == 0);
  const auto page = page_text_from_json(read_json_file(dir / "text" / "page_0000.json"));
  CHECK(page.entries.size() == 2);
  CHECK(fs::exists(dir / "text" / "page_0000.txt"));

  REQUIRE(lk({"ocr-eval", "--pred", s(dir / "text"), "--gt", s(corpus / "gt"), "--output", s(dir / "ocr.json")}) == 0);
  const auto report = ocr_report_from_json(read_json_file(dir / "ocr.json"));
  CHECK(report.pages.size() == 3);
  CHECK(report.failures.empty());
  CHECK(*report.mean_edit_distance == 0.0);
  CHECK(*report.mean_roa == 1.0);
  CHECK(*report.mean_word_recall == 1.0);

  REQUIRE(lk({"layout-eval", "--pred", s(corpus / "classmaps"), "--gt", s(corpus / "classmaps"), "--output",
              s(dir / "seg.json")}) == 0);
  const auto seg = seg_report_from_json(read_json_file(dir / "seg.json"));
  CHECK(*seg.miou == 1.0);
  CHECK(*seg.mfs == 1.0);
  CHECK(seg.pages == 3);

  REQUIRE(lk({"layout-eval", "--pred", s(corpus / "classmaps"), "--annotations", s(corpus / "annotations.json"),
              "--output", s(dir / "seg2.json"), "--exclude-background"}) == 0);
  const auto seg2 = seg_report_from_json(read_json_file(dir / "seg2.json"));
  CHECK(*seg2.miou == 1.0);
  CHECK(seg2.exclude_background);
}

TEST_CASE("baseline OCR makes one engine call per page") {
  testutil::TempDir dir("cli-base");
  const auto corpus = make_corpus(dir, 2);
  REQUIRE(lk({"ocr", "--baseline", "--images", s(corpus / "images"), "--engine", "mock", "--atlas",
              s(corpus / "atlas"), "--output", s(dir / "text")}) == 0);
  for (const char* id : {"page_0000", "page_0001"}) {
    const auto page = page_text_from_json(read_json_file(dir / "text" / (std::string(id) + ".json")));
    CHECK(page.entries.size() == 1);
  }
  REQUIRE(lk({"ocr-eval", "--pred", s(dir / "text"), "--gt", s(corpus / "gt"), "--output", s(dir / "ocr.json")}) == 0);
  const auto report = ocr_report_from_json(read_json_file(dir / "ocr.json"));
  CHECK(*report.mean_word_recall == 1.0);
}

TEST_CASE("per-page failures give a partial-failure exit") {
  testutil::TempDir dir("cli-fail");
  const auto corpus = make_corpus(dir, 3);
  write_text_file(corpus / "classmaps" / "page_0001.png", "not a png");
  CHECK(lk({"postprocess", "--input", s(corpus / "classmaps"), "--output", s(dir / "layouts")}) == 1);
  CHECK(dir_listing(dir / "layouts") == std::vector<std::string>{"page_0000.json", "page_0002.json"});

  // page_0001 has no layout.
  CHECK(lk({"ocr", "--images", s(corpus / "images"), "--layouts", s(dir / "layouts"), "--engine", "mock",
            "--atlas", s(corpus / "atlas"), "--output", s(dir / "text")}) == 1);
  CHECK(fs::exists(dir / "text" / "page_0000.json"));
  CHECK_FALSE(fs::exists(dir / "text" / "page_0001.json"));

  // The evaluator records the missing page and an empty reference.
  write_text_file(corpus / "gt" / "page_0002.txt", " \n");
  CHECK(lk({"ocr-eval", "--pred", s(dir / "text"), "--gt", s(corpus / "gt"), "--output", s(dir / "ocr.json")}) == 1);
  const auto report = ocr_report_from_json(read_json_file(dir / "ocr.json"));
  CHECK(report.pages.size() == 1);
  CHECK(report.failures.size() == 2);
}

TEST_CASE("separator masks become blocks") {
  testutil::TempDir dir("cli-sep");
  fs::create_directories(dir / "masks");
  BinaryMask m(100, 80);
  for (int x = 0; x < 100; ++x) m.at(x, 40) = 1;
  for (int y = 0; y < 80; ++y) m.at(50, y) = 1;
  save_mask_png(dir / "masks" / "p.png", m);
  REQUIRE(lk({"postprocess", "--method", "separators", "--input", s(dir / "masks"), "--output",
              s(dir / "layouts"), "--page-width", "200", "--page-height", "160"}) == 0);
  const auto layout = load_layout(dir / "layouts" / "p.json");
  CHECK(layout.dims() == PageDims{200, 160});
  REQUIRE(layout.boxes.size() == 4);
  // Left column first, top to bottom.
  CHECK(layout.boxes[0].bbox == BBox{0, 0, 100, 80});
  CHECK(layout.boxes[1].bbox == BBox{0, 82, 100, 160});
  CHECK(layout.boxes[2].bbox == BBox{102, 0, 200, 80});
}

TEST_CASE("stats") {
  testutil::TempDir dir("cli-stats");
  write_text_file(dir / "empty.json", R"({"categories": [], "images": []})");
  CHECK(lk({"stats", s(dir / "empty.json"), "--output", s(dir / "e.json")}) == 0);
  const auto e = read_json_file(dir / "e.json");
  CHECK(e.at("kind") == "dataset_stats");

  write_text_file(dir / "toy.json", R"({"categories": [{"id": 4, "name": "advertisement"}, {"id": 6, "name": "table"}],
    "images": [{"id": 1, "file_name": "a.png", "width": 50, "height": 50}],
    "annotations": [{"image_id": 1, "category_id": 4, "bbox": [0, 0, 5, 5]},
                    {"image_id": 1, "category_id": 4, "bbox": [10, 0, 5, 5]},
                    {"image_id": 1, "category_id": 6, "bbox": [0, 10, 5, 5]}]})");
  CHECK(lk({"stats", "--test", s(dir / "toy.json"), "--output", s(dir / "t.json")}) == 0);
  const auto j = read_json_file(dir / "t.json");
  CHECK(j.dump().find("advertisement") != std::string::npos);
  CHECK(lk({"stats", "--train", s(dir / "toy.json"), "--test", s(dir / "toy.json")}) == 2);
  CHECK(lk({"stats", s(dir / "missing.json")}) == 2);
}

TEST_CASE("config file with flag overrides") {
  testutil::TempDir dir("cli-config");
  const auto corpus = make_corpus(dir, 1);
  write_text_file(dir / "cfg.json", R"({"method": "geometric", "geometric": {"min_area": 100000000}})");
  REQUIRE(lk({"postprocess", "--config", s(dir / "cfg.json"), "--input", s(corpus / "classmaps"), "--output",
              s(dir / "a")}) == 0);
  CHECK(load_layout(dir / "a" / "page_0000.json").boxes.empty());
  REQUIRE(lk({"postprocess", "--config", s(dir / "cfg.json"), "--min-area", "64", "--input",
              s(corpus / "classmaps"), "--output", s(dir / "b")}) == 0);
  // Config method is geometric (no merging): one box per block.
  CHECK(load_layout(dir / "b" / "page_0000.json").boxes.size() == 4);

  write_text_file(dir / "bad.json", R"({"methd": "geometric"})");
  CHECK(lk({"postprocess", "--config", s(dir / "bad.json"), "--input", s(corpus / "classmaps"), "--output",
            s(dir / "c")}) == 2);
  CHECK(lk({"postprocess", "--method", "magic", "--input", s(corpus / "classmaps"), "--output", s(dir / "c")}) == 2);
  CHECK(lk({"postprocess", "--input", s(dir / "nowhere"), "--output", s(dir / "c")}) == 2);
  CHECK(lk({"frobnicate"}) == 2);
}

TEST_CASE("outputs do not depend on worker count and are reproducible") {
  testutil::TempDir dir("cli-workers");
  testutil::TempDir other("cli-workers2");
  REQUIRE(lk({"synth", "--output", s(dir / "c"), "--pages", "6", "--seed", "5", "--page-width", "300",
              "--page-height", "400", "--columns", "3", "--workers", "3"}) == 0);
  REQUIRE(lk({"synth", "--output", s(other / "c"), "--pages", "6", "--seed", "5", "--page-width", "300",
              "--page-height", "400", "--columns", "3"}) == 0);
  for (const std::string id : {"page_0000", "page_0005"}) {
    CHECK(read_text_file(dir / "c" / "images" / (id + ".png")) == read_text_file(other / "c" / "images" / (id + ".png")));
    CHECK(read_text_file(dir / "c" / "gt" / (id + ".txt")) == read_text_file(other / "c" / "gt" / (id + ".txt")));
  }
  CHECK(read_text_file(dir / "c" / "annotations.json") == read_text_file(other / "c" / "annotations.json"));

  for (const char* w : {"1", "4"}) {
    REQUIRE(lk({"postprocess", "--workers", w, "--input", s(dir / "c" / "classmaps"), "--output",
                s(dir / (std::string("l") + w))}) == 0);
    REQUIRE(lk({"ocr", "--workers", w, "--images", s(dir / "c" / "images"), "--layouts",
                s(dir / (std::string("l") + w)), "--engine", "mock", "--atlas", s(dir / "c" / "atlas"), "--output",
                s(dir / (std::string("t") + w))}) == 0);
    REQUIRE(lk({"ocr-eval", "--workers", w, "--pred", s(dir / (std::string("t") + w)), "--gt", s(dir / "c" / "gt"),
                "--output", s(dir / (std::string("r") + w + ".json"))}) == 0);
  }
  for (const auto& name : dir_listing(dir / "l1")) {
    CHECK(read_text_file(dir / "l1" / name) == read_text_file(dir / "l4" / name));
  }
  for (const auto& name : dir_listing(dir / "t1")) {
    CHECK(read_text_file(dir / "t1" / name) == read_text_file(dir / "t4" / name));
  }
  CHECK(read_text_file(dir / "r1.json") == read_text_file(dir / "r4.json"));
}
