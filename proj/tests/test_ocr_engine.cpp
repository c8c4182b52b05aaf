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

#include <chrono>
#include <filesystem>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "doctest.h"
#include "layoutkit/ocr_engine.hpp"
#include "layoutkit/png_io.hpp"
#include "layoutkit/subprocess.hpp"

using namespace layoutkit;
namespace fs = std::filesystem;

namespace {

Image gradient(int w, int h) {
  Image img(w, h, 1);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) *img.px(x, y) = static_cast<std::uint8_t>((x * 7 + y * 13) & 0xff);
  return img;
}

OrderedLayout layout_of(PageDims page, std::initializer_list<BBox> boxes) {
  OrderedLayout l{page.width, page.height, {}};
  for (const auto& b : boxes) {
    l.boxes.push_back(make_super_box({Segment{b, LayoutClass::article_body, 1.0}},
                                     static_cast<int>(l.boxes.size())));
  }
  return l;
}

std::set<fs::path> our_temp_files() {
  std::set<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::temp_directory_path())) {
    if (e.path().filename().string().starts_with("layoutkit-")) out.insert(e.path());
  }
  return out;
}

OcrEngineSpec command_spec(std::string cmd) {
  OcrEngineSpec s;
  s.kind = EngineKind::external_command;
  s.command_template = std::move(cmd);
  s.timeout_seconds = 5;
  return s;
}

// Answers with the crop's top-left coordinate after a random pause, and
// tracks how many calls overlap.
class SlowEngine final : public OcrEngine {
 public:
  explicit SlowEngine(std::uint64_t seed, std::set<int> failing = {})
      : rng_(seed), failing_(std::move(failing)) {}
  int peak() const { return peak_.load(); }

 protected:
  std::string do_recognize(const Crop& crop) override {
    const int now = ++in_flight_;
    for (int p = peak_.load(); now > p && !peak_.compare_exchange_weak(p, now);) {
    }
    int ms;
    {
      std::lock_guard lock(mu_);
      ms = static_cast<int>(rng_() % 15);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
    --in_flight_;
    if (failing_.contains(crop.region.x_min)) throw EngineError("boom", 3, "diag");
    return std::to_string(crop.region.x_min) + "," + std::to_string(crop.region.y_min);
  }

 private:
  std::mutex mu_;
  std::mt19937_64 rng_;
  std::set<int> failing_;
  std::atomic<int> in_flight_{0}, peak_{0};
};

}  // namespace

TEST_CASE("crop_blocks") {
  const Image img = gradient(20, 20);
  const auto c = crop_box(img, {0, 0, 10, 10});
  CHECK(c.image.width == 10);
  CHECK(c.image.height == 10);
  CHECK_FALSE(c.clamped);
  CHECK(*c.image.px(3, 4) == *img.px(3, 4));

  const auto edge = crop_box(img, {15, 2, 23, 6});
  CHECK(edge.clamped);
  CHECK(edge.region == BBox{15, 2, 20, 6});
  CHECK(edge.image.width == 5);
  CHECK(*edge.image.px(0, 0) == *img.px(15, 2));

  const auto padded = crop_box(img, {5, 5, 10, 10}, 2);
  CHECK(padded.region == BBox{3, 3, 12, 12});

  CHECK_THROWS_AS(crop_box(img, {30, 30, 40, 40}), InvalidInput);

  const auto crops = crop_blocks(img, layout_of({20, 20}, {{0, 0, 5, 5}, {10, 0, 20, 8}, {0, 10, 4, 20}}));
  REQUIRE(crops.size() == 3);
  CHECK(crops[1].region == BBox{10, 0, 20, 8});
  CHECK(crops[2].image.height == 10);
}

TEST_CASE("mock atlas engine") {
  auto atlas = std::make_shared<MockAtlas>();
  atlas->entries = {{{0, 0, 10, 10}, "hello world"}, {{0, 20, 10, 30}, "second"}, {{50, 0, 60, 10}, "far"}};
  MockAtlasEngine engine(atlas);
  const Image img = gradient(64, 64);
  CHECK(engine.recognize(crop_box(img, {0, 0, 10, 10})) == "hello world");
  // A column crop returns every contained region top to bottom.
  CHECK(engine.recognize(crop_box(img, {0, 0, 10, 30})) == "hello world\nsecond");
  // Mostly outside: falls back to the single largest overlap.
  CHECK(engine.recognize(crop_box(img, {0, 6, 10, 24})) == "hello world");
  CHECK(engine.recognize(crop_box(img, {30, 40, 40, 50})).empty());
  CHECK(engine.calls() == 4);

  OcrEngineSpec spec;
  spec.atlas = atlas;
  CHECK(recognize(crop_box(img, {50, 0, 60, 10}), spec) == "far");
  spec.atlas = nullptr;
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
}

TEST_CASE("external command engine") {
  const Image img = gradient(12, 9);
  const auto crop = crop_box(img, {2, 1, 10, 8});
  const auto before = our_temp_files();

  SUBCASE("stdout is the text and the crop file is a PNG of the crop") {
    const fs::path copy = fs::temp_directory_path() / "lk_engine_copy_test.png";
    auto spec = command_spec("cp {input} " + process::shell_quote(copy.string()) + " && printf 'text in %s' {lang}");
    spec.lang = "deu";
    CHECK(recognize(crop, spec) == "text in deu");
    CHECK(load_image_png(copy) == crop.image);
    fs::remove(copy);
  }
  SUBCASE("nonzero exit is an engine error with status and diagnostics") {
    auto spec = command_spec("echo broken >&2; exit 1 # {input}");
    spec.retries = 0;
    try {
      recognize(crop, spec);
      FAIL("expected EngineError");
    } catch (const EngineError& e) {
      CHECK(e.exit_status() == 1);
      CHECK(e.diagnostics().find("broken") != std::string::npos);
    }
  }
  SUBCASE("timeouts are bounded and retried a fixed number of times") {
    auto spec = command_spec("sleep 5 # {input}");
    spec.timeout_seconds = 0.2;
    spec.retries = 1;
    auto engine = make_engine(spec);
    const auto t0 = std::chrono::steady_clock::now();
    CHECK_THROWS_AS(recognize_with_retry(*engine, crop, spec.retries), TimeoutError);
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    CHECK(engine->calls() == 2);
    CHECK(elapsed < std::chrono::seconds(3));
  }
  SUBCASE("a flaky command succeeds on retry") {
    const fs::path flag = fs::temp_directory_path() / "lk_engine_flaky_flag";
    fs::remove(flag);
    const auto q = process::shell_quote(flag.string());
    auto spec = command_spec("if [ -e " + q + " ]; then echo ok; else touch " + q + "; exit 2; fi # {input}");
    auto engine = make_engine(spec);
    CHECK(recognize_with_retry(*engine, crop, 1) == "ok\n");
    CHECK(engine->calls() == 2);
    fs::remove(flag);
  }
  CHECK(our_temp_files() == before);

  CHECK_THROWS_AS(command_spec("no placeholder").validate(), InvalidInput);
}

TEST_CASE("run_page_ocr keeps read order whatever the completion order") {
  const Image img = gradient(200, 50);
  std::vector<BBox> boxes;
  OrderedLayout layout{200, 50, {}};
  for (int i = 0; i < 12; ++i) {
    layout.boxes.push_back(make_super_box({Segment{{i * 15, 0, i * 15 + 10, 40}, LayoutClass::article_body, 1.0}}, i));
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SlowEngine engine(seed);
    const auto page = run_page_ocr("p", img, layout, engine, RunOptions{3, 0, 0});
    REQUIRE(page.entries.size() == 12);
    for (int i = 0; i < 12; ++i) {
      CHECK(page.entries[i].order_index == i);
      CHECK(page.entries[i].ok);
      CHECK(page.entries[i].text == std::to_string(i * 15) + ",0");
    }
    CHECK(engine.calls() == 12);
    CHECK(engine.peak() <= 3);
  }
}

TEST_CASE("per-box failures are recorded, total failure is a page error") {
  const Image img = gradient(60, 20);
  const auto layout = layout_of({60, 20}, {{0, 0, 10, 10}, {20, 0, 30, 10}, {40, 0, 50, 10}});
  SlowEngine partly(7, {20});
  const auto page = run_page_ocr("p", img, layout, partly, RunOptions{2, 1, 0});
  REQUIRE(page.entries.size() == 3);
  CHECK(page.entries[0].ok);
  CHECK_FALSE(page.entries[1].ok);
  CHECK(page.entries[1].detail.find("boom") != std::string::npos);
  CHECK(page.entries[2].ok);
  CHECK(page.segment_texts() == std::vector<std::string>{"0,0", "", "40,0"});
  // Two attempts for the failing box.
  CHECK(partly.calls() == 4);

  SlowEngine all(8, {0, 20, 40});
  CHECK_THROWS_AS(run_page_ocr("p", img, layout, all, RunOptions{2, 0, 0}), EngineError);
}

TEST_CASE("clamped boxes carry a warning") {
  const Image img = gradient(30, 30);
  auto layout = layout_of({40, 30}, {{20, 0, 33, 10}});
  SlowEngine engine(9);
  const auto page = run_page_ocr("p", img, layout, engine, RunOptions{});
  CHECK(page.entries[0].ok);
  CHECK(page.entries[0].detail.find("clamped") != std::string::npos);
}

TEST_CASE("baseline layout makes one call per page") {
  const Image img = gradient(40, 30);
  auto atlas = std::make_shared<MockAtlas>();
  atlas->entries = {{{0, 0, 20, 15}, "a b"}, {{20, 15, 40, 30}, "c d"}};
  MockAtlasEngine engine(atlas);
  const auto layout = full_page_layout(img.dims());
  CHECK_NOTHROW(validate(layout));
  const auto page = run_page_ocr("p", img, layout, engine, RunOptions{});
  CHECK(engine.calls() == 1);
  CHECK(page.entries[0].text == "a b\nc d");
}

TEST_CASE("subprocess runner") {
  const auto r = process::run_shell("printf out; printf err >&2; exit 4", std::chrono::seconds(5));
  CHECK(r.exit_status == 4);
  CHECK_FALSE(r.timed_out);
  CHECK(r.out == "out");
  CHECK(r.err == "err");
  // Large output must not deadlock on full pipes.
  const auto big = process::run_shell("head -c 300000 /dev/zero | tr '\\0' x", std::chrono::seconds(10));
  CHECK(big.out.size() == 300000);
  // The whole process group goes on timeout.
  const auto t = process::run_shell("sleep 10 & sleep 10; wait", std::chrono::milliseconds(200));
  CHECK(t.timed_out);
  CHECK(process::shell_quote("it's") == "'it'\\''s'");
  fs::path kept;
  {
    process::TempFile tmp(".txt");
    kept = tmp.path();
    CHECK(fs::exists(kept));
    CHECK(kept.extension() == ".txt");
  }
  CHECK_FALSE(fs::exists(kept));
}
