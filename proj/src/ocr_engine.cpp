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

#include "layoutkit/ocr_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>
#include <tuple>

#include "layoutkit/png_io.hpp"
#include "layoutkit/subprocess.hpp"

namespace layoutkit {

Crop crop_box(const Image& image, const BBox& box, int padding) {
  const auto inside = clamp_to(box, image.dims());
  if (!inside) {
    throw InvalidInput("super box " + to_string(box) + " lies outside the " +
                       std::to_string(image.width) + "x" + std::to_string(image.height) +
                       " image");
  }
  Crop c;
  c.clamped = *inside != box;
  const BBox padded{box.x_min - padding, box.y_min - padding, box.x_max + padding,
                    box.y_max + padding};
  c.region = *clamp_to(padded, image.dims());
  c.image = Image(c.region.width(), c.region.height(), image.channels);
  const std::size_t row_bytes = static_cast<std::size_t>(c.region.width()) * image.channels;
  for (int y = 0; y < c.region.height(); ++y) {
    const std::uint8_t* src = image.px(c.region.x_min, c.region.y_min + y);
    std::copy(src, src + row_bytes, c.image.px(0, y));
  }
  return c;
}

std::vector<Crop> crop_blocks(const Image& image, const OrderedLayout& layout, int padding) {
  std::vector<Crop> out;
  out.reserve(layout.boxes.size());
  for (const auto& b : layout.boxes) out.push_back(crop_box(image, b.bbox, padding));
  return out;
}

void OcrEngineSpec::validate() const {
  if (!(timeout_seconds > 0)) throw InvalidInput("engine timeout must be > 0");
  if (max_concurrency < 1) throw InvalidInput("engine max concurrency must be >= 1");
  if (retries < 0) throw InvalidInput("engine retries must be >= 0");
  if (padding < 0) throw InvalidInput("crop padding must be >= 0");
  if (kind == EngineKind::external_command &&
      command_template.find("{input}") == std::string::npos) {
    throw InvalidInput("engine command template must contain {input}");
  }
  if (kind == EngineKind::mock_atlas && !atlas) throw InvalidInput("mock engine needs an atlas");
}

ExternalCommandEngine::ExternalCommandEngine(OcrEngineSpec spec) : spec_(std::move(spec)) {
  spec_.kind = EngineKind::external_command;
  spec_.validate();
}

namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

}  // namespace

std::string ExternalCommandEngine::do_recognize(const Crop& crop) {
  if (crop.image.pixels.empty()) throw InvalidInput("recognize: empty crop");
  process::TempFile input(".png");
  save_image_png(input.path(), crop.image);
  std::string cmd = replace_all(spec_.command_template, "{input}",
                                process::shell_quote(input.path().string()));
  cmd = replace_all(cmd, "{lang}", process::shell_quote(spec_.lang));
  const auto timeout = std::chrono::milliseconds(
      static_cast<std::int64_t>(std::ceil(spec_.timeout_seconds * 1000.0)));
  auto res = process::run_shell(cmd, timeout);
  if (res.timed_out) {
    throw TimeoutError("OCR command timed out after " + std::to_string(spec_.timeout_seconds) +
                       " s");
  }
  if (res.exit_status != 0) {
    throw EngineError("OCR command exited with status " + std::to_string(res.exit_status),
                      res.exit_status, res.err);
  }
  return std::move(res.out);
}

MockAtlasEngine::MockAtlasEngine(std::shared_ptr<const MockAtlas> atlas)
    : atlas_(std::move(atlas)) {
  if (!atlas_) throw InvalidInput("mock engine needs an atlas");
}

std::string MockAtlasEngine::do_recognize(const Crop& crop) {
  if (crop.image.pixels.empty()) throw InvalidInput("recognize: empty crop");
  std::vector<const AtlasEntry*> inside;
  const AtlasEntry* best = nullptr;
  std::int64_t best_overlap = 0;
  for (const auto& e : atlas_->entries) {
    const std::int64_t ov = overlap_area(e.bbox, crop.region);
    if (ov <= 0) continue;
    if (2 * ov >= e.bbox.area()) inside.push_back(&e);
    if (ov > best_overlap) {
      best_overlap = ov;
      best = &e;
    }
  }
  if (inside.empty()) return best ? best->text : std::string{};
  std::stable_sort(inside.begin(), inside.end(), [](const AtlasEntry* a, const AtlasEntry* b) {
    return std::tie(a->bbox.y_min, a->bbox.x_min) < std::tie(b->bbox.y_min, b->bbox.x_min);
  });
  std::string out;
  for (const auto* e : inside) {
    if (!out.empty()) out.push_back('\n');
    out += e->text;
  }
  return out;
}

std::unique_ptr<OcrEngine> make_engine(const OcrEngineSpec& spec) {
  spec.validate();
  if (spec.kind == EngineKind::external_command) return std::make_unique<ExternalCommandEngine>(spec);
  return std::make_unique<MockAtlasEngine>(spec.atlas);
}

std::string recognize_with_retry(OcrEngine& engine, const Crop& crop, int retries) {
  for (int attempt = 0;; ++attempt) {
    try {
      return engine.recognize(crop);
    } catch (const EngineError&) {
      if (attempt >= retries) throw;
    } catch (const TimeoutError&) {
      if (attempt >= retries) throw;
    }
  }
}

std::string recognize(const Crop& crop, const OcrEngineSpec& spec) {
  auto engine = make_engine(spec);
  return recognize_with_retry(*engine, crop, spec.retries);
}

std::vector<std::string> PageText::segment_texts() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.ok ? e.text : std::string{});
  return out;
}

PageText run_page_ocr(const std::string& page_id, const Image& image,
                      const OrderedLayout& layout, OcrEngine& engine, const RunOptions& options) {
  if (options.max_concurrency < 1) throw InvalidInput("max_concurrency must be >= 1");
  PageText page;
  page.page_id = page_id;
  const std::size_t n = layout.boxes.size();
  page.entries.resize(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      const auto& box = layout.boxes[i];
      BoxText& slot = page.entries[i];
      slot.order_index = box.order_index;
      try {
        const Crop crop = crop_box(image, box.bbox, options.padding);
        slot.text = recognize_with_retry(engine, crop, options.retries);
        slot.ok = true;
        if (crop.clamped) slot.detail = "clamped to image bounds";
      } catch (const EngineError& e) {
        slot.detail = std::string(e.what()) + (e.diagnostics().empty() ? "" : ": " + e.diagnostics());
      } catch (const std::exception& e) {
        slot.detail = e.what();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(n, options.max_concurrency);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  if (n > 0 && std::none_of(page.entries.begin(), page.entries.end(),
                            [](const BoxText& e) { return e.ok; })) {
    throw EngineError("page '" + page_id + "': all " + std::to_string(n) + " boxes failed", -1,
                      page.entries.front().detail);
  }
  return page;
}

PageText run_page_ocr(const std::string& page_id, const Image& image,
                      const OrderedLayout& layout, const OcrEngineSpec& spec) {
  auto engine = make_engine(spec);
  return run_page_ocr(page_id, image, layout, *engine,
                      {spec.max_concurrency, spec.retries, spec.padding});
}

OrderedLayout full_page_layout(PageDims page) {
  const Segment whole{BBox{0, 0, page.width, page.height}, LayoutClass::other, 1.0};
  return OrderedLayout{page.width, page.height, {make_super_box({whole}, 0)}};
}

}  // namespace layoutkit
