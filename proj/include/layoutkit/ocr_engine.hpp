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

// Cropping super boxes out of the page and sending them to an OCR engine.

#include <atomic>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "layoutkit/doc_model.hpp"

namespace layoutkit {

struct Crop {
  // Region actually cropped, in page coordinates (after padding and clamping).
  BBox region;
  Image image;
  // The super box reached past the image and was clamped.
  bool clamped = false;
};

// One crop per super box in order_index order. `padding` grows every box
// before clamping. Throws InvalidInput for a box entirely outside the image.
std::vector<Crop> crop_blocks(const Image& image, const OrderedLayout& layout, int padding = 0);
Crop crop_box(const Image& image, const BBox& box, int padding = 0);

struct AtlasEntry {
  BBox bbox;
  std::string text;

  friend bool operator==(const AtlasEntry&, const AtlasEntry&) = default;
};

// Known text per page rectangle; stands in for a real engine.
struct MockAtlas {
  std::vector<AtlasEntry> entries;

  friend bool operator==(const MockAtlas&, const MockAtlas&) = default;
};

enum class EngineKind { external_command, mock_atlas };

struct OcrEngineSpec {
  EngineKind kind = EngineKind::mock_atlas;
  // Placeholders: {input} = crop PNG path, {lang} = `lang`.
  std::string command_template;
  std::string lang = "eng";
  std::shared_ptr<const MockAtlas> atlas;
  double timeout_seconds = 60.0;
  int max_concurrency = 4;
  int retries = 1;
  int padding = 0;

  void validate() const;
};

class OcrEngine {
 public:
  virtual ~OcrEngine() = default;

  // One attempt. Throws EngineError / TimeoutError.
  std::string recognize(const Crop& crop) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return do_recognize(crop);
  }
  std::size_t calls() const noexcept { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual std::string do_recognize(const Crop& crop) = 0;

 private:
  std::atomic<std::size_t> calls_{0};
};

// Writes the crop to a temporary PNG, runs the command template through the
// shell and returns its standard output.
class ExternalCommandEngine final : public OcrEngine {
 public:
  explicit ExternalCommandEngine(OcrEngineSpec spec);

 protected:
  std::string do_recognize(const Crop& crop) override;

 private:
  OcrEngineSpec spec_;
};

// Returns the text of every atlas region lying at least half inside the crop,
// top to bottom then left to right, joined by newlines. Without such a region
// the single region of largest overlap is used; without overlap, "".
class MockAtlasEngine final : public OcrEngine {
 public:
  explicit MockAtlasEngine(std::shared_ptr<const MockAtlas> atlas);

 protected:
  std::string do_recognize(const Crop& crop) override;

 private:
  std::shared_ptr<const MockAtlas> atlas_;
};

std::unique_ptr<OcrEngine> make_engine(const OcrEngineSpec& spec);

// Up to 1 + retries attempts; rethrows the last failure.
std::string recognize_with_retry(OcrEngine& engine, const Crop& crop, int retries);
std::string recognize(const Crop& crop, const OcrEngineSpec& spec);

struct BoxText {
  int order_index = 0;
  bool ok = false;
  std::string text;
  // Error message when !ok, or a clamping warning.
  std::string detail;

  friend bool operator==(const BoxText&, const BoxText&) = default;
};

struct PageText {
  std::string page_id;
  std::vector<BoxText> entries;

  // Texts in read order; failed boxes contribute an empty string.
  std::vector<std::string> segment_texts() const;
  friend bool operator==(const PageText&, const PageText&) = default;
};

struct RunOptions {
  int max_concurrency = 4;
  int retries = 1;
  int padding = 0;
};

// At most max_concurrency engine calls in flight; entries come back in
// order_index order. Per-box failures are recorded; if every box fails the
// page throws EngineError.
PageText run_page_ocr(const std::string& page_id, const Image& image,
                      const OrderedLayout& layout, OcrEngine& engine, const RunOptions& options);
PageText run_page_ocr(const std::string& page_id, const Image& image,
                      const OrderedLayout& layout, const OcrEngineSpec& spec);

// Single super box covering the page, for the no-layout baseline.
OrderedLayout full_page_layout(PageDims page);

}  // namespace layoutkit
