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

#include "layoutkit/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

namespace layoutkit {

const std::array<Rgb, kNumClasses>& class_palette() noexcept {
  static const std::array<Rgb, kNumClasses> kPalette = {{
      {255, 255, 255},  // background
      {228, 26, 28},    // header
      {55, 126, 184},   // article title
      {77, 175, 74},    // article body
      {152, 78, 163},   // advertisement
      {255, 127, 0},    // image
      {166, 86, 40},    // table
      {247, 129, 191},  // other
  }};
  return kPalette;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct ErrorSink {
  std::string message;
};

void on_error(png_structp png, png_const_charp msg) {
  static_cast<ErrorSink*>(png_get_error_ptr(png))->message = msg;
  std::longjmp(png_jmpbuf(png), 1);
}

void on_warning(png_structp, png_const_charp) {}

struct RawPng {
  int width = 0;
  int height = 0;
  int channels = 0;
  bool palette = false;
  std::vector<std::uint8_t> pixels;
};

// Decodes to 8-bit samples. With keep_indices, paletted images yield their
// raw indices in a single channel; otherwise palettes expand to RGB.
bool read_raw(std::FILE* fp, bool keep_indices, RawPng& out, ErrorSink& sink) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &sink, on_error, on_warning);
  if (!png) {
    sink.message = "png_create_read_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  std::vector<png_bytep> rows;
  if (!info || setjmp(png_jmpbuf(png))) {
    if (sink.message.empty()) sink.message = "png_create_info_struct failed";
    png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    return false;
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  const int color = png_get_color_type(png, info);
  const int depth = png_get_bit_depth(png, info);
  out.palette = color == PNG_COLOR_TYPE_PALETTE;
  if (depth == 16) png_set_strip_16(png);
  if (depth < 8) {
    if (color == PNG_COLOR_TYPE_GRAY) {
      png_set_expand_gray_1_2_4_to_8(png);
    } else {
      png_set_packing(png);
    }
  }
  if (out.palette && !keep_indices) png_set_palette_to_rgb(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (!out.palette || !keep_indices) {
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  }
  png_read_update_info(png, info);
  // tRNS expansion may have added alpha back; drop it after the fact.
  const int channels = png_get_channels(png, info);
  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  std::vector<std::uint8_t> raw(rowbytes * out.height);
  rows.resize(out.height);
  for (int y = 0; y < out.height; ++y) rows[y] = raw.data() + rowbytes * y;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  const int keep = (channels == 2 || channels == 4) ? channels - 1 : channels;
  out.channels = keep;
  out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * keep);
  for (int y = 0; y < out.height; ++y) {
    const std::uint8_t* src = rows[y];
    std::uint8_t* dst = out.pixels.data() + static_cast<std::size_t>(y) * out.width * keep;
    for (int x = 0; x < out.width; ++x)
      for (int c = 0; c < keep; ++c) dst[x * keep + c] = src[x * channels + c];
  }
  return true;
}

RawPng read_png(const std::filesystem::path& path, bool keep_indices) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw ParseError("cannot open " + path.string());
  unsigned char sig[8];
  if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    throw ParseError(path.string() + ": not a PNG file");
  }
  std::rewind(fp.get());
  RawPng raw;
  ErrorSink sink;
  if (!read_raw(fp.get(), keep_indices, raw, sink)) {
    throw ParseError(path.string() + ": " + sink.message);
  }
  if (raw.width <= 0 || raw.height <= 0) throw ParseError(path.string() + ": empty image");
  return raw;
}

struct WriteSpec {
  int width;
  int height;
  int color_type;
  const png_color* palette;
  int palette_size;
  const std::uint8_t* pixels;
  std::size_t stride;
};

bool write_raw(std::FILE* fp, const WriteSpec& spec, ErrorSink& sink) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &sink, on_error, on_warning);
  if (!png) {
    sink.message = "png_create_write_struct failed";
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    if (sink.message.empty()) sink.message = "png_create_info_struct failed";
    png_destroy_write_struct(&png, info ? &info : nullptr);
    return false;
  }
  png_init_io(png, fp);
  png_set_IHDR(png, info, spec.width, spec.height, 8, spec.color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  if (spec.palette) png_set_PLTE(png, info, spec.palette, spec.palette_size);
  png_write_info(png, info);
  for (int y = 0; y < spec.height; ++y) {
    png_write_row(png, const_cast<png_bytep>(spec.pixels + spec.stride * y));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

void write_png(const std::filesystem::path& path, const WriteSpec& spec) {
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw Error("cannot write " + path.string());
  ErrorSink sink;
  if (!write_raw(fp.get(), spec, sink)) throw Error(path.string() + ": " + sink.message);
  if (std::fflush(fp.get()) != 0) throw Error("write failed: " + path.string());
}

}  // namespace

Image load_image_png(const std::filesystem::path& path) {
  RawPng raw = read_png(path, false);
  Image img;
  img.width = raw.width;
  img.height = raw.height;
  img.channels = raw.channels;
  img.pixels = std::move(raw.pixels);
  return img;
}

void save_image_png(const std::filesystem::path& path, const Image& image) {
  if (image.channels != 1 && image.channels != 3) throw InvalidInput("image needs 1 or 3 channels");
  write_png(path, {image.width, image.height,
                   image.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, nullptr, 0,
                   image.pixels.data(), static_cast<std::size_t>(image.width) * image.channels});
}

void save_classmap_png(const std::filesystem::path& path, const ClassMap& cmap) {
  std::array<png_color, kNumClasses> plte;
  for (int i = 0; i < kNumClasses; ++i) {
    plte[i] = {class_palette()[i][0], class_palette()[i][1], class_palette()[i][2]};
  }
  static_assert(sizeof(LayoutClass) == 1);
  write_png(path, {cmap.width(), cmap.height(), PNG_COLOR_TYPE_PALETTE, plte.data(), kNumClasses,
                   reinterpret_cast<const std::uint8_t*>(cmap.pixels().data()),
                   static_cast<std::size_t>(cmap.width())});
}

ClassMap load_classmap_png(const std::filesystem::path& path) {
  const RawPng raw = read_png(path, true);
  if (raw.channels != 1) {
    throw SchemaError(path.string() + ": class map must be paletted or single-channel gray");
  }
  ClassMap cmap(raw.width, raw.height);
  auto dst = cmap.pixels();
  for (std::size_t i = 0; i < raw.pixels.size(); ++i) {
    const auto v = raw.pixels[i];
    if (v >= kNumClasses) {
      throw SchemaError(path.string() + ": invalid class code " + std::to_string(v) + " at x=" +
                        std::to_string(i % raw.width) + " y=" + std::to_string(i / raw.width));
    }
    dst[i] = static_cast<LayoutClass>(v);
  }
  return cmap;
}

BinaryMask load_mask_png(const std::filesystem::path& path) {
  const RawPng raw = read_png(path, true);
  BinaryMask mask(raw.width, raw.height);
  auto dst = mask.pixels();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    bool on = false;
    for (int c = 0; c < raw.channels; ++c) on = on || raw.pixels[i * raw.channels + c] != 0;
    dst[i] = on ? 1 : 0;
  }
  return mask;
}

void save_mask_png(const std::filesystem::path& path, const BinaryMask& mask) {
  std::vector<std::uint8_t> px(mask.size());
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = mask.pixels()[i] ? 255 : 0;
  write_png(path, {mask.width(), mask.height(), PNG_COLOR_TYPE_GRAY, nullptr, 0, px.data(),
                   static_cast<std::size_t>(mask.width())});
}

}  // namespace layoutkit
