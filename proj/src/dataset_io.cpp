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

#include "layoutkit/dataset_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "layoutkit/kernels.hpp"

namespace layoutkit {

using nlohmann::json;

namespace {

std::string stem_of(const std::string& file_name) {
  return std::filesystem::path(file_name).stem().string();
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

json bbox_json(const BBox& b) { return json::array({b.x_min, b.y_min, b.x_max, b.y_max}); }

BBox bbox_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw SchemaError(where + ": bbox must be [x0,y0,x1,y1]");
  BBox b{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
  if (!b.valid() || b.x_min < 0 || b.y_min < 0) {
    throw SchemaError(where + ": invalid bbox " + to_string(b));
  }
  return b;
}

void check_header(const json& j, const char* kind, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected a JSON object");
  const int version = field(j, "format_version", where).get<int>();
  if (version != kFormatVersion) {
    throw SchemaError(where + ": unsupported format_version " + std::to_string(version));
  }
  if (field(j, "kind", where).get<std::string>() != kind) {
    throw SchemaError(where + ": expected kind '" + kind + "'");
  }
}

json header(const char* kind) { return json{{"format_version", kFormatVersion}, {"kind", kind}}; }

template <typename F>
auto guard_json(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> number_or_null(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

LayoutClass class_code_from(const json& j, const std::string& where) {
  const auto c = class_from_code(j.get<int>());
  if (!c) throw SchemaError(where + ": invalid class code");
  return *c;
}

}  // namespace

// ---------------------------------------------------------------- annotations

AnnotationFile parse_annotations(std::string_view json_text, const std::string& source) {
  return guard_json(source, [&] {
    const json doc = json::parse(json_text);
    AnnotationFile out;

    std::map<std::int64_t, LayoutClass> categories;
    for (const auto& c : field(doc, "categories", source)) {
      const auto name = field(c, "name", source + " category").get<std::string>();
      const auto cls = class_from_name(name);
      if (!cls || *cls == LayoutClass::background) {
        throw SchemaError(source + ": unknown category '" + name + "'");
      }
      categories[field(c, "id", source + " category").get<std::int64_t>()] = *cls;
    }

    std::map<std::int64_t, std::size_t> page_index;
    std::set<std::string> ids;
    for (const auto& img : field(doc, "images", source)) {
      PageAnnotation page;
      page.page_id = stem_of(field(img, "file_name", source + " image").get<std::string>());
      page.page_width = field(img, "width", source + " image").get<int>();
      page.page_height = field(img, "height", source + " image").get<int>();
      if (!ids.insert(page.page_id).second) {
        throw SchemaError(source + ": duplicate page id '" + page.page_id + "'");
      }
      if (img.contains("split")) out.splits[page.page_id] = img.at("split").get<std::string>();
      page_index[field(img, "id", source + " image").get<std::int64_t>()] = out.pages.size();
      out.pages.push_back(std::move(page));
    }

    const json empty = json::array();
    const json& anns = doc.contains("annotations") ? doc.at("annotations") : empty;
    for (std::size_t i = 0; i < anns.size(); ++i) {
      const auto& a = anns[i];
      const std::string where = source + " annotation #" + std::to_string(i);
      const auto img = page_index.find(field(a, "image_id", where).get<std::int64_t>());
      if (img == page_index.end()) throw SchemaError(where + ": unknown image_id");
      const auto cat = categories.find(field(a, "category_id", where).get<std::int64_t>());
      if (cat == categories.end()) throw SchemaError(where + ": unknown category_id");
      const auto& bb = field(a, "bbox", where);
      if (!bb.is_array() || bb.size() != 4) throw SchemaError(where + ": bbox must be [x,y,w,h]");
      const double x = bb[0].get<double>(), y = bb[1].get<double>();
      const double w = bb[2].get<double>(), h = bb[3].get<double>();
      if (!(w > 0 && h > 0 && x >= 0 && y >= 0)) throw SchemaError(where + ": degenerate bbox");
      Segment s;
      s.bbox = {static_cast<int>(std::floor(x)), static_cast<int>(std::floor(y)),
                static_cast<int>(std::ceil(x + w)), static_cast<int>(std::ceil(y + h))};
      s.cls = cat->second;
      s.score = a.contains("score") ? a.at("score").get<double>() : 1.0;
      out.pages[img->second].segments.push_back(s);
    }
    for (const auto& p : out.pages) validate(p);
    return out;
  });
}

AnnotationFile load_annotations(const std::filesystem::path& path) {
  return parse_annotations(read_text_file(path), path.string());
}

std::string dump_annotations(const AnnotationFile& ann) {
  json doc;
  doc["info"] = {{"description", "layout annotations"}, {"format_version", kFormatVersion}};
  doc["categories"] = json::array();
  for (LayoutClass c : content_classes()) {
    doc["categories"].push_back({{"id", code(c)}, {"name", std::string(class_name(c))}});
  }
  doc["images"] = json::array();
  doc["annotations"] = json::array();
  std::int64_t ann_id = 1;
  for (std::size_t i = 0; i < ann.pages.size(); ++i) {
    const auto& p = ann.pages[i];
    json img = {{"id", i + 1},
                {"file_name", p.page_id + ".png"},
                {"width", p.page_width},
                {"height", p.page_height}};
    if (auto it = ann.splits.find(p.page_id); it != ann.splits.end()) img["split"] = it->second;
    doc["images"].push_back(std::move(img));
    for (const auto& s : p.segments) {
      json a = {{"id", ann_id++},
                {"image_id", i + 1},
                {"category_id", code(s.cls)},
                {"bbox", {s.bbox.x_min, s.bbox.y_min, s.bbox.width(), s.bbox.height()}},
                {"area", s.bbox.area()},
                {"iscrowd", 0}};
      if (s.score != 1.0) a["score"] = s.score;
      doc["annotations"].push_back(std::move(a));
    }
  }
  return doc.dump(1);
}

void save_annotations(const std::filesystem::path& path, const AnnotationFile& ann) {
  write_text_file(path, dump_annotations(ann));
}

ClassMap rasterize_annotations(const PageAnnotation& page, PageDims dims) {
  if (dims.width <= 0 || dims.height <= 0) throw InvalidInput("rasterize: dims must be positive");
  return kernels::omp::rasterize(page.segments, page.dims(), dims);
}

// ---------------------------------------------------------------- statistics

const CategoryCount& DatasetStats::row(LayoutClass c) const {
  for (const auto& r : rows) {
    if (r.cls == c) return r;
  }
  throw InvalidInput("no statistics row for class " + std::string(class_name(c)));
}

DatasetStats summarize_dataset(const AnnotationFile& ann,
                               const std::map<std::string, std::string>& split_labels,
                               const std::string& default_split) {
  DatasetStats st;
  for (LayoutClass c : {LayoutClass::image, LayoutClass::article_title, LayoutClass::article_body,
                        LayoutClass::advertisement, LayoutClass::table, LayoutClass::header,
                        LayoutClass::other}) {
    st.rows.push_back({c, 0, 0});
  }
  std::array<CategoryCount*, kNumClasses> by_code{};
  for (auto& r : st.rows) by_code[code(r.cls)] = &r;

  for (const auto& p : ann.pages) {
    std::string split = default_split;
    if (auto it = ann.splits.find(p.page_id); it != ann.splits.end()) split = it->second;
    if (auto it = split_labels.find(p.page_id); it != split_labels.end()) split = it->second;
    const bool train = split == "train";
    if (!train && split != "test") {
      throw InvalidInput("page '" + p.page_id + "' has unknown split '" + split + "'");
    }
    for (const auto& s : p.segments) {
      auto* row = by_code[code(s.cls)];
      if (train) {
        ++row->train;
        ++st.train_total;
      } else {
        ++row->test;
        ++st.test_total;
      }
    }
  }
  return st;
}

std::string format_stats_table(const DatasetStats& stats) {
  std::ostringstream os;
  auto line = [&](std::string_view name, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-15.*s %10llu %10llu %10llu\n", static_cast<int>(name.size()),
                  name.data(), static_cast<unsigned long long>(a), static_cast<unsigned long long>(b),
                  static_cast<unsigned long long>(c));
    os << buf;
  };
  char head[128];
  std::snprintf(head, sizeof head, "%-15s %10s %10s %10s\n", "category", "train", "test", "total");
  os << head;
  for (const auto& r : stats.rows) line(class_name(r.cls), r.train, r.test, r.total());
  line("total", stats.train_total, stats.test_total, stats.total());
  return os.str();
}

json stats_to_json(const DatasetStats& stats) {
  json j = header("dataset_stats");
  j["categories"] = json::array();
  for (const auto& r : stats.rows) {
    j["categories"].push_back({{"category", std::string(class_name(r.cls))},
                               {"train", r.train},
                               {"test", r.test},
                               {"total", r.total()}});
  }
  j["total"] = {{"train", stats.train_total}, {"test", stats.test_total}, {"total", stats.total()}};
  return j;
}

// ---------------------------------------------------------------- LPM1

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return std::uint32_t{b[at]} | std::uint32_t{b[at + 1]} << 8 | std::uint32_t{b[at + 2]} << 16 |
         std::uint32_t{b[at + 3]} << 24;
}

constexpr std::size_t kLpmHeader = 16;

}  // namespace

std::vector<std::uint8_t> encode_probmap(const ProbMap& prob) {
  std::vector<std::uint8_t> out;
  out.reserve(kLpmHeader + prob.values().size() * 4);
  for (char c : {'L', 'P', 'M', '1'}) out.push_back(static_cast<std::uint8_t>(c));
  put_u32(out, static_cast<std::uint32_t>(prob.width()));
  put_u32(out, static_cast<std::uint32_t>(prob.height()));
  put_u32(out, static_cast<std::uint32_t>(prob.num_classes()));
  for (float v : prob.values()) put_u32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

ProbMap decode_probmap(std::span<const std::uint8_t> bytes, const std::string& source) {
  if (bytes.size() < kLpmHeader || std::memcmp(bytes.data(), "LPM1", 4) != 0) {
    throw ParseError(source + ": missing LPM1 magic");
  }
  const std::uint64_t w = get_u32(bytes, 4), h = get_u32(bytes, 8), k = get_u32(bytes, 12);
  if (w == 0 || h == 0 || k == 0 || w > INT32_MAX || h > INT32_MAX || k > INT32_MAX) {
    throw ParseError(source + ": invalid LPM1 dimensions");
  }
  const std::uint64_t expected = kLpmHeader + w * h * k * 4;
  if (bytes.size() != expected) {
    throw ParseError(source + ": LPM1 payload is " + std::to_string(bytes.size()) +
                     " bytes, expected " + std::to_string(expected));
  }
  ProbMap prob(static_cast<int>(w), static_cast<int>(h), static_cast<int>(k));
  auto values = prob.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(get_u32(bytes, kLpmHeader + 4 * i));
  }
  try {
    prob.validate();
  } catch (const SchemaError& e) {
    throw SchemaError(source + ": " + e.what());
  }
  return prob;
}

void save_probmap(const std::filesystem::path& path, const ProbMap& prob) {
  const auto bytes = encode_probmap(prob);
  write_text_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

ProbMap load_probmap(const std::filesystem::path& path) {
  const std::string raw = read_text_file(path);
  return decode_probmap(
      std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()),
      path.string());
}

// ---------------------------------------------------------------- layouts

json layout_to_json(const OrderedLayout& layout) {
  json j = header("layout");
  j["page_width"] = layout.page_width;
  j["page_height"] = layout.page_height;
  j["boxes"] = json::array();
  for (const auto& b : layout.boxes) {
    json members = json::array();
    for (const auto& m : b.members) {
      members.push_back({{"bbox", bbox_json(m.bbox)},
                         {"class_code", code(m.cls)},
                         {"class", std::string(class_name(m.cls))},
                         {"score", m.score}});
    }
    j["boxes"].push_back(
        {{"order_index", b.order_index}, {"bbox", bbox_json(b.bbox)}, {"members", members}});
  }
  return j;
}

OrderedLayout layout_from_json(const json& j) {
  const std::string where = "layout";
  return guard_json(where, [&] {
    check_header(j, "layout", where);
    OrderedLayout layout;
    layout.page_width = field(j, "page_width", where).get<int>();
    layout.page_height = field(j, "page_height", where).get<int>();
    for (const auto& b : field(j, "boxes", where)) {
      SuperBox sb;
      sb.order_index = field(b, "order_index", where).get<int>();
      sb.bbox = bbox_from(field(b, "bbox", where), where);
      for (const auto& m : field(b, "members", where)) {
        Segment s;
        s.bbox = bbox_from(field(m, "bbox", where), where);
        s.cls = class_code_from(field(m, "class_code", where), where);
        s.score = field(m, "score", where).get<double>();
        sb.members.push_back(s);
      }
      layout.boxes.push_back(std::move(sb));
    }
    validate(layout);
    return layout;
  });
}

void save_layout(const std::filesystem::path& path, const OrderedLayout& layout) {
  write_json_file(path, layout_to_json(layout));
}

OrderedLayout load_layout(const std::filesystem::path& path) {
  try {
    return layout_from_json(read_json_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- atlases

json atlas_to_json(const MockAtlas& atlas) {
  json j = header("atlas");
  j["entries"] = json::array();
  for (const auto& e : atlas.entries) {
    j["entries"].push_back({{"bbox", bbox_json(e.bbox)}, {"text", e.text}});
  }
  return j;
}

MockAtlas atlas_from_json(const json& j) {
  const std::string where = "atlas";
  return guard_json(where, [&] {
    check_header(j, "atlas", where);
    MockAtlas atlas;
    for (const auto& e : field(j, "entries", where)) {
      atlas.entries.push_back(
          {bbox_from(field(e, "bbox", where), where), field(e, "text", where).get<std::string>()});
    }
    return atlas;
  });
}

void save_atlas(const std::filesystem::path& path, const MockAtlas& atlas) {
  write_json_file(path, atlas_to_json(atlas));
}

MockAtlas load_atlas(const std::filesystem::path& path) {
  try {
    return atlas_from_json(read_json_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- page text

json page_text_to_json(const PageText& page) {
  json j = header("page_text");
  j["page_id"] = page.page_id;
  j["entries"] = json::array();
  for (const auto& e : page.entries) {
    j["entries"].push_back({{"order_index", e.order_index},
                            {"status", e.ok ? "ok" : "engine-error"},
                            {"text", e.text},
                            {"detail", e.detail}});
  }
  return j;
}

PageText page_text_from_json(const json& j) {
  const std::string where = "page_text";
  return guard_json(where, [&] {
    check_header(j, "page_text", where);
    PageText page;
    page.page_id = field(j, "page_id", where).get<std::string>();
    for (const auto& e : field(j, "entries", where)) {
      BoxText b;
      b.order_index = field(e, "order_index", where).get<int>();
      const auto status = field(e, "status", where).get<std::string>();
      if (status != "ok" && status != "engine-error") {
        throw SchemaError(where + ": unknown status '" + status + "'");
      }
      b.ok = status == "ok";
      b.text = field(e, "text", where).get<std::string>();
      b.detail = field(e, "detail", where).get<std::string>();
      page.entries.push_back(std::move(b));
    }
    return page;
  });
}

// ---------------------------------------------------------------- reports

json seg_report_to_json(const SegMetricsReport& r) {
  json j = header("layout_metrics");
  j["averaging"] = "pixel counts summed over pages, then per-class scores averaged over evaluated classes";
  j["exclude_background"] = r.exclude_background;
  j["pages"] = r.pages;
  j["total_pixels"] = r.total_pixels;
  j["evaluated"] = json::array();
  for (auto c : r.evaluated) j["evaluated"].push_back(code(c));
  j["mean"] = {{"mIoU", optional_number(r.miou)},
               {"mAc", optional_number(r.mac)},
               {"mPr", optional_number(r.mpr)},
               {"mRe", optional_number(r.mre)},
               {"mFs", optional_number(r.mfs)}};
  j["per_class"] = json::array();
  for (const auto& s : r.per_class) {
    j["per_class"].push_back({{"class_code", code(s.cls)},
                              {"class", std::string(class_name(s.cls))},
                              {"defined", s.defined},
                              {"iou", s.iou},
                              {"accuracy", s.accuracy},
                              {"precision", s.precision},
                              {"recall", s.recall},
                              {"f_score", s.f_score},
                              {"tp", s.counts.tp},
                              {"fp", s.counts.fp},
                              {"fn", s.counts.fn},
                              {"tn", s.counts.tn}});
  }
  return j;
}

SegMetricsReport seg_report_from_json(const json& j) {
  const std::string where = "layout_metrics";
  return guard_json(where, [&] {
    check_header(j, "layout_metrics", where);
    SegMetricsReport r;
    r.exclude_background = field(j, "exclude_background", where).get<bool>();
    r.pages = field(j, "pages", where).get<std::size_t>();
    r.total_pixels = field(j, "total_pixels", where).get<std::uint64_t>();
    for (const auto& c : field(j, "evaluated", where)) r.evaluated.push_back(class_code_from(c, where));
    const auto& mean = field(j, "mean", where);
    r.miou = number_or_null(field(mean, "mIoU", where));
    r.mac = number_or_null(field(mean, "mAc", where));
    r.mpr = number_or_null(field(mean, "mPr", where));
    r.mre = number_or_null(field(mean, "mRe", where));
    r.mfs = number_or_null(field(mean, "mFs", where));
    for (const auto& s : field(j, "per_class", where)) {
      ClassScores c;
      c.cls = class_code_from(field(s, "class_code", where), where);
      c.defined = field(s, "defined", where).get<bool>();
      c.iou = field(s, "iou", where).get<double>();
      c.accuracy = field(s, "accuracy", where).get<double>();
      c.precision = field(s, "precision", where).get<double>();
      c.recall = field(s, "recall", where).get<double>();
      c.f_score = field(s, "f_score", where).get<double>();
      c.counts = {field(s, "tp", where).get<std::uint64_t>(), field(s, "fp", where).get<std::uint64_t>(),
                  field(s, "fn", where).get<std::uint64_t>(), field(s, "tn", where).get<std::uint64_t>()};
      r.per_class.push_back(c);
    }
    return r;
  });
}

json ocr_report_to_json(const OcrCorpusReport& r) {
  json j = header("ocr_metrics");
  j["edit_distance"] = {
      {"granularity", r.edit == EditGranularity::character ? "character" : "word"},
      {"normalization", "levenshtein / max(len(pred), len(gt))"}};
  j["mean"] = {{"edit_distance", optional_number(r.mean_edit_distance)},
               {"roa", optional_number(r.mean_roa)},
               {"word_recall", optional_number(r.mean_word_recall)}};
  j["pages"] = json::array();
  for (const auto& p : r.pages) {
    json matches = json::array();
    for (const auto& m : p.matches) {
      matches.push_back(
          {{"segment_id", m.segment_id},
           {"interval", m.gt_interval ? json::array({m.gt_interval->start, m.gt_interval->end})
                                      : json(nullptr)},
           {"score", m.score}});
    }
    j["pages"].push_back({{"page_id", p.page_id},
                          {"edit_distance", p.edit_distance},
                          {"roa", optional_number(p.roa)},
                          {"word_recall", p.word_recall},
                          {"m", p.m},
                          {"n", p.n},
                          {"segments", p.segments},
                          {"matches", matches}});
  }
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"page_id", f.page_id}, {"error", f.error}});
  return j;
}

OcrCorpusReport ocr_report_from_json(const json& j) {
  const std::string where = "ocr_metrics";
  return guard_json(where, [&] {
    check_header(j, "ocr_metrics", where);
    OcrCorpusReport r;
    const auto gran = field(field(j, "edit_distance", where), "granularity", where).get<std::string>();
    if (gran != "character" && gran != "word") throw SchemaError(where + ": bad granularity");
    r.edit = gran == "character" ? EditGranularity::character : EditGranularity::word;
    const auto& mean = field(j, "mean", where);
    r.mean_edit_distance = number_or_null(field(mean, "edit_distance", where));
    r.mean_roa = number_or_null(field(mean, "roa", where));
    r.mean_word_recall = number_or_null(field(mean, "word_recall", where));
    for (const auto& p : field(j, "pages", where)) {
      OcrReport o;
      o.page_id = field(p, "page_id", where).get<std::string>();
      o.edit_distance = field(p, "edit_distance", where).get<double>();
      o.roa = number_or_null(field(p, "roa", where));
      o.word_recall = field(p, "word_recall", where).get<double>();
      o.m = field(p, "m", where).get<std::size_t>();
      o.n = field(p, "n", where).get<std::size_t>();
      o.segments = field(p, "segments", where).get<std::size_t>();
      for (const auto& m : field(p, "matches", where)) {
        SegmentMatch sm;
        sm.segment_id = field(m, "segment_id", where).get<std::size_t>();
        const auto& iv = field(m, "interval", where);
        if (!iv.is_null()) sm.gt_interval = Interval{iv.at(0).get<std::size_t>(), iv.at(1).get<std::size_t>()};
        sm.score = field(m, "score", where).get<std::size_t>();
        o.matches.push_back(sm);
      }
      r.pages.push_back(std::move(o));
    }
    for (const auto& f : field(j, "failures", where)) {
      r.failures.push_back(
          {field(f, "page_id", where).get<std::string>(), field(f, "error", where).get<std::string>()});
    }
    return r;
  });
}

// ---------------------------------------------------------------- files

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write failed: " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace layoutkit
