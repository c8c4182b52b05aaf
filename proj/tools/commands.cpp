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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "layoutkit/dataset_io.hpp"
#include "layoutkit/mask_ops.hpp"
#include "layoutkit/png_io.hpp"
#include "layoutkit/seg_metrics.hpp"
#include "layoutkit/synth.hpp"

namespace layoutkit::cli {

namespace {

using nlohmann::json;

std::mutex log_mutex;

void log_page(const std::string& page, const std::string& msg) {
  std::lock_guard lock(log_mutex);
  std::cerr << "layoutkit: " << page << ": " << msg << "\n";
}

constexpr const char* kMethods[] = {"geometric", "heuristic", "geometric+heuristic", "separators"};

void require_dir(const fs::path& p, const char* flag) {
  if (p.empty()) throw InvalidInput(std::string(flag) + " is required");
  if (!fs::is_directory(p)) throw InvalidInput(std::string(flag) + ": not a directory: " + p.string());
}

void require_file(const fs::path& p, const char* flag) {
  if (p.empty()) throw InvalidInput(std::string(flag) + " is required");
  if (!fs::is_regular_file(p)) throw InvalidInput(std::string(flag) + ": no such file: " + p.string());
}

// Page id -> path for every file in `dir` with one of `exts`, sorted by id.
std::map<std::string, fs::path> list_pages(const fs::path& dir, std::initializer_list<const char*> exts) {
  std::map<std::string, fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension().string();
    const auto name = e.path().filename().string();
    if (name.find(".overlay.") != std::string::npos) continue;
    for (const char* want : exts) {
      if (ext == want) {
        const auto [it, fresh] = out.emplace(e.path().stem().string(), e.path());
        if (!fresh) throw InvalidInput("two inputs for page '" + it->first + "' in " + dir.string());
      }
    }
  }
  return out;
}

// Runs fn(i) for i in [0, n) on `workers` threads. Returns one message per
// failed item, empty for success. Kernel threads are shared out so that
// workers x OpenMP threads stays near the core count.
std::vector<std::string> for_each_page(std::size_t n, int workers,
                                       const std::function<void(std::size_t)>& fn) {
  std::vector<std::string> errors(n);
  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  const int per_worker = std::max(1, kernels::max_threads() / pool);
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    kernels::set_threads(pool > 1 ? per_worker : 0);
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (const std::exception& e) {
        errors[i] = e.what();
        if (errors[i].empty()) errors[i] = "unknown error";
      }
    }
  };
  if (pool == 1) {
    body();
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < pool; ++t) threads.emplace_back(body);
  }
  return errors;
}

int summarize(const std::vector<std::string>& ids, const std::vector<std::string>& errors,
              const char* what) {
  std::size_t failed = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (errors[i].empty()) continue;
    ++failed;
    log_page(ids[i], errors[i]);
  }
  std::cerr << what << ": " << ids.size() - failed << " of " << ids.size() << " pages ok";
  if (failed) std::cerr << ", " << failed << " failed";
  std::cerr << "\n";
  return failed ? kPartialFailure : kOk;
}

// ---------------------------------------------------------------- overlay

void draw_rect(Image& img, const BBox& b, const Rgb& colour, int thickness) {
  const auto clamped = clamp_to(b, img.dims());
  if (!clamped) return;
  const BBox r = *clamped;
  auto paint = [&](int x, int y) {
    auto* p = img.px(x, y);
    std::copy(colour.begin(), colour.end(), p);
  };
  for (int t = 0; t < thickness; ++t) {
    const int y0 = r.y_min + t, y1 = r.y_max - 1 - t, x0 = r.x_min + t, x1 = r.x_max - 1 - t;
    if (x0 > x1 || y0 > y1) break;
    for (int x = x0; x <= x1; ++x) {
      paint(x, y0);
      paint(x, y1);
    }
    for (int y = y0; y <= y1; ++y) {
      paint(x0, y);
      paint(x1, y);
    }
  }
}

Image overlay_image(const OrderedLayout& layout, const std::optional<Image>& base) {
  Image out(layout.page_width, layout.page_height, 3, 255);
  if (base) {
    for (int y = 0; y < out.height; ++y) {
      for (int x = 0; x < out.width; ++x) {
        const auto* s = base->px(x, y);
        auto* d = out.px(x, y);
        for (int c = 0; c < 3; ++c) d[c] = base->channels == 3 ? s[c] : s[0];
      }
    }
  }
  const auto& palette = class_palette();
  for (const auto& box : layout.boxes) {
    draw_rect(out, box.bbox, Rgb{64, 64, 64}, 1);
    for (const auto& m : box.members) draw_rect(out, m.bbox, palette[code(m.cls)], 3);
  }
  return out;
}

// ---------------------------------------------------------------- postprocess

OrderedLayout build_layout(std::vector<Segment> segments, PageDims page, const Config& cfg,
                           bool merge) {
  if (segments.empty()) return OrderedLayout{page.width, page.height, {}};
  if (merge) return heuristic_pipeline(segments, page, cfg.heuristic);
  return order_reading(singleton_boxes(segments), page, cfg.heuristic);
}

OrderedLayout postprocess_page(const fs::path& input, PageDims page, const Config& cfg) {
  const std::string& m = cfg.method;
  if (m == "separators") {
    if (input.extension() != ".png") throw InvalidInput("separators expects a PNG mask");
    const BinaryMask sep = load_mask_png(input);
    const auto blocks = separators_to_blocks(sep, cfg.geometric.min_area);
    const auto scaled = scale_boxes(blocks, sep.dims(), page);
    std::vector<Segment> segs;
    for (const auto& b : scaled) segs.push_back({b, LayoutClass::article_body, 1.0});
    return build_layout(std::move(segs), page, cfg, false);
  }
  const bool snap = m == "geometric" || m == "geometric+heuristic";
  const bool merge = m == "heuristic" || m == "geometric+heuristic";
  std::vector<Segment> segs;
  if (input.extension() == ".lpm") {
    segs = extract_segments(load_probmap(input), page, cfg.geometric);
  } else {
    segs = extract_segments(load_classmap_png(input), page, cfg.geometric);
  }
  if (snap) segs = snap_segments(std::move(segs), cfg.geometric.cluster_epsilon);
  return build_layout(std::move(segs), page, cfg, merge);
}

PageDims map_dims(const fs::path& input) {
  if (input.extension() == ".lpm") return load_probmap(input).dims();
  return load_mask_png(input).dims();
}

// ---------------------------------------------------------------- ocr helpers

std::vector<std::string> split_form_feed(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('\f', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string join_form_feed(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '\f';
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------- config

template <typename T>
void take(const json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

void take_path(const json& j, const char* key, fs::path& dst, const fs::path& base) {
  if (!j.contains(key)) return;
  fs::path p = j.at(key).get<std::string>();
  dst = p.is_absolute() ? p : base / p;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; })) {
      throw SchemaError(where + ": unknown key '" + k + "'");
    }
  }
}

}  // namespace

void Config::validate() const {
  if (std::none_of(std::begin(kMethods), std::end(kMethods), [&](const char* m) { return method == m; })) {
    throw InvalidInput("unknown method '" + method + "'");
  }
  if (workers < 1) throw InvalidInput("workers must be >= 1");
  if (engine != "mock" && engine != "command") throw InvalidInput("engine must be mock or command");
  if (page_width < 0 || page_height < 0) throw InvalidInput("page size must be >= 0");
  geometric.validate();
  heuristic.validate();
}

void apply_config_file(const fs::path& path, Config& c) {
  const json j = read_json_file(path);
  const fs::path base = path.parent_path();
  const std::string where = path.string();
  try {
    check_keys(j,
               {"method", "workers", "seed", "baseline", "overlay", "exclude_background",
                "word_level", "page_width", "page_height", "geometric", "heuristic", "engine",
                "input", "output", "images", "layouts", "pred", "gt", "atlas", "annotations",
                "spec", "pages", "columns", "blocks_per_column"},
               where);
    take(j, "method", c.method);
    take(j, "workers", c.workers);
    take(j, "seed", c.seed);
    take(j, "baseline", c.baseline);
    take(j, "overlay", c.overlay);
    take(j, "exclude_background", c.exclude_background);
    take(j, "word_level", c.word_level);
    take(j, "page_width", c.page_width);
    take(j, "page_height", c.page_height);
    take(j, "pages", c.pages);
    take(j, "columns", c.columns);
    take(j, "blocks_per_column", c.blocks_per_column);
    for (auto [key, dst] : {std::pair{"input", &c.input}, {"output", &c.output}, {"images", &c.images},
                            {"layouts", &c.layouts}, {"pred", &c.pred}, {"gt", &c.gt},
                            {"atlas", &c.atlas}, {"annotations", &c.annotations}, {"spec", &c.spec}}) {
      take_path(j, key, *dst, base);
    }
    if (j.contains("geometric")) {
      const auto& g = j.at("geometric");
      check_keys(g, {"open_radius", "open_iterations", "min_area", "cluster_epsilon"}, where + " geometric");
      take(g, "open_radius", c.geometric.open_radius);
      take(g, "open_iterations", c.geometric.open_iterations);
      take(g, "min_area", c.geometric.min_area);
      take(g, "cluster_epsilon", c.geometric.cluster_epsilon);
    }
    if (j.contains("heuristic")) {
      const auto& h = j.at("heuristic");
      check_keys(h, {"x_align_tolerance", "column_overlap_ratio"}, where + " heuristic");
      take(h, "x_align_tolerance", c.heuristic.x_align_tolerance);
      take(h, "column_overlap_ratio", c.heuristic.column_overlap_ratio);
    }
    if (j.contains("engine")) {
      const auto& e = j.at("engine");
      check_keys(e, {"kind", "command", "lang", "timeout_seconds", "max_concurrency", "retries", "padding"},
                 where + " engine");
      take(e, "kind", c.engine);
      take(e, "command", c.command_template);
      take(e, "lang", c.lang);
      take(e, "timeout_seconds", c.timeout_seconds);
      take(e, "max_concurrency", c.max_concurrency);
      take(e, "retries", c.retries);
      take(e, "padding", c.padding);
    }
  } catch (const json::exception& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

// ---------------------------------------------------------------- commands

int cmd_postprocess(const Config& cfg) {
  cfg.validate();
  require_dir(cfg.input, "--input");
  if (cfg.output.empty()) throw InvalidInput("--output is required");
  if (!cfg.images.empty()) require_dir(cfg.images, "--images");
  fs::create_directories(cfg.output);

  const auto inputs = cfg.method == "separators" ? list_pages(cfg.input, {".png"})
                                                 : list_pages(cfg.input, {".png", ".lpm"});
  std::vector<std::string> ids;
  std::vector<fs::path> paths;
  for (const auto& [id, p] : inputs) {
    ids.push_back(id);
    paths.push_back(p);
  }

  const auto errors = for_each_page(ids.size(), cfg.workers, [&](std::size_t i) {
    std::optional<Image> image;
    PageDims page{cfg.page_width, cfg.page_height};
    if (!cfg.images.empty()) {
      image = load_image_png(cfg.images / (ids[i] + ".png"));
      page = image->dims();
    } else if (page.width == 0 || page.height == 0) {
      page = map_dims(paths[i]);
    }
    const OrderedLayout layout = postprocess_page(paths[i], page, cfg);
    save_layout(cfg.output / (ids[i] + ".json"), layout);
    if (cfg.overlay) save_image_png(cfg.output / (ids[i] + ".overlay.png"), overlay_image(layout, image));
  });
  return summarize(ids, errors, "postprocess");
}

int cmd_layout_eval(const Config& cfg) {
  cfg.validate();
  require_dir(cfg.pred, "--pred");
  const bool from_annotations = !cfg.annotations.empty();
  if (from_annotations) {
    require_file(cfg.annotations, "--annotations");
  } else {
    require_dir(cfg.gt, "--gt");
  }

  const auto pred_files = list_pages(cfg.pred, {".png"});
  std::vector<std::string> ids;
  for (const auto& [id, p] : pred_files) ids.push_back(id);

  std::map<std::string, const PageAnnotation*> ann_pages;
  AnnotationFile ann;
  if (from_annotations) {
    ann = load_annotations(cfg.annotations);
    for (const auto& p : ann.pages) ann_pages[p.page_id] = &p;
  }

  std::vector<std::optional<NamedClassMap>> preds(ids.size()), gts(ids.size());
  const auto errors = for_each_page(ids.size(), cfg.workers, [&](std::size_t i) {
    ClassMap pred = load_classmap_png(pred_files.at(ids[i]));
    ClassMap gt;
    if (from_annotations) {
      const auto it = ann_pages.find(ids[i]);
      if (it == ann_pages.end()) throw InvalidInput("no annotation for page");
      gt = rasterize_annotations(*it->second, pred.dims());
    } else {
      const fs::path gp = cfg.gt / (ids[i] + ".png");
      if (!fs::exists(gp)) throw InvalidInput("no ground-truth map " + gp.string());
      gt = load_classmap_png(gp);
    }
    preds[i] = NamedClassMap{ids[i], std::move(pred)};
    gts[i] = NamedClassMap{ids[i], std::move(gt)};
  });
  std::vector<NamedClassMap> ok_pred, ok_gt;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!errors[i].empty()) continue;
    ok_pred.push_back(std::move(*preds[i]));
    ok_gt.push_back(std::move(*gts[i]));
  }
  const int status = summarize(ids, errors, "layout-eval");
  if (ok_pred.empty()) throw InvalidInput("no page could be evaluated");

  const auto report = evaluate_layout(ok_pred, ok_gt, {cfg.exclude_background});
  const json j = seg_report_to_json(report);
  if (!cfg.output.empty()) write_json_file(cfg.output, j);

  auto fmt = [](const std::optional<double>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  std::cout << "class            IoU       Acc       Pr        Re        Fs\n";
  for (const auto& s : report.per_class) {
    if (!s.defined) continue;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-14s %9.4f %9.4f %9.4f %9.4f %9.4f\n",
                  std::string(class_name(s.cls)).c_str(), s.iou, s.accuracy, s.precision, s.recall,
                  s.f_score);
    std::cout << buf;
  }
  std::cout << "mean  mIoU " << fmt(report.miou) << "  mAc " << fmt(report.mac) << "  mPr "
            << fmt(report.mpr) << "  mRe " << fmt(report.mre) << "  mFs " << fmt(report.mfs) << "\n";
  return status;
}

int cmd_ocr(const Config& cfg) {
  cfg.validate();
  require_dir(cfg.images, "--images");
  if (!cfg.baseline) require_dir(cfg.layouts, "--layouts");
  if (cfg.output.empty()) throw InvalidInput("--output is required");
  if (cfg.engine == "mock") require_dir(cfg.atlas, "--atlas");
  if (cfg.engine == "command" && cfg.command_template.empty()) {
    throw InvalidInput("--command is required for the command engine");
  }
  OcrEngineSpec base;
  base.kind = cfg.engine == "mock" ? EngineKind::mock_atlas : EngineKind::external_command;
  base.command_template = cfg.command_template;
  base.lang = cfg.lang;
  base.timeout_seconds = cfg.timeout_seconds;
  base.max_concurrency = cfg.max_concurrency;
  base.retries = cfg.retries;
  base.padding = cfg.padding;
  if (base.kind == EngineKind::mock_atlas) base.atlas = std::make_shared<MockAtlas>();
  base.validate();
  fs::create_directories(cfg.output);

  std::vector<std::string> ids;
  for (const auto& [id, p] : list_pages(cfg.images, {".png"})) ids.push_back(id);

  std::atomic<std::size_t> calls{0};
  const auto errors = for_each_page(ids.size(), cfg.workers, [&](std::size_t i) {
    const Image image = load_image_png(cfg.images / (ids[i] + ".png"));
    OrderedLayout layout;
    if (cfg.baseline) {
      layout = full_page_layout(image.dims());
    } else {
      const fs::path lp = cfg.layouts / (ids[i] + ".json");
      if (!fs::exists(lp)) throw InvalidInput("missing layout " + lp.string());
      layout = load_layout(lp);
    }
    OcrEngineSpec spec = base;
    if (spec.kind == EngineKind::mock_atlas) {
      spec.atlas = std::make_shared<MockAtlas>(load_atlas(cfg.atlas / (ids[i] + ".json")));
    }
    auto engine = make_engine(spec);
    PageText text;
    if (layout.boxes.empty()) {
      text.page_id = ids[i];
    } else {
      text = run_page_ocr(ids[i], image, layout, *engine,
                          RunOptions{spec.max_concurrency, spec.retries, spec.padding});
    }
    calls += engine->calls();
    for (const auto& e : text.entries) {
      if (!e.ok) log_page(ids[i], "box " + std::to_string(e.order_index) + ": " + e.detail);
    }
    write_json_file(cfg.output / (ids[i] + ".json"), page_text_to_json(text));
    write_text_file(cfg.output / (ids[i] + ".txt"), join_form_feed(text.segment_texts()));
  });
  std::cerr << "ocr: " << calls.load() << " engine calls\n";
  return summarize(ids, errors, "ocr");
}

int cmd_ocr_eval(const Config& cfg) {
  require_dir(cfg.pred, "--pred");
  require_dir(cfg.gt, "--gt");
  std::vector<std::string> ids;
  for (const auto& [id, p] : list_pages(cfg.gt, {".txt"})) ids.push_back(id);
  const OcrOptions opts{cfg.word_level ? EditGranularity::word : EditGranularity::character};

  std::vector<std::optional<OcrReport>> reports(ids.size());
  const auto errors = for_each_page(ids.size(), cfg.workers, [&](std::size_t i) {
    std::vector<std::string> segments;
    const fs::path pj = cfg.pred / (ids[i] + ".json"), pt = cfg.pred / (ids[i] + ".txt");
    if (fs::exists(pj)) {
      segments = page_text_from_json(read_json_file(pj)).segment_texts();
    } else if (fs::exists(pt)) {
      segments = split_form_feed(read_text_file(pt));
    } else {
      throw InvalidInput("no prediction for page");
    }
    OcrReport r = evaluate_ocr(segments, read_text_file(cfg.gt / (ids[i] + ".txt")), opts);
    r.page_id = ids[i];
    reports[i] = std::move(r);
  });
  std::vector<OcrReport> ok;
  std::vector<PageFailure> failures;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (errors[i].empty()) {
      ok.push_back(std::move(*reports[i]));
    } else {
      failures.push_back({ids[i], errors[i]});
    }
  }
  const int status = summarize(ids, errors, "ocr-eval");
  const auto corpus = aggregate_ocr(std::move(ok), std::move(failures), opts.edit);
  if (!cfg.output.empty()) write_json_file(cfg.output, ocr_report_to_json(corpus));

  auto fmt = [](const std::optional<double>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  std::cout << "pages " << corpus.pages.size() << "  edit " << fmt(corpus.mean_edit_distance)
            << "  roa " << fmt(corpus.mean_roa) << "  recall " << fmt(corpus.mean_word_recall) << "\n";
  return status;
}

int cmd_stats(const Config& cfg) {
  AnnotationFile all;
  std::map<std::string, std::string> labels;
  auto add = [&](const fs::path& p, const char* split) {
    require_file(p, split ? split : "--annotations");
    AnnotationFile a = load_annotations(p);
    std::set<std::string> seen;
    for (const auto& page : all.pages) seen.insert(page.page_id);
    for (auto& page : a.pages) {
      if (seen.contains(page.page_id)) {
        throw InvalidInput("page '" + page.page_id + "' appears in more than one file");
      }
      if (split) labels[page.page_id] = split;
      all.pages.push_back(std::move(page));
    }
    all.splits.merge(a.splits);
  };
  if (!cfg.annotations.empty()) add(cfg.annotations, nullptr);
  for (const auto& p : cfg.train) add(p, "train");
  for (const auto& p : cfg.test) add(p, "test");
  if (cfg.annotations.empty() && cfg.train.empty() && cfg.test.empty()) {
    throw InvalidInput("give an annotation file or --train/--test files");
  }
  const auto stats = summarize_dataset(all, labels);
  std::cout << format_stats_table(stats);
  if (!cfg.output.empty()) write_json_file(cfg.output, stats_to_json(stats));
  return kOk;
}

int cmd_synth(const Config& cfg) {
  if (cfg.output.empty()) throw InvalidInput("--output is required");
  if (cfg.pages < 1) throw InvalidInput("--pages must be >= 1");
  SynthSpec spec;
  if (!cfg.spec.empty()) {
    const json j = read_json_file(cfg.spec);
    try {
      check_keys(j, {"page_width", "page_height", "blocks", "grid"}, cfg.spec.string());
      const int w = j.at("page_width").get<int>(), h = j.at("page_height").get<int>();
      if (j.contains("grid")) {
        const auto& g = j.at("grid");
        spec = grid_spec(w, h, g.value("columns", 2), g.value("blocks_per_column", 2),
                         g.value("margin", 32), g.value("gutter", 32));
      } else {
        spec.page_width = w;
        spec.page_height = h;
        for (const auto& b : j.at("blocks")) {
          const auto& bb = b.at("bbox");
          const auto cls = class_from_name(b.value("class", std::string("article body")));
          if (!cls) throw SchemaError(cfg.spec.string() + ": unknown class");
          spec.blocks.push_back({BBox{bb.at(0).get<int>(), bb.at(1).get<int>(), bb.at(2).get<int>(),
                                      bb.at(3).get<int>()},
                                 *cls});
        }
      }
    } catch (const json::exception& e) {
      throw SchemaError(cfg.spec.string() + ": " + e.what());
    }
  } else {
    spec = grid_spec(cfg.page_width > 0 ? cfg.page_width : 800,
                     cfg.page_height > 0 ? cfg.page_height : 1000, cfg.columns,
                     cfg.blocks_per_column);
  }
  spec.validate();

  for (const char* sub : {"images", "gt", "atlas", "classmaps"}) fs::create_directories(cfg.output / sub);
  AnnotationFile ann;
  ann.pages.resize(static_cast<std::size_t>(cfg.pages));
  std::vector<std::string> ids;
  for (int i = 0; i < cfg.pages; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "page_%04d", i);
    ids.emplace_back(buf);
  }
  const auto errors = for_each_page(ids.size(), cfg.workers, [&](std::size_t i) {
    SynthSpec s = spec;
    s.page_id = ids[i];
    SynthPage page = synth_page(s, cfg.seed + i);
    save_image_png(cfg.output / "images" / (ids[i] + ".png"), page.image);
    write_text_file(cfg.output / "gt" / (ids[i] + ".txt"), page.gt_text);
    save_atlas(cfg.output / "atlas" / (ids[i] + ".json"), page.atlas);
    save_classmap_png(cfg.output / "classmaps" / (ids[i] + ".png"),
                      rasterize_annotations(page.annotation, page.annotation.dims()));
    ann.pages[i] = std::move(page.annotation);
  });
  const int status = summarize(ids, errors, "synth");
  if (status == kOk) save_annotations(cfg.output / "annotations.json", ann);
  return status;
}

// ---------------------------------------------------------------- parsing

namespace {

std::optional<fs::path> find_config(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return fs::path(args[i + 1]);
    if (args[i].starts_with("--config=")) return fs::path(args[i].substr(9));
  }
  return std::nullopt;
}

void common_flags(CLI::App& sub, Config& c, std::string& config_path) {
  sub.add_option("--config", config_path, "JSON config; flags override its values");
  sub.add_option("--workers", c.workers, "Pages processed in parallel")->check(CLI::PositiveNumber);
  sub.add_option("--seed", c.seed, "Random seed");
  sub.add_option("--method", c.method, "geometric | heuristic | geometric+heuristic | separators")
      ->check(CLI::IsMember({"geometric", "heuristic", "geometric+heuristic", "separators"}));
  sub.add_flag("--baseline", c.baseline, "OCR the whole page as one block");
  sub.add_flag("--overlay", c.overlay, "Write an overlay PNG per page");
}

}  // namespace

int run(const std::vector<std::string>& args) {
  Config c;
  std::string config_path;
  try {
    if (auto p = find_config(args)) apply_config_file(*p, c);
  } catch (const std::exception& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kInvalidInput;
  }

  CLI::App app{"layoutkit: newspaper layout post-processing and OCR evaluation", "layoutkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* post = app.add_subcommand("postprocess", "Segmentation maps to ordered layouts");
  common_flags(*post, c, config_path);
  post->add_option("--input", c.input, "Directory of class-map PNGs, .lpm prob maps or separator masks");
  post->add_option("--output", c.output, "Directory for <id>.json layouts");
  post->add_option("--images", c.images, "Page images; sets page size and overlay background");
  post->add_option("--page-width", c.page_width);
  post->add_option("--page-height", c.page_height);
  post->add_option("--open-radius", c.geometric.open_radius);
  post->add_option("--open-iterations", c.geometric.open_iterations);
  post->add_option("--min-area", c.geometric.min_area);
  post->add_option("--epsilon", c.geometric.cluster_epsilon, "Vertex clustering distance (px)");
  post->add_option("--x-tolerance", c.heuristic.x_align_tolerance);
  post->add_option("--column-overlap", c.heuristic.column_overlap_ratio);

  auto* leval = app.add_subcommand("layout-eval", "Pixel-wise layout scores");
  common_flags(*leval, c, config_path);
  leval->add_option("--pred", c.pred, "Predicted class-map PNGs");
  leval->add_option("--gt", c.gt, "Ground-truth class-map PNGs");
  leval->add_option("--annotations", c.annotations, "Ground truth as an annotation file instead");
  leval->add_flag("--exclude-background", c.exclude_background);
  leval->add_option("--output", c.output, "Report JSON");

  auto* ocr = app.add_subcommand("ocr", "Run OCR over layout blocks");
  common_flags(*ocr, c, config_path);
  ocr->add_option("--images", c.images, "Page image PNGs");
  ocr->add_option("--layouts", c.layouts, "Layout JSON files");
  ocr->add_option("--output", c.output, "Directory for page texts");
  ocr->add_option("--engine", c.engine, "mock | command")->check(CLI::IsMember({"mock", "command"}));
  ocr->add_option("--atlas", c.atlas, "Mock atlas directory (<id>.json)");
  ocr->add_option("--command", c.command_template, "Shell template with {input} and {lang}");
  ocr->add_option("--lang", c.lang);
  ocr->add_option("--timeout", c.timeout_seconds, "Seconds per engine call");
  ocr->add_option("--concurrency", c.max_concurrency, "Engine calls in flight per page");
  ocr->add_option("--retries", c.retries);
  ocr->add_option("--padding", c.padding);

  auto* oeval = app.add_subcommand("ocr-eval", "Score page texts against ground truth");
  common_flags(*oeval, c, config_path);
  oeval->add_option("--pred", c.pred, "OCR output directory");
  oeval->add_option("--gt", c.gt, "Ground-truth <id>.txt directory");
  oeval->add_flag("--word-level", c.word_level, "Edit distance over words");
  oeval->add_option("--output", c.output, "Report JSON");

  auto* stats = app.add_subcommand("stats", "Instance counts per category and split");
  common_flags(*stats, c, config_path);
  stats->add_option("annotations", c.annotations, "Annotation file");
  stats->add_option("--train", c.train, "Training-split annotation file(s)");
  stats->add_option("--test", c.test, "Test-split annotation file(s)");
  stats->add_option("--output", c.output, "Stats JSON");

  auto* synth = app.add_subcommand("synth", "Write a synthetic corpus");
  common_flags(*synth, c, config_path);
  synth->add_option("--output", c.output, "Corpus directory");
  synth->add_option("--spec", c.spec, "Page spec JSON");
  synth->add_option("--pages", c.pages);
  synth->add_option("--columns", c.columns);
  synth->add_option("--blocks-per-column", c.blocks_per_column);
  synth->add_option("--page-width", c.page_width);
  synth->add_option("--page-height", c.page_height);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (post->parsed()) return cmd_postprocess(c);
    if (leval->parsed()) return cmd_layout_eval(c);
    if (ocr->parsed()) return cmd_ocr(c);
    if (oeval->parsed()) return cmd_ocr_eval(c);
    if (stats->parsed()) return cmd_stats(c);
    if (synth->parsed()) return cmd_synth(c);
  } catch (const InvalidInput& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const SchemaError& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ParseError& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "layoutkit: " << e.what() << "\n";
    return kPartialFailure;
  }
  return kInvalidInput;
}

int run(int argc, const char* const* argv) { return run(std::vector<std::string>(argv, argv + argc)); }

}  // namespace layoutkit::cli
