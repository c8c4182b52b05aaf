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

// Batch front end: one function per subcommand over a shared configuration.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "layoutkit/geometric.hpp"
#include "layoutkit/heuristic.hpp"
#include "layoutkit/ocr_engine.hpp"

namespace layoutkit::cli {

enum ExitCode : int { kOk = 0, kPartialFailure = 1, kInvalidInput = 2 };

namespace fs = std::filesystem;

struct Config {
  std::string method = "geometric+heuristic";
  GeometricParams geometric;
  HeuristicParams heuristic;

  // Engine: "mock" reads <atlas>/<id>.json, "command" runs command_template.
  std::string engine = "mock";
  std::string command_template;
  std::string lang = "eng";
  double timeout_seconds = 60.0;
  int max_concurrency = 4;
  int retries = 1;
  int padding = 0;

  int workers = 1;
  std::uint64_t seed = 0;
  bool baseline = false;
  bool overlay = false;
  bool exclude_background = false;
  bool word_level = false;

  // Page size for scaling map-resolution boxes when no images are given;
  // 0 = the map's own size.
  int page_width = 0;
  int page_height = 0;

  fs::path input, output, images, layouts, pred, gt, atlas, annotations, spec;
  std::vector<fs::path> train, test;

  // synth
  int pages = 1;
  int columns = 2;
  int blocks_per_column = 2;

  void validate() const;
};

// Throws SchemaError on unknown keys or mistyped values.
void apply_config_file(const fs::path& path, Config& config);

int cmd_postprocess(const Config& config);
int cmd_layout_eval(const Config& config);
int cmd_ocr(const Config& config);
int cmd_ocr_eval(const Config& config);
int cmd_stats(const Config& config);
int cmd_synth(const Config& config);

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

}  // namespace layoutkit::cli
