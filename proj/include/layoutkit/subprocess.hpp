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

// Shell command execution with captured output and a hard deadline, plus a
// self-deleting temporary file.

#include <chrono>
#include <filesystem>
#include <string>

namespace layoutkit::process {

struct Result {
  // WEXITSTATUS, or 128 + signal number when the child was killed.
  int exit_status = 0;
  bool timed_out = false;
  std::string out;
  std::string err;
};

// Runs `/bin/sh -c command` in its own process group; on timeout the whole
// group is killed.
Result run_shell(const std::string& command, std::chrono::milliseconds timeout);

// Single-quotes `arg` for /bin/sh.
std::string shell_quote(const std::string& arg);

class TempFile {
 public:
  explicit TempFile(const std::string& suffix);
  ~TempFile();
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace layoutkit::process
