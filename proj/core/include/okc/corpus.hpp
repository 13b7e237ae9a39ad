// Copyright 2026 The okc Authors
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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "okc/model.hpp"

namespace okc {

class UnknownExample : public std::runtime_error {
 public:
  explicit UnknownExample(const std::string& name) : std::runtime_error("unknown corpus entry '" + name + "'") {}
};

struct CorpusEntry {
  std::string name;
  std::filesystem::path source;
  std::string text;
  std::vector<std::string> expected_codes;  // sorted, with multiplicity
  std::optional<std::filesystem::path> golden_dir;
  std::optional<TimePoint> snapshot;
};

/// The registered example models, listed in `<root>/manifest.json`.
class Corpus {
 public:
  explicit Corpus(std::filesystem::path root);

  /// The corpus shipped with the source tree.
  static const Corpus& bundled();

  const std::filesystem::path& root() const { return root_; }
  std::vector<std::string> names() const;
  bool contains(std::string_view name) const;

  /// Throws UnknownExample for unregistered names.
  CorpusEntry load(std::string_view name) const;

 private:
  struct Registered {
    std::string name;
    std::string source;
    std::vector<std::string> expected;
    std::optional<std::string> golden;
    std::optional<TimePoint> snapshot;
  };
  std::filesystem::path root_;
  std::vector<Registered> entries_;
};

CorpusEntry load_example(std::string_view name);

}  // namespace okc
