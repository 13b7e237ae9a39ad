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

#include "okc/corpus.hpp"

#include <algorithm>

#include <json.hpp>

#include "okc/frontend.hpp"

#ifndef OKC_CORPUS_DIR
#define OKC_CORPUS_DIR "corpus"
#endif

namespace okc {

Corpus::Corpus(std::filesystem::path root) : root_(std::move(root)) {
  const auto manifest = nlohmann::json::parse(read_file(root_ / "manifest.json"));
  for (const auto& e : manifest.at("entries")) {
    Registered r;
    r.name = e.at("name").get<std::string>();
    r.source = e.at("source").get<std::string>();
    r.expected = e.value("expected", std::vector<std::string>{});
    std::sort(r.expected.begin(), r.expected.end());
    if (e.contains("golden")) r.golden = e.at("golden").get<std::string>();
    if (e.contains("snapshot")) r.snapshot = e.at("snapshot").get<TimePoint>();
    entries_.push_back(std::move(r));
  }
}

const Corpus& Corpus::bundled() {
  static const Corpus kCorpus{std::filesystem::path(OKC_CORPUS_DIR)};
  return kCorpus;
}

std::vector<std::string> Corpus::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

bool Corpus::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Registered& e) { return e.name == name; });
}

CorpusEntry Corpus::load(std::string_view name) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Registered& e) { return e.name == name; });
  if (it == entries_.end()) throw UnknownExample(std::string(name));
  CorpusEntry entry;
  entry.name = it->name;
  entry.source = root_ / it->source;
  entry.text = read_file(entry.source);
  entry.expected_codes = it->expected;
  if (it->golden) entry.golden_dir = root_ / *it->golden;
  entry.snapshot = it->snapshot;
  return entry;
}

CorpusEntry load_example(std::string_view name) { return Corpus::bundled().load(name); }

}  // namespace okc
