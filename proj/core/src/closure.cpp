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

#include <algorithm>

#include "okc/reasoner.hpp"

namespace okc {

namespace {

std::string describe(const std::vector<Identifier>& cycle) {
  std::string s;
  for (const auto& n : cycle) s += n + " -> ";
  if (!cycle.empty()) s += cycle.front();
  return s;
}

using Graph = std::map<Identifier, std::vector<Identifier>>;

// Colour-marking DFS. Each back edge yields one cycle, rotated so its
// smallest name comes first; duplicates are dropped.
std::vector<std::vector<Identifier>> cycles_of(const Graph& g) {
  enum class Mark { White, Grey, Black };
  std::map<Identifier, Mark> mark;
  for (const auto& [n, _] : g) mark[n] = Mark::White;
  std::vector<Identifier> stack;
  std::set<std::vector<Identifier>> found;

  auto visit = [&](auto&& self, const Identifier& n) -> void {
    mark[n] = Mark::Grey;
    stack.push_back(n);
    if (auto it = g.find(n); it != g.end()) {
      for (const auto& m : it->second) {
        if (!mark.contains(m)) continue;
        if (mark[m] == Mark::Grey) {
          auto from = std::find(stack.begin(), stack.end(), m);
          std::vector<Identifier> cycle(from, stack.end());
          std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
          found.insert(std::move(cycle));
        } else if (mark[m] == Mark::White) {
          self(self, m);
        }
      }
    }
    stack.pop_back();
    mark[n] = Mark::Black;
  };
  for (const auto& [n, _] : g) {
    if (mark[n] == Mark::White) visit(visit, n);
  }
  return {found.begin(), found.end()};
}

}  // namespace

CycleError::CycleError(std::vector<Identifier> cycle)
    : std::runtime_error("taxonomy cycle: " + describe(cycle)), cycle_(std::move(cycle)) {}

std::vector<std::vector<Identifier>> find_taxonomy_cycles(const Ontology& o) {
  Graph g;
  for (const auto& [name, c] : o.concepts()) g[name] = c.direct_subsumers();
  return cycles_of(g);
}

std::vector<std::vector<Identifier>> find_particularization_cycles(const Ontology& o) {
  Graph g;
  for (const auto& [name, r] : o.relations()) {
    g[name] = r.particularizes ? std::vector<Identifier>{*r.particularizes} : std::vector<Identifier>{};
  }
  return cycles_of(g);
}

SubsumptionClosure::SubsumptionClosure(const Ontology& o) {
  for (const auto& [name, _] : o.concepts()) names_.push_back(name);
  const std::size_t n = names_.size();
  const std::size_t words = (n + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words, 0));

  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : o.find_concept(names_[i])->direct_subsumers()) {
      const auto j = index_of(p);
      if (j >= 0) up[i].push_back(static_cast<std::size_t>(j));
    }
  }

  // Post-order DFS: a row is the union of its parents' finished rows.
  std::vector<int> state(n, 0);  // 0 new, 1 open, 2 done
  std::vector<std::size_t> path;
  auto finish = [&](auto&& self, std::size_t i) -> void {
    state[i] = 1;
    path.push_back(i);
    rows_[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (std::size_t p : up[i]) {
      if (state[p] == 1) {
        auto from = std::find(path.begin(), path.end(), p);
        std::vector<Identifier> cycle;
        for (auto it = from; it != path.end(); ++it) cycle.push_back(names_[*it]);
        throw CycleError(std::move(cycle));
      }
      if (state[p] == 0) self(self, p);
      for (std::size_t w = 0; w < words; ++w) rows_[i][w] |= rows_[p][w];
    }
    path.pop_back();
    state[i] = 2;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (state[i] == 0) finish(finish, i);
  }
}

std::ptrdiff_t SubsumptionClosure::index_of(std::string_view c) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), c);
  if (it == names_.end() || *it != c) return -1;
  return it - names_.begin();
}

bool SubsumptionClosure::subsumes(std::string_view general, std::string_view specific) const {
  const auto g = index_of(general);
  const auto s = index_of(specific);
  if (g < 0 || s < 0) return false;
  return bit(static_cast<std::size_t>(s), static_cast<std::size_t>(g));
}

std::vector<Identifier> SubsumptionClosure::subsumers(std::string_view c) const {
  std::vector<Identifier> out;
  const auto s = index_of(c);
  if (s < 0) return out;
  for (std::size_t g = 0; g < names_.size(); ++g) {
    if (bit(static_cast<std::size_t>(s), g)) out.push_back(names_[g]);
  }
  return out;
}

std::vector<Identifier> SubsumptionClosure::subsumees(std::string_view c) const {
  std::vector<Identifier> out;
  const auto g = index_of(c);
  if (g < 0) return out;
  for (std::size_t s = 0; s < names_.size(); ++s) {
    if (bit(s, static_cast<std::size_t>(g))) out.push_back(names_[s]);
  }
  return out;
}

}  // namespace okc
