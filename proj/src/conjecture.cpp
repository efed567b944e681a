/*
 *   Copyright 2026 The slowsync Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "slowsync/conjecture.hpp"

#include <bit>
#include <set>
#include <string>

#include "slowsync/errors.hpp"

namespace slowsync {

bool ConjectureReport::holds() const {
  for (const auto& level : levels) {
    if (!level.violations.empty()) return false;
  }
  return true;
}

std::size_t coloring_bound(std::size_t n) { return n * n + 3 - 3 * n; }

std::vector<Digraph> primitive_digraphs(std::size_t n, std::size_t max_degree) {
  if (n == 0 || n > 9) throw ResourceLimit("primitive digraph enumeration supports 1..9 vertices");
  std::vector<std::uint64_t> rows_allowed;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) <= max_degree) rows_allowed.push_back(mask);
  }
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Digraph> out;
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::uint64_t> rows(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) rows[v] = rows_allowed[digit[v]];
    Digraph d(n, rows);
    if (is_primitive(d) && seen.insert(canonical_form(d)).second) out.push_back(std::move(d));
    std::size_t i = n;
    while (i > 0 && digit[i - 1] + 1 == rows_allowed.size()) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  return out;
}

ConjectureReport conjecture_sweep(std::size_t vertices, const ConjectureOptions& options) {
  if (options.letters == 0) throw InvalidInput("need at least one letter");
  if (vertices > options.max_vertices && !options.force) {
    throw ResourceLimit("coloring sweep over " + std::to_string(vertices) + " vertices exceeds the cap of " +
                        std::to_string(options.max_vertices) + "; pass --force to run it anyway");
  }
  ConjectureReport report;
  report.letters = options.letters;
  for (std::size_t n = 2; n <= vertices; ++n) {
    ConjectureLevel level;
    level.n = n;
    level.bound = coloring_bound(n);
    for (Digraph& d : primitive_digraphs(n, options.letters)) {
      ++level.digraphs;
      const auto length = min_coloring_reset_length(d, options.letters);
      if (!length || *length > level.bound) level.violations.push_back({d, length});
      if (!length) continue;
      if (*length > level.max_min_length) {
        level.max_min_length = *length;
        level.extremal.clear();
      }
      if (*length == level.max_min_length) level.extremal.push_back(std::move(d));
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace slowsync
