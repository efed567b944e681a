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

// Exhaustive check of the coloring bound: every primitive digraph on n
// vertices with out-degree at most k has a synchronizing k-letter coloring
// with reset length at most n^2-3n+3.

#ifndef SLOWSYNC_CONJECTURE_HPP
#define SLOWSYNC_CONJECTURE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "slowsync/digraph.hpp"

namespace slowsync {

struct ConjectureOptions {
  std::size_t letters = 2;
  /// Sweeps above this many vertices are refused unless forced.
  std::size_t max_vertices = 5;
  bool force = false;
};

struct ColoringRecord {
  Digraph digraph;
  /// Empty if no coloring synchronizes.
  std::optional<std::size_t> min_length;
};

struct ConjectureLevel {
  std::size_t n = 0;
  std::size_t bound = 0;
  /// Isomorphism classes of primitive digraphs examined.
  std::size_t digraphs = 0;
  std::size_t max_min_length = 0;
  /// Digraphs attaining max_min_length.
  std::vector<Digraph> extremal;
  /// Digraphs above the bound or without a synchronizing coloring.
  std::vector<ColoringRecord> violations;
};

struct ConjectureReport {
  std::size_t letters = 0;
  std::vector<ConjectureLevel> levels;

  bool holds() const;
};

/// n^2-3n+3.
std::size_t coloring_bound(std::size_t n);

/// One representative per isomorphism class of primitive digraphs on n
/// vertices with every out-degree in [1, max_degree]. n <= 9.
std::vector<Digraph> primitive_digraphs(std::size_t n, std::size_t max_degree);

/// Sweeps n = 2..vertices. A single vertex is skipped: its only digraph is a
/// loop, reset by the empty word.
ConjectureReport conjecture_sweep(std::size_t vertices, const ConjectureOptions& options = {});

}  // namespace slowsync

#endif  // SLOWSYNC_CONJECTURE_HPP
