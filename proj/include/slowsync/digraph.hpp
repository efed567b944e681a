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

// Digraphs in which every vertex has an outgoing edge, their 0/1 matrices,
// boolean powers, primitivity and exponents, and colorings into automata.

#ifndef SLOWSYNC_DIGRAPH_HPP
#define SLOWSYNC_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slowsync/automaton.hpp"

namespace slowsync {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Square table of 0/1 entries; row i, column j is the edge (i, j).
class ZeroOneMatrix {
 public:
  explicit ZeroOneMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  /// Each row is a string of '0'/'1' characters, e.g. {"1100", "0110", ...}.
  static ZeroOneMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t size() const { return n_; }
  bool at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value = true) { entries_[i * n_ + j] = value ? 1 : 0; }

  bool operator==(const ZeroOneMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> entries_;
};

/// Vertex set 0..n-1 with successor sets stored as 64-bit masks. Loops are
/// allowed, parallel edges are not, and every vertex has out-degree >= 1.
class Digraph {
 public:
  /// Throws InvalidInput if n is 0 or above kMaxStates, a row is empty, or a
  /// row names vertices >= n.
  Digraph(std::size_t n, std::vector<std::uint64_t> successor_masks);

  static Digraph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertices() const { return n_; }
  std::uint64_t successors(Vertex v) const { return rows_[v]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  std::size_t out_degree(Vertex v) const;
  std::size_t max_out_degree() const;
  std::size_t edge_count() const;
  /// Edges sorted by (source, target).
  std::vector<Edge> edges() const;

  bool operator==(const Digraph&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> rows_;
};

/// Throws InvalidInput on an all-zero row.
Digraph from_matrix(const ZeroOneMatrix& m);
ZeroOneMatrix to_matrix(const Digraph& d);

Digraph underlying_digraph(const Dfa& dfa);

Digraph complete_with_loops(std::size_t n);
bool is_complete_with_loops(const Digraph& d);

/// Edge (u, w) iff lhs has (u, v) and rhs has (v, w) for some v.
Digraph boolean_product(const Digraph& lhs, const Digraph& rhs);

/// Paths of length exactly t. Throws InvalidInput for t == 0.
Digraph power(const Digraph& d, std::size_t t);

bool is_strongly_connected(const Digraph& d);

/// gcd of cycle lengths, from BFS levels: gcd over edges (u, v) of
/// level(u) + 1 - level(v). Zero if d is not strongly connected.
std::size_t period(const Digraph& d);

bool is_primitive(const Digraph& d);

/// (n-1)^2 + 1, the largest exponent a primitive digraph on n vertices has.
std::size_t exponent_ceiling(std::size_t n);

/// Least t with power(d, t) complete with loops; empty iff not primitive.
/// Throws InternalError if a primitive digraph overshoots exponent_ceiling.
std::optional<std::size_t> exponent(const Digraph& d);

/// Lengths of all simple cycles (with multiplicity), sorted ascending.
/// Exhaustive DFS; throws ResourceLimit above 12 vertices.
std::vector<std::size_t> simple_cycle_lengths(const Digraph& d);

/// Minimum row-major adjacency string over all vertex permutations, packed
/// one row mask per entry. Equal iff isomorphic. Throws ResourceLimit above
/// 9 vertices.
std::vector<std::uint64_t> canonical_form(const Digraph& d);
bool isomorphic(const Digraph& lhs, const Digraph& rhs);

/// Lazily enumerates every k-letter coloring of a digraph: for each vertex,
/// every map from letters onto its outgoing edges that hits each edge.
/// Order: vertex 0 is the most significant digit; per vertex, letter->edge
/// maps in lexicographic order (edges numbered by ascending target). A
/// stream may be restricted to an index range so that workers can split
/// the enumeration.
class ColoringStream {
 public:
  ColoringStream(const Digraph& d, std::size_t letters);
  ColoringStream(const Digraph& d, std::size_t letters, std::uint64_t begin, std::uint64_t end);

  /// Total number of colorings (saturates at UINT64_MAX).
  std::uint64_t size() const { return total_; }
  std::optional<Dfa> next();
  void reset() { seek(begin_); }

 private:
  void seek(std::uint64_t index);

  std::size_t n_;
  std::size_t k_;
  // Per vertex: the targets of its out-edges, and its admissible letter->edge maps.
  std::vector<std::vector<Vertex>> targets_;
  std::vector<std::vector<std::vector<std::uint8_t>>> choices_;
  std::vector<std::size_t> digits_;
  std::uint64_t total_ = 0;
  std::uint64_t begin_ = 0;
  std::uint64_t end_ = 0;
  std::uint64_t position_ = 0;
};

/// Number of colorings with k letters, and the number of classes after
/// identifying colorings that differ by a renaming of letters.
std::uint64_t count_colorings(const Digraph& d, std::size_t letters);
std::uint64_t count_colorings_up_to_letters(const Digraph& d, std::size_t letters);

struct ColoringOptions {
  std::uint64_t max_colorings = 10'000'000;
};

/// Minimum exact reset length over the synchronizing colorings of d with k
/// letters; empty if none synchronizes. Throws ResourceLimit when d has more
/// than options.max_colorings colorings.
std::optional<std::size_t> min_coloring_reset_length(const Digraph& d, std::size_t letters,
                                                     const ColoringOptions& options = {});

}  // namespace slowsync

#endif  // SLOWSYNC_DIGRAPH_HPP
