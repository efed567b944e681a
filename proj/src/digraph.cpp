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

#include "slowsync/digraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

std::uint64_t full_mask(std::size_t n) { return StateSet::full(n).bits(); }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

ZeroOneMatrix ZeroOneMatrix::from_strings(const std::vector<std::string>& rows) {
  ZeroOneMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidInput("matrix rows must have length n");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1') throw InvalidInput("matrix entries must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

Digraph::Digraph(std::size_t n, std::vector<std::uint64_t> successor_masks)
    : n_(n), rows_(std::move(successor_masks)) {
  if (n_ == 0 || n_ > kMaxStates) {
    throw InvalidInput("digraph needs between 1 and " + std::to_string(kMaxStates) + " vertices");
  }
  if (rows_.size() != n_) throw InvalidInput("one successor set per vertex required");
  const std::uint64_t valid = full_mask(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (rows_[v] == 0) throw InvalidInput("vertex " + std::to_string(v) + " has no outgoing edge");
    if (rows_[v] & ~valid) throw InvalidInput("edge target out of range at vertex " + std::to_string(v));
  }
}

Digraph Digraph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0 || n > kMaxStates) throw InvalidInput("bad vertex count");
  std::vector<std::uint64_t> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    rows[u] |= std::uint64_t{1} << v;
  }
  return Digraph(n, std::move(rows));
}

std::size_t Digraph::out_degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }

std::size_t Digraph::max_out_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, out_degree(v));
  return best;
}

std::size_t Digraph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < n_; ++v) total += out_degree(v);
  return total;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : StateSet(rows_[u]).members()) out.emplace_back(u, v);
  }
  return out;
}

Digraph from_matrix(const ZeroOneMatrix& m) {
  std::vector<std::uint64_t> rows(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.at(i, j)) rows[i] |= std::uint64_t{1} << j;
    }
    if (rows[i] == 0) throw InvalidInput("matrix row " + std::to_string(i) + " is all zero");
  }
  return Digraph(m.size(), std::move(rows));
}

ZeroOneMatrix to_matrix(const Digraph& d) {
  ZeroOneMatrix m(d.vertices());
  for (auto [u, v] : d.edges()) m.set(u, v);
  return m;
}

Digraph underlying_digraph(const Dfa& dfa) {
  std::vector<std::uint64_t> rows(dfa.states(), 0);
  for (State q = 0; q < dfa.states(); ++q) {
    for (State r : dfa.row(q)) rows[q] |= std::uint64_t{1} << r;
  }
  return Digraph(dfa.states(), std::move(rows));
}

Digraph complete_with_loops(std::size_t n) { return Digraph(n, std::vector<std::uint64_t>(n, full_mask(n))); }

bool is_complete_with_loops(const Digraph& d) {
  const std::uint64_t all = full_mask(d.vertices());
  return std::all_of(d.rows().begin(), d.rows().end(), [all](std::uint64_t r) { return r == all; });
}

Digraph boolean_product(const Digraph& lhs, const Digraph& rhs) {
  if (lhs.vertices() != rhs.vertices()) throw InvalidInput("product of digraphs of different order");
  std::vector<std::uint64_t> rows(lhs.vertices(), 0);
  for (Vertex u = 0; u < lhs.vertices(); ++u) {
    for (std::uint64_t bits = lhs.successors(u); bits != 0; bits &= bits - 1) {
      rows[u] |= rhs.successors(static_cast<Vertex>(std::countr_zero(bits)));
    }
  }
  return Digraph(lhs.vertices(), std::move(rows));
}

Digraph power(const Digraph& d, std::size_t t) {
  if (t == 0) throw InvalidInput("digraph power needs t >= 1");
  std::optional<Digraph> result;
  Digraph base = d;
  while (true) {
    if (t & 1U) result = result ? boolean_product(*result, base) : base;
    t >>= 1U;
    if (t == 0) break;
    base = boolean_product(base, base);
  }
  return *result;
}

namespace {

std::uint64_t reachable_from(std::span<const std::uint64_t> rows, Vertex start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
      next |= rows[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.vertices();
  const std::uint64_t all = full_mask(n);
  if (reachable_from(d.rows(), 0) != all) return false;
  std::vector<std::uint64_t> reverse(n, 0);
  for (auto [u, v] : d.edges()) reverse[v] |= std::uint64_t{1} << u;
  return reachable_from(reverse, 0) == all;
}

std::size_t period(const Digraph& d) {
  if (!is_strongly_connected(d)) return 0;
  const std::size_t n = d.vertices();
  std::vector<std::size_t> level(n, std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : StateSet(d.successors(u)).members()) {
      if (level[v] == std::numeric_limits<std::size_t>::max()) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t g = 0;
  for (auto [u, v] : d.edges()) {
    const auto diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
    g = std::gcd(g, static_cast<std::size_t>(diff < 0 ? -diff : diff));
  }
  return g;
}

bool is_primitive(const Digraph& d) { return period(d) == 1; }

std::size_t exponent_ceiling(std::size_t n) { return (n - 1) * (n - 1) + 1; }

std::optional<std::size_t> exponent(const Digraph& d) {
  if (!is_primitive(d)) return std::nullopt;
  const std::size_t ceiling = exponent_ceiling(d.vertices());
  Digraph p = d;
  for (std::size_t t = 1; t <= ceiling; ++t) {
    if (is_complete_with_loops(p)) return t;
    p = boolean_product(p, d);
  }
  throw InternalError("primitive digraph on " + std::to_string(d.vertices()) +
                      " vertices exceeded the exponent ceiling " + std::to_string(ceiling));
}

std::vector<std::size_t> simple_cycle_lengths(const Digraph& d) {
  const std::size_t n = d.vertices();
  if (n > 12) throw ResourceLimit("simple cycle enumeration limited to 12 vertices");
  std::vector<std::size_t> lengths;
  // Each cycle is found once, from its smallest vertex.
  for (Vertex start = 0; start < n; ++start) {
    const std::uint64_t allowed = ~((std::uint64_t{1} << start) - 1);
    struct Frame {
      Vertex v;
      std::uint64_t pending;
    };
    std::vector<Frame> stack{{start, d.successors(start) & allowed}};
    std::uint64_t on_path = std::uint64_t{1} << start;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pending == 0) {
        on_path &= ~(std::uint64_t{1} << top.v);
        stack.pop_back();
        continue;
      }
      const auto w = static_cast<Vertex>(std::countr_zero(top.pending));
      top.pending &= top.pending - 1;
      if (w == start) {
        lengths.push_back(stack.size());
      } else if (!((on_path >> w) & 1U)) {
        on_path |= std::uint64_t{1} << w;
        stack.push_back({w, d.successors(w) & allowed});
      }
    }
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::uint64_t> canonical_form(const Digraph& d) {
  const std::size_t n = d.vertices();
  if (n > 9) throw ResourceLimit("digraph canonical form limited to 9 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> candidate(n);
  do {
    // perm maps old vertex -> new vertex.
    for (Vertex u = 0; u < n; ++u) {
      std::uint64_t mapped = 0;
      for (std::uint64_t bits = d.successors(u); bits != 0; bits &= bits - 1) {
        mapped |= std::uint64_t{1} << perm[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      candidate[perm[u]] = mapped;
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Digraph& lhs, const Digraph& rhs) {
  return lhs.vertices() == rhs.vertices() && lhs.edge_count() == rhs.edge_count() &&
         canonical_form(lhs) == canonical_form(rhs);
}

ColoringStream::ColoringStream(const Digraph& d, std::size_t letters)
    : ColoringStream(d, letters, 0, std::numeric_limits<std::uint64_t>::max()) {}

ColoringStream::ColoringStream(const Digraph& d, std::size_t letters, std::uint64_t begin, std::uint64_t end)
    : n_(d.vertices()), k_(letters) {
  if (k_ == 0) throw InvalidInput("colorings need at least one letter");
  targets_.resize(n_);
  choices_.resize(n_);
  total_ = 1;
  for (Vertex v = 0; v < n_; ++v) {
    targets_[v] = StateSet(d.successors(v)).members();
    const std::size_t degree = targets_[v].size();
    if (degree <= k_) {
      std::vector<std::uint8_t> map(k_, 0);
      while (true) {
        std::uint64_t hit = 0;
        for (auto e : map) hit |= std::uint64_t{1} << e;
        if (static_cast<std::size_t>(std::popcount(hit)) == degree) choices_[v].push_back(map);
        std::size_t i = k_;
        while (i > 0 && map[i - 1] + 1U == degree) map[--i] = 0;
        if (i == 0) break;
        ++map[i - 1];
      }
    }
    total_ = saturating_mul(total_, choices_[v].size());
  }
  begin_ = std::min(begin, total_);
  end_ = std::min(end, total_);
  digits_.assign(n_, 0);
  seek(begin_);
}

void ColoringStream::seek(std::uint64_t index) {
  position_ = index;
  if (index >= end_) return;
  for (std::size_t v = n_; v-- > 0;) {
    const std::uint64_t radix = choices_[v].size();
    digits_[v] = static_cast<std::size_t>(index % radix);
    index /= radix;
  }
}

std::optional<Dfa> ColoringStream::next() {
  if (position_ >= end_) return std::nullopt;
  std::vector<State> table(n_ * k_);
  for (Vertex v = 0; v < n_; ++v) {
    const auto& map = choices_[v][digits_[v]];
    for (std::size_t a = 0; a < k_; ++a) table[v * k_ + a] = targets_[v][map[a]];
  }
  for (std::size_t v = n_; v-- > 0;) {
    if (++digits_[v] < choices_[v].size()) break;
    digits_[v] = 0;
  }
  ++position_;
  return Dfa(n_, k_, std::move(table));
}

std::uint64_t count_colorings(const Digraph& d, std::size_t letters) {
  return ColoringStream(d, letters).size();
}

std::uint64_t count_colorings_up_to_letters(const Digraph& d, std::size_t letters) {
  ColoringStream stream(d, letters);
  std::vector<Letter> perm(letters);
  std::vector<State> permuted;
  std::uint64_t classes = 0;
  while (auto dfa = stream.next()) {
    // Count each orbit once, at its lexicographically least table.
    bool least = true;
    std::iota(perm.begin(), perm.end(), Letter{0});
    while (least && std::next_permutation(perm.begin(), perm.end())) {
      permuted.clear();
      for (State q = 0; q < dfa->states(); ++q) {
        for (Letter a : perm) permuted.push_back(dfa->next(q, a));
      }
      least = !std::lexicographical_compare(permuted.begin(), permuted.end(), dfa->table().begin(),
                                            dfa->table().end());
    }
    if (least) ++classes;
  }
  return classes;
}

std::optional<std::size_t> min_coloring_reset_length(const Digraph& d, std::size_t letters,
                                                     const ColoringOptions& options) {
  ColoringStream stream(d, letters);
  if (stream.size() > options.max_colorings) {
    throw ResourceLimit("digraph has " + std::to_string(stream.size()) + " colorings, cap is " +
                        std::to_string(options.max_colorings));
  }
  const std::size_t floor = d.vertices() == 1 ? 0 : 1;
  std::optional<std::size_t> best;
  while (auto dfa = stream.next()) {
    const auto length = shortest_reset_length(*dfa);
    if (length && (!best || *length < *best)) {
      best = length;
      if (*best == floor) break;
    }
  }
  return best;
}

}  // namespace slowsync
