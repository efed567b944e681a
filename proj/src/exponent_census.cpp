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

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "slowsync/census.hpp"
#include "slowsync/digraph.hpp"
#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

constexpr std::size_t kKernelMaxVertices = 6;
using Rows = std::array<std::uint64_t, kKernelMaxVertices>;

// Exponent of a digraph given by row masks; empty when not primitive. Any
// strongly connected digraph whose powers are not complete by the ceiling
// is imprimitive.
std::optional<std::size_t> kernel_exponent(const Rows& rows, std::size_t n) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  Rows reverse{};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint64_t bits = rows[u]; bits != 0; bits &= bits - 1) {
      reverse[static_cast<std::size_t>(std::countr_zero(bits))] |= std::uint64_t{1} << u;
    }
  }
  const Rows* const directions[] = {&rows, &reverse};
  for (const Rows* adj : directions) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
        next |= (*adj)[static_cast<std::size_t>(std::countr_zero(bits))];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != full) return std::nullopt;
  }

  const std::size_t ceiling = exponent_ceiling(n);
  Rows power = rows;
  for (std::size_t t = 1; t <= ceiling; ++t) {
    bool complete = true;
    for (std::size_t u = 0; u < n && complete; ++u) complete = power[u] == full;
    if (complete) return t;
    Rows next{};
    for (std::size_t u = 0; u < n; ++u) {
      for (std::uint64_t bits = power[u]; bits != 0; bits &= bits - 1) {
        next[u] |= rows[static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
    power = next;
  }
  return std::nullopt;
}

// Vertex permutations with row-mask relabelling tables, for testing whether
// a labelled digraph is the least member of its isomorphism class.
class PermutationTables {
 public:
  explicit PermutationTables(std::size_t n) : n_(n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const std::size_t masks = std::size_t{1} << n;
    do {
      std::vector<std::uint64_t> table(masks, 0);
      for (std::size_t m = 0; m < masks; ++m) {
        for (std::size_t v = 0; v < n; ++v) {
          if ((m >> v) & 1U) table[m] |= std::uint64_t{1} << perm[v];
        }
      }
      std::vector<std::size_t> inverse(n);
      for (std::size_t v = 0; v < n; ++v) inverse[perm[v]] = v;
      relabel_.push_back(std::move(table));
      inverse_.push_back(std::move(inverse));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  bool is_least(const Rows& rows) const {
    for (std::size_t p = 1; p < relabel_.size(); ++p) {
      const auto& table = relabel_[p];
      const auto& inverse = inverse_[p];
      for (std::size_t i = 0; i < n_; ++i) {
        const std::uint64_t row = table[rows[inverse[i]]];
        if (row != rows[i]) {
          if (row < rows[i]) return false;
          break;
        }
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> relabel_;
  std::vector<std::vector<std::size_t>> inverse_;
};

ExponentCensus empty_census(std::size_t n) {
  ExponentCensus c;
  c.n = n;
  return c;
}

void merge_into(ExponentCensus& into, const ExponentCensus& from) {
  into.labelled.merge(from.labelled);
  into.classes.merge(from.classes);
  for (const auto& [e, reps] : from.top_classes) {
    auto& dst = into.top_classes[e];
    dst.insert(dst.end(), reps.begin(), reps.end());
  }
}

void sort_representatives(ExponentCensus& c) {
  for (auto& [e, reps] : c.top_classes) std::sort(reps.begin(), reps.end());
}

}  // namespace

std::size_t exponent_top_range_low(std::size_t n) { return n * n + 6 - 4 * n; }

ExponentCensus exponent_census(std::size_t n, std::size_t workers, bool force) {
  if (n == 0) throw InvalidInput("exponent census needs n >= 1");
  if (n > kKernelMaxVertices) throw ResourceLimit("exponent census supports at most 6 vertices");
  if (n > 5 && !force) {
    throw ResourceLimit("exponent census of n=" + std::to_string(n) + " covers (2^n-1)^n = " +
                        std::to_string(63ULL * 63 * 63 * 63 * 63 * 63) +
                        " digraphs; pass --force to run it anyway");
  }
  const std::uint64_t row_values = (std::uint64_t{1} << n) - 1;
  const std::size_t top_low = exponent_top_range_low(n);
  const PermutationTables perms(n);
  const int threads = static_cast<int>(workers == 0 ? static_cast<std::size_t>(omp_get_max_threads()) : workers);

  // Slice on the first row; inside a slice, rows 1..n-1 run as an odometer.
  std::vector<ExponentCensus> partial(row_values, empty_census(n));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(row_values); ++s) {
    ExponentCensus& out = partial[static_cast<std::size_t>(s)];
    Rows rows{};
    rows[0] = static_cast<std::uint64_t>(s) + 1;
    for (std::size_t v = 1; v < n; ++v) rows[v] = 1;
    while (true) {
      const auto e = kernel_exponent(rows, n);
      out.labelled.add(e);
      if (perms.is_least(rows)) {
        out.classes.add(e);
        if (e && *e >= top_low) out.top_classes[*e].emplace_back(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
      }
      std::size_t v = n;
      while (v > 1 && rows[v - 1] == row_values) rows[--v] = 1;
      if (v == 1) break;
      ++rows[v - 1];
    }
  }

  ExponentCensus result = empty_census(n);
  for (const auto& p : partial) merge_into(result, p);
  sort_representatives(result);
  return result;
}

ExponentCensus exponent_census_serial(std::size_t n) {
  if (n == 0 || n > 4) throw ResourceLimit("serial exponent census is kept for n <= 4");
  const std::uint64_t row_values = (std::uint64_t{1} << n) - 1;
  const std::size_t top_low = exponent_top_range_low(n);
  ExponentCensus result = empty_census(n);
  std::vector<std::uint64_t> rows(n, 1);
  while (true) {
    const Digraph d(n, rows);
    const auto e = exponent(d);
    result.labelled.add(e);
    if (canonical_form(d) == rows) {
      result.classes.add(e);
      if (e && *e >= top_low) result.top_classes[*e].push_back(rows);
    }
    std::size_t v = n;
    while (v > 0 && rows[v - 1] == row_values) rows[--v] = 1;
    if (v == 0) break;
    ++rows[v - 1];
  }
  sort_representatives(result);
  return result;
}

Histogram theorem3_census(std::size_t n, LowEndSource source) {
  if (n < 5) throw InvalidInput("the exponent gap structure is stated for n >= 5");
  const std::size_t low = exponent_top_range_low(n);
  const std::size_t high = exponent_ceiling(n);
  std::map<std::size_t, std::uint64_t> predicted;
  predicted[high] = 1;
  predicted[high - 1] = 1;
  if (n % 2 == 1) {
    predicted[n * n + 4 - 3 * n] = 1;
    predicted[n * n + 3 - 3 * n] = 1;
    predicted[n * n + 2 - 3 * n] = 2;
  }
  predicted[low] = n % 3 == 0 ? 3 : 4;
  if (source == LowEndSource::Table && n == 9) predicted[low] = 4;

  Histogram h;
  for (std::size_t e = low; e <= high; ++e) {
    const auto it = predicted.find(e);
    h.add(e, 0);
    h.counts[e] = it == predicted.end() ? 0 : it->second;
    h.total += h.counts[e];
  }
  return h;
}

}  // namespace slowsync
