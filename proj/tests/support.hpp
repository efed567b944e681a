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

#ifndef SLOWSYNC_TESTS_SUPPORT_HPP
#define SLOWSYNC_TESTS_SUPPORT_HPP

#include <vector>

#include "oracles.hpp"
#include "slowsync/automaton.hpp"
#include "slowsync/digraph.hpp"

namespace testing {

inline slowsync::Dfa to_dfa(const oracle::Table& t, std::size_t n, std::size_t k) {
  return slowsync::Dfa(n, k, std::vector<slowsync::State>(t.begin(), t.end()));
}

inline oracle::Table to_table(const slowsync::Dfa& dfa) {
  return oracle::Table(dfa.table().begin(), dfa.table().end());
}

inline oracle::Matrix to_matrix(const slowsync::Digraph& d) {
  const std::size_t n = d.vertices();
  oracle::Matrix m(n, std::vector<std::uint64_t>(n, 0));
  for (auto [u, v] : d.edges()) m[u][v] = 1;
  return m;
}

/// Every digraph on n vertices with all out-degrees >= 1.
template <typename F>
void for_each_digraph(std::size_t n, F f) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::uint64_t> rows(n, 1);
  while (true) {
    f(slowsync::Digraph(n, rows));
    std::size_t i = n;
    while (i > 0 && rows[i - 1] + 1 == limit) rows[--i] = 1;
    if (i == 0) return;
    ++rows[i - 1];
  }
}

inline slowsync::Digraph random_digraph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(n - 1));
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (edge(rng)) rows[u] |= std::uint64_t{1} << v;
    }
    if (rows[u] == 0) rows[u] = std::uint64_t{1} << pick(rng);
  }
  return slowsync::Digraph(n, rows);
}

}  // namespace testing

#endif  // SLOWSYNC_TESTS_SUPPORT_HPP
