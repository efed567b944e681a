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

#include <algorithm>
#include <functional>
#include <limits>

#include "slowsync/census.hpp"
#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

// Can positions [position, n*k) be filled so that every row is read after
// its state was introduced and all n states get introduced? Introducing a
// new state at every remaining position is the most permissive choice.
bool icdfa_feasible(std::size_t n, std::size_t k, std::size_t position, std::size_t discovered) {
  for (std::size_t t = position; t < n * k; ++t) {
    if (t / k >= discovered) return false;
    if (discovered < n) ++discovered;
  }
  return discovered == n;
}

}  // namespace

IcdfaStream::IcdfaStream(std::size_t n, std::size_t k) : IcdfaStream(IcdfaSlice{n, k, {}}) {}

IcdfaStream::IcdfaStream(const IcdfaSlice& slice)
    : n_(slice.n), k_(slice.k), fixed_(slice.prefix.size()), table_(slice.n * slice.k, 0),
      discovered_before_(slice.n * slice.k + 1, 0) {
  if (n_ == 0 || k_ == 0) throw InvalidInput("ICDFA enumeration needs n, k >= 1");
  if (n_ > kMaxStates) throw InvalidInput("too many states");
  if (fixed_ > n_ * k_) throw InvalidInput("slice prefix longer than the transition table");
  std::size_t m = 1;
  discovered_before_[0] = 1;
  for (std::size_t p = 0; p < fixed_; ++p) {
    const State v = slice.prefix[p];
    if (p / k_ >= m || v > m || v >= n_) {
      throw InvalidInput("slice prefix is not a canonical ICDFA prefix");
    }
    if (v == m) ++m;
    table_[p] = v;
    discovered_before_[p + 1] = m;
  }
}

bool IcdfaStream::feasible(std::size_t position, std::size_t discovered) const {
  return icdfa_feasible(n_, k_, position, discovered);
}

bool IcdfaStream::complete_from(std::size_t position) {
  for (std::size_t t = position; t < table_.size(); ++t) {
    const std::size_t m = discovered_before_[t];
    if (t / k_ >= m) return false;
    const std::size_t top = m < n_ ? m : m - 1;
    bool placed = false;
    for (std::size_t v = 0; v <= top && !placed; ++v) {
      const std::size_t next_m = v == m ? m + 1 : m;
      if (feasible(t + 1, next_m)) {
        table_[t] = static_cast<State>(v);
        discovered_before_[t + 1] = next_m;
        placed = true;
      }
    }
    if (!placed) return false;
  }
  return discovered_before_[table_.size()] == n_;
}

bool IcdfaStream::advance() {
  if (exhausted_) return false;
  if (!started_) {
    started_ = true;
    if (!feasible(fixed_, discovered_before_[fixed_]) || !complete_from(fixed_)) exhausted_ = true;
    return !exhausted_;
  }
  for (std::size_t p = table_.size(); p-- > fixed_;) {
    const std::size_t m = discovered_before_[p];
    const std::size_t top = m < n_ ? m : m - 1;
    for (std::size_t v = table_[p] + 1; v <= top; ++v) {
      const std::size_t next_m = v == m ? m + 1 : m;
      if (feasible(p + 1, next_m)) {
        table_[p] = static_cast<State>(v);
        discovered_before_[p + 1] = next_m;
        if (complete_from(p + 1)) return true;
        throw InternalError("feasible ICDFA prefix failed to complete");
      }
    }
  }
  exhausted_ = true;
  return false;
}

std::vector<Dfa> enumerate_icdfa(std::size_t n, std::size_t k) {
  std::vector<Dfa> out;
  IcdfaStream stream(n, k);
  while (stream.advance()) out.push_back(stream.current());
  return out;
}

std::uint64_t count_icdfa(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw InvalidInput("ICDFA count needs n, k >= 1");
  using Wide = unsigned __int128;
  const Wide cap = std::numeric_limits<std::uint64_t>::max();
  // ways[m] = completions of positions [t, n*k) with m states introduced.
  std::vector<Wide> ways(n + 2, 0);
  ways[n] = 1;
  for (std::size_t t = n * k; t-- > 0;) {
    std::vector<Wide> prev(n + 2, 0);
    for (std::size_t m = 1; m <= n; ++m) {
      if (t / k >= m) continue;
      Wide w = static_cast<Wide>(m) * ways[m];
      if (m < n) w += ways[m + 1];
      prev[m] = std::min(w, cap);
    }
    ways.swap(prev);
  }
  return static_cast<std::uint64_t>(ways[1]);
}

std::vector<IcdfaSlice> slices(std::size_t n, std::size_t k, std::size_t depth) {
  if (n == 0 || k == 0) throw InvalidInput("slices need n, k >= 1");
  if (depth > n * k) throw InvalidInput("slice depth exceeds n*k");
  std::vector<IcdfaSlice> out;
  std::vector<State> prefix;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t position, std::size_t m) {
    if (position == depth) {
      if (icdfa_feasible(n, k, position, m)) out.push_back({n, k, prefix});
      return;
    }
    if (position / k >= m) return;
    const std::size_t top = m < n ? m : m - 1;
    for (std::size_t v = 0; v <= top; ++v) {
      prefix.push_back(static_cast<State>(v));
      extend(position + 1, v == m ? m + 1 : m);
      prefix.pop_back();
    }
  };
  extend(0, 1);
  return out;
}

std::size_t default_slice_depth(std::size_t n, std::size_t k) {
  for (std::size_t depth = 0; depth < n * k; ++depth) {
    if (slices(n, k, depth).size() >= 64) return depth;
  }
  return n * k;
}

}  // namespace slowsync
