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
#include <bit>
#include <cstdio>
#include <numeric>
#include <string>

#include "slowsync/census.hpp"
#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

CensusResult empty_result(std::size_t n, std::size_t k, std::size_t min_length) {
  CensusResult r;
  r.n = n;
  r.k = k;
  r.icdfa.min_value = min_length;
  r.automata.min_value = min_length;
  r.automata_up_to_letters.min_value = min_length;
  return r;
}

std::vector<std::vector<Letter>> letter_permutations(std::size_t k) {
  std::vector<Letter> perm(k);
  std::iota(perm.begin(), perm.end(), Letter{0});
  std::vector<std::vector<Letter>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Reset length and class-representative tests on raw tables, with buffers
// reused across calls. One instance per thread.
class AutomatonKernel {
 public:
  static constexpr std::size_t kMaxDenseStates = 16;

  AutomatonKernel(std::size_t n, std::size_t k)
      : n_(n), k_(k), perms_(letter_permutations(k)), mergeable_(n * n, 0),
        visited_(std::max<std::size_t>(1, (std::size_t{1} << std::min(n, kMaxDenseStates)) / 64), 0),
        names_(n), order_(n) {}

  std::optional<std::size_t> reset_length(std::span<const State> table) {
    if (n_ == 1) return 0;
    if (!pairs_mergeable(table)) return std::nullopt;
    if (n_ > kMaxDenseStates) {
      ResetOptions options;
      options.max_states = kMaxStates;
      return shortest_reset_length(Dfa(n_, k_, {table.begin(), table.end()}), options);
    }
    std::fill(visited_.begin(), visited_.end(), 0);
    const std::uint64_t full = StateSet::full(n_).bits();
    mark(full);
    layer_.assign(1, full);
    for (std::size_t depth = 1; !layer_.empty(); ++depth) {
      next_layer_.clear();
      for (std::uint64_t set : layer_) {
        for (std::size_t a = 0; a < k_; ++a) {
          std::uint64_t image = 0;
          for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) {
            image |= std::uint64_t{1} << table[static_cast<std::size_t>(std::countr_zero(bits)) * k_ + a];
          }
          if (!mark(image)) continue;
          if ((image & (image - 1)) == 0) return depth;
          next_layer_.push_back(image);
        }
      }
      layer_.swap(next_layer_);
    }
    throw InternalError("census kernel: mergeable pairs but no reset word");
  }

  struct Representative {
    bool of_automaton = true;
    bool up_to_letters = true;
  };

  // Is this canonical table the least BFS-canonical table of its automaton
  // over all admissible initial states (and letter orders)?
  Representative representative(std::span<const State> table) {
    Representative r;
    std::uint64_t starts = 0;
    for (State s = 0; s < n_; ++s) {
      if (reaches_all(table, s)) starts |= std::uint64_t{1} << s;
    }
    for (std::size_t p = 0; p < perms_.size(); ++p) {
      for (std::uint64_t bits = starts; bits != 0; bits &= bits - 1) {
        const auto s = static_cast<State>(std::countr_zero(bits));
        if (p == 0 && s == 0) continue;
        if (relabelled_is_smaller(table, s, perms_[p])) {
          r.up_to_letters = false;
          if (p == 0) {
            r.of_automaton = false;
            return r;
          }
          break;
        }
      }
      if (!r.up_to_letters) break;
    }
    return r;
  }

 private:
  bool mark(std::uint64_t set) {
    std::uint64_t& word = visited_[set >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (set & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  }

  // Fixpoint form of the pair-automaton criterion.
  bool pairs_mergeable(std::span<const State> table) {
    std::fill(mergeable_.begin(), mergeable_.end(), 0);
    std::size_t remaining = n_ * (n_ - 1) / 2;
    bool changed = true;
    while (changed && remaining > 0) {
      changed = false;
      for (State p = 0; p < n_; ++p) {
        for (State q = p + 1; q < n_; ++q) {
          if (mergeable_[p * n_ + q]) continue;
          for (std::size_t a = 0; a < k_; ++a) {
            const State p2 = table[p * k_ + a];
            const State q2 = table[q * k_ + a];
            if (p2 == q2 || mergeable_[std::min(p2, q2) * n_ + std::max(p2, q2)]) {
              mergeable_[p * n_ + q] = 1;
              --remaining;
              changed = true;
              break;
            }
          }
        }
      }
    }
    return remaining == 0;
  }

  bool reaches_all(std::span<const State> table, State start) const {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
        const auto q = static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t a = 0; a < k_; ++a) next |= std::uint64_t{1} << table[q * k_ + a];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == StateSet::full(n_).bits();
  }

  // BFS renumbering from `start` with letters read in `perm` order,
  // compared entry by entry against `table`. `start` must reach all states.
  bool relabelled_is_smaller(std::span<const State> table, State start, const std::vector<Letter>& perm) {
    constexpr State kUnset = ~State{0};
    std::fill(names_.begin(), names_.end(), kUnset);
    names_[start] = 0;
    order_[0] = start;
    std::size_t discovered = 1;
    std::size_t position = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const State q = order_[i];
      for (Letter a : perm) {
        const State r = table[q * k_ + a];
        if (names_[r] == kUnset) {
          names_[r] = static_cast<State>(discovered);
          order_[discovered++] = r;
        }
        const State entry = names_[r];
        if (entry != table[position]) return entry < table[position];
        ++position;
      }
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<Letter>> perms_;
  std::vector<std::uint8_t> mergeable_;
  std::vector<std::uint64_t> visited_;
  std::vector<std::uint64_t> layer_;
  std::vector<std::uint64_t> next_layer_;
  std::vector<State> names_;
  std::vector<State> order_;
};

std::size_t resolve_workers(std::size_t workers) {
  return workers == 0 ? static_cast<std::size_t>(omp_get_max_threads()) : workers;
}

}  // namespace

std::uint64_t census_space_cap() { return count_icdfa(7, 2); }

namespace {

// 705068085303 -> "7.1e11"
std::string approximate(std::uint64_t value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1e", static_cast<double>(value));
  std::string text = buffer;
  const std::size_t e = text.find('e');
  std::string exponent = text.substr(e + 1);
  if (exponent.front() == '+') exponent.erase(0, 1);
  exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
  return text.substr(0, e) + "e" + exponent;
}

}  // namespace

void check_census_cap(std::size_t n, std::size_t k, bool force) {
  if (force) return;
  const std::uint64_t space = count_icdfa(n, k);
  if (space > census_space_cap()) {
    throw ResourceLimit("census of n=" + std::to_string(n) + ", k=" + std::to_string(k) + " covers " +
                        std::to_string(space) + " (about " + approximate(space) + ") initially-connected automata (cap " +
                        std::to_string(census_space_cap()) + "); pass --force to run it anyway");
  }
}

CensusResult reset_length_census_serial(std::size_t n, std::size_t k, std::size_t min_length) {
  CensusResult result = empty_result(n, k, min_length);
  const auto perms = letter_permutations(k);
  ResetOptions options;
  options.max_states = kMaxStates;
  IcdfaStream stream(n, k);
  while (stream.advance()) {
    const Dfa dfa = stream.current();
    const std::optional<std::size_t> length =
        is_synchronizing(dfa) ? shortest_reset_length(dfa, options) : std::nullopt;
    result.icdfa.add(length);

    const std::vector<State> table(dfa.table().begin(), dfa.table().end());
    bool least = true;
    bool least_up_to_letters = true;
    for (std::size_t p = 0; p < perms.size() && least_up_to_letters; ++p) {
      for (State s = 0; s < n; ++s) {
        const auto relabelled = bfs_canonical_table(dfa, s, perms[p]);
        if (relabelled && *relabelled < table) {
          least_up_to_letters = false;
          if (p == 0) least = false;
          break;
        }
      }
    }
    if (least) result.automata.add(length);
    if (least_up_to_letters) result.automata_up_to_letters.add(length);
  }
  return result;
}

CensusResult census_of_slices(std::span<const IcdfaSlice> work, std::size_t n, std::size_t k,
                              const CensusOptions& options) {
  std::vector<CensusResult> partial(work.size(), empty_result(n, k, options.min_length));
  const int threads = static_cast<int>(resolve_workers(options.workers));
  const auto count = static_cast<std::ptrdiff_t>(work.size());

#pragma omp parallel num_threads(threads)
  {
    AutomatonKernel kernel(n, k);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      CensusResult& out = partial[static_cast<std::size_t>(i)];
      IcdfaStream stream(work[static_cast<std::size_t>(i)]);
      while (stream.advance()) {
        const auto table = stream.table();
        const auto length = kernel.reset_length(table);
        const auto rep = kernel.representative(table);
        out.icdfa.add(length);
        if (rep.of_automaton) out.automata.add(length);
        if (rep.up_to_letters) out.automata_up_to_letters.add(length);
      }
    }
  }

  CensusResult result = empty_result(n, k, options.min_length);
  for (const auto& p : partial) result.merge(p);
  return result;
}

CensusResult reset_length_census(std::size_t n, std::size_t k, const CensusOptions& options) {
  check_census_cap(n, k, options.force);
  const auto work = slices(n, k, default_slice_depth(n, k));
  return census_of_slices(work, n, k, options);
}

}  // namespace slowsync
