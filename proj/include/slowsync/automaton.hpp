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

// Complete deterministic automata, words acting on state sets, and reset
// word computation (exact subset BFS, pair-automaton synchronizability test,
// greedy baseline).
//
// States and letters are 0-based. Figures that number states 1..n map to
// this library via i -> i-1.

#ifndef SLOWSYNC_AUTOMATON_HPP
#define SLOWSYNC_AUTOMATON_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slowsync {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Largest automaton this library represents; bounded by StateSet's width.
inline constexpr std::size_t kMaxStates = 64;

/// A subset of 0..n-1 stored as a 64-bit mask. Bit q is state q.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet full(std::size_t n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr StateSet singleton(State q) { return StateSet(std::uint64_t{1} << q); }

  constexpr bool contains(State q) const { return (bits_ >> q) & 1U; }
  constexpr void insert(State q) { bits_ |= std::uint64_t{1} << q; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<State> members() const;

  constexpr auto operator<=>(const StateSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// A finite sequence of letter indices. Empty words are allowed.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses "abba" style spelling: 'a' is letter 0, 'b' letter 1, ...
  static Word parse(std::string_view spelling);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter a) { letters_.push_back(a); }
  Word& operator+=(const Word& other);
  /// The word concatenated with itself `times` times.
  Word repeat(std::size_t times) const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word operator+(Word lhs, const Word& rhs);

/// Letters 0..25 spelled a..z; larger letters as "[i]".
std::string to_string(const Word& w);

/// Complete DFA with a row-major n x k transition table.
class Dfa {
 public:
  /// Throws InvalidInput if n or k is zero, n > kMaxStates, the table has the
  /// wrong size, or any entry is out of range.
  Dfa(std::size_t states, std::size_t letters, std::vector<State> table);

  /// rows[q][a] = delta(q, a). All rows must have the same positive length.
  static Dfa from_rows(const std::vector<std::vector<State>>& rows);

  std::size_t states() const { return n_; }
  std::size_t letters() const { return k_; }

  State next(State q, Letter a) const { return table_[q * k_ + a]; }
  std::span<const State> row(State q) const { return {table_.data() + q * k_, k_}; }
  std::span<const State> table() const { return table_; }

  /// Image of a set under one letter. No range checking.
  StateSet image(StateSet s, Letter a) const {
    std::uint64_t out = 0;
    for (std::uint64_t bits = s.bits(); bits != 0; bits &= bits - 1) {
      const auto q = static_cast<State>(std::countr_zero(bits));
      out |= std::uint64_t{1} << table_[q * k_ + a];
    }
    return StateSet(out);
  }

  bool operator==(const Dfa&) const = default;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<State> table_;
};

/// { delta(q, w) : q in s }. Throws InvalidInput on out-of-range letters/states.
StateSet apply(const Dfa& dfa, StateSet s, const Word& w);
State apply(const Dfa& dfa, State q, const Word& w);

bool is_reset_word(const Dfa& dfa, const Word& w);

/// Pair-automaton criterion: every pair of distinct states can be merged.
/// Polynomial; never enumerates subsets.
bool is_synchronizing(const Dfa& dfa);

struct ResetOptions {
  /// Largest state count the subset BFS accepts. Defaults to 26, or to the
  /// value of SLOWSYNC_MAX_STATES when that is set.
  std::size_t max_states = default_state_cap();

  static std::size_t default_state_cap();
};

struct ResetResult {
  std::size_t length = 0;
  Word witness;
};

/// Exact reset length via breadth-first search over images of the full set.
/// Letters are tried in ascending order and the first parent found is kept,
/// so the witness is deterministic. Empty result iff not synchronizing.
/// Throws ResourceLimit if states() > options.max_states.
std::optional<ResetResult> shortest_reset_word(const Dfa& dfa, const ResetOptions& options = {});

/// Same search as shortest_reset_word without parent bookkeeping.
std::optional<std::size_t> shortest_reset_length(const Dfa& dfa, const ResetOptions& options = {});

/// Eppstein-style greedy: repeatedly append a shortest word merging some
/// pair of the current image. An upper bound on the exact length.
std::optional<Word> greedy_reset_word(const Dfa& dfa);

/// True iff every state is reachable from `start`.
bool is_initially_connected(const Dfa& dfa, State start = 0);

/// Renumbers states in order of first discovery when reading rows in state
/// order starting from `start`, letters taken in `letter_order`. Empty if
/// some state is unreachable from `start`.
std::optional<std::vector<State>> bfs_canonical_table(const Dfa& dfa, State start,
                                                      std::span<const Letter> letter_order);

/// Isomorphism-invariant encoding of the automaton: equal for two automata
/// iff they differ by a renaming of states (and, if `up_to_letters`, also a
/// renaming of letters). Automata that are not initially connected from any
/// state fall back to trying every state permutation and are limited to
/// 9 states.
std::vector<State> canonical_form(const Dfa& dfa, bool up_to_letters = false);

bool isomorphic(const Dfa& lhs, const Dfa& rhs, bool up_to_letters = false);

}  // namespace slowsync

#endif  // SLOWSYNC_AUTOMATON_HPP
