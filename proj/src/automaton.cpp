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

#include "slowsync/automaton.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "slowsync/errors.hpp"

namespace slowsync {

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for (std::uint64_t bits = bits_; bits != 0; bits &= bits - 1) {
    out.push_back(static_cast<State>(std::countr_zero(bits)));
  }
  return out;
}

Word Word::parse(std::string_view spelling) {
  Word w;
  for (char c : spelling) {
    if (c < 'a' || c > 'z') {
      throw InvalidInput(std::string("word spelling must use letters a-z, got '") + c + "'");
    }
    w.push_back(static_cast<Letter>(c - 'a'));
  }
  return w;
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::repeat(std::size_t times) const {
  Word out;
  out.letters_.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += *this;
  return out;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs += rhs;
  return lhs;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter a : w) {
    if (a < 26) {
      out.push_back(static_cast<char>('a' + a));
    } else {
      out += "[" + std::to_string(a) + "]";
    }
  }
  return out;
}

Dfa::Dfa(std::size_t states, std::size_t letters, std::vector<State> table)
    : n_(states), k_(letters), table_(std::move(table)) {
  if (n_ == 0 || k_ == 0) throw InvalidInput("automaton needs at least one state and one letter");
  if (n_ > kMaxStates) {
    throw InvalidInput("automaton has " + std::to_string(n_) + " states; at most " +
                       std::to_string(kMaxStates) + " are supported");
  }
  if (table_.size() != n_ * k_) throw InvalidInput("transition table size does not match n*k");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n_) {
      throw InvalidInput("transition (" + std::to_string(i / k_) + ", " + std::to_string(i % k_) +
                         ") targets state " + std::to_string(table_[i]) + " out of range");
    }
  }
}

Dfa Dfa::from_rows(const std::vector<std::vector<State>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("empty transition table");
  const std::size_t k = rows.front().size();
  std::vector<State> table;
  table.reserve(rows.size() * k);
  for (const auto& r : rows) {
    if (r.size() != k) throw InvalidInput("ragged transition table");
    table.insert(table.end(), r.begin(), r.end());
  }
  return Dfa(rows.size(), k, std::move(table));
}

namespace {

void check_word(const Dfa& dfa, const Word& w) {
  for (Letter a : w) {
    if (a >= dfa.letters()) {
      throw InvalidInput("letter " + std::to_string(a) + " outside alphabet of size " +
                         std::to_string(dfa.letters()));
    }
  }
}

// Backward BFS on the pair automaton. For every unordered pair {p, q}
// (p < q, index p*n+q) records the length of a shortest merging word and
// the first letter of one such word.
struct PairMergeTable {
  static constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

  std::size_t n = 0;
  std::vector<std::uint32_t> distance;
  std::vector<Letter> first_letter;

  std::size_t index(State p, State q) const { return p < q ? p * n + q : q * n + p; }
  bool all_mergeable() const {
    for (State p = 0; p < n; ++p) {
      for (State q = p + 1; q < n; ++q) {
        if (distance[index(p, q)] == kUnreached) return false;
      }
    }
    return true;
  }
};

PairMergeTable pair_merge_table(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  PairMergeTable t;
  t.n = n;
  t.distance.assign(n * n, PairMergeTable::kUnreached);
  t.first_letter.assign(n * n, 0);

  // Reverse edges of the pair automaton, restricted to non-merging moves.
  std::vector<std::vector<std::pair<std::uint32_t, Letter>>> preimages(n * n);
  std::deque<std::uint32_t> queue;
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      const auto from = static_cast<std::uint32_t>(t.index(p, q));
      for (Letter a = 0; a < k; ++a) {
        const State p2 = dfa.next(p, a);
        const State q2 = dfa.next(q, a);
        if (p2 == q2) {
          if (t.distance[from] == PairMergeTable::kUnreached) {
            t.distance[from] = 1;
            t.first_letter[from] = a;
            queue.push_back(from);
          }
        } else {
          preimages[t.index(p2, q2)].emplace_back(from, a);
        }
      }
    }
  }
  while (!queue.empty()) {
    const std::uint32_t pair = queue.front();
    queue.pop_front();
    for (auto [from, a] : preimages[pair]) {
      if (t.distance[from] == PairMergeTable::kUnreached) {
        t.distance[from] = t.distance[pair] + 1;
        t.first_letter[from] = a;
        queue.push_back(from);
      }
    }
  }
  return t;
}

// Visited set over 64-bit subset masks: a dense bitmap for small n, hashing
// above that.
class VisitedSubsets {
 public:
  explicit VisitedSubsets(std::size_t n) : dense_(n <= kDenseLimit) {
    if (dense_) bitmap_.assign(((std::size_t{1} << n) + 63) / 64, 0);
  }

  // Returns true if newly inserted.
  bool insert(std::uint64_t mask) {
    if (dense_) {
      std::uint64_t& word = bitmap_[mask >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (mask & 63);
      if (word & bit) return false;
      word |= bit;
      return true;
    }
    return hashed_.insert(mask).second;
  }

 private:
  static constexpr std::size_t kDenseLimit = 24;
  bool dense_;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<std::uint64_t> hashed_;
};

void check_cap(const Dfa& dfa, const ResetOptions& options) {
  if (dfa.states() > options.max_states) {
    throw ResourceLimit("subset search limited to " + std::to_string(options.max_states) +
                        " states, automaton has " + std::to_string(dfa.states()) +
                        " (raise with SLOWSYNC_MAX_STATES)");
  }
}

}  // namespace

StateSet apply(const Dfa& dfa, StateSet s, const Word& w) {
  if (s.bits() & ~StateSet::full(dfa.states()).bits()) {
    throw InvalidInput("state set contains states outside 0.." + std::to_string(dfa.states() - 1));
  }
  check_word(dfa, w);
  for (Letter a : w) s = dfa.image(s, a);
  return s;
}

State apply(const Dfa& dfa, State q, const Word& w) {
  if (q >= dfa.states()) throw InvalidInput("state " + std::to_string(q) + " out of range");
  check_word(dfa, w);
  for (Letter a : w) q = dfa.next(q, a);
  return q;
}

bool is_reset_word(const Dfa& dfa, const Word& w) {
  return apply(dfa, StateSet::full(dfa.states()), w).size() == 1;
}

bool is_synchronizing(const Dfa& dfa) {
  if (dfa.states() == 1) return true;
  return pair_merge_table(dfa).all_mergeable();
}

std::size_t ResetOptions::default_state_cap() {
  if (const char* env = std::getenv("SLOWSYNC_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, kMaxStates);
  }
  return 26;
}

std::optional<ResetResult> shortest_reset_word(const Dfa& dfa, const ResetOptions& options) {
  check_cap(dfa, options);
  const StateSet start = StateSet::full(dfa.states());
  if (start.size() == 1) return ResetResult{};
  if (!is_synchronizing(dfa)) return std::nullopt;

  struct Node {
    StateSet set;
    std::uint32_t parent;
    Letter letter;
  };
  std::vector<Node> nodes{{start, 0, 0}};
  VisitedSubsets visited(dfa.states());
  visited.insert(start.bits());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const StateSet current = nodes[head].set;
    for (Letter a = 0; a < dfa.letters(); ++a) {
      const StateSet next = dfa.image(current, a);
      if (!visited.insert(next.bits())) continue;
      nodes.push_back({next, static_cast<std::uint32_t>(head), a});
      if (next.size() == 1) {
        std::vector<Letter> letters;
        for (std::size_t i = nodes.size() - 1; i != 0; i = nodes[i].parent) {
          letters.push_back(nodes[i].letter);
        }
        std::reverse(letters.begin(), letters.end());
        ResetResult result;
        result.length = letters.size();
        result.witness = Word(std::move(letters));
        return result;
      }
    }
  }
  throw InternalError("pair criterion reported synchronizing but subset search found no reset word");
}

std::optional<std::size_t> shortest_reset_length(const Dfa& dfa, const ResetOptions& options) {
  check_cap(dfa, options);
  const StateSet start = StateSet::full(dfa.states());
  if (start.size() == 1) return 0;
  if (!is_synchronizing(dfa)) return std::nullopt;

  VisitedSubsets visited(dfa.states());
  visited.insert(start.bits());
  std::vector<StateSet> layer{start};
  std::vector<StateSet> next_layer;
  for (std::size_t depth = 1; !layer.empty(); ++depth) {
    next_layer.clear();
    for (StateSet current : layer) {
      for (Letter a = 0; a < dfa.letters(); ++a) {
        const StateSet next = dfa.image(current, a);
        if (!visited.insert(next.bits())) continue;
        if (next.size() == 1) return depth;
        next_layer.push_back(next);
      }
    }
    layer.swap(next_layer);
  }
  throw InternalError("pair criterion reported synchronizing but subset search found no reset word");
}

std::optional<Word> greedy_reset_word(const Dfa& dfa) {
  const std::size_t n = dfa.states();
  if (n == 1) return Word{};
  const PairMergeTable table = pair_merge_table(dfa);
  if (!table.all_mergeable()) return std::nullopt;

  Word word;
  StateSet current = StateSet::full(n);
  while (current.size() > 1) {
    const std::vector<State> members = current.members();
    State best_p = 0;
    State best_q = 0;
    std::uint32_t best = PairMergeTable::kUnreached;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::uint32_t d = table.distance[table.index(members[i], members[j])];
        if (d < best) {
          best = d;
          best_p = members[i];
          best_q = members[j];
        }
      }
    }
    Word piece;
    State p = best_p;
    State q = best_q;
    while (p != q) {
      const Letter a = table.first_letter[table.index(p, q)];
      piece.push_back(a);
      p = dfa.next(p, a);
      q = dfa.next(q, a);
    }
    for (Letter a : piece) current = dfa.image(current, a);
    word += piece;
  }
  return word;
}

bool is_initially_connected(const Dfa& dfa, State start) {
  if (start >= dfa.states()) throw InvalidInput("start state out of range");
  StateSet seen = StateSet::singleton(start);
  std::vector<State> stack{start};
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (State r : dfa.row(q)) {
      if (!seen.contains(r)) {
        seen.insert(r);
        stack.push_back(r);
      }
    }
  }
  return seen.size() == dfa.states();
}

std::optional<std::vector<State>> bfs_canonical_table(const Dfa& dfa, State start,
                                                      std::span<const Letter> letter_order) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  constexpr State kUnset = std::numeric_limits<State>::max();
  std::vector<State> new_name(n, kUnset);
  std::vector<State> old_name;
  old_name.reserve(n);
  new_name[start] = 0;
  old_name.push_back(start);
  std::vector<State> out;
  out.reserve(n * k);
  for (std::size_t i = 0; i < old_name.size(); ++i) {
    const State q = old_name[i];
    for (Letter a : letter_order) {
      const State r = dfa.next(q, a);
      if (new_name[r] == kUnset) {
        new_name[r] = static_cast<State>(old_name.size());
        old_name.push_back(r);
      }
      out.push_back(new_name[r]);
    }
  }
  if (old_name.size() != n) return std::nullopt;
  return out;
}

std::vector<State> canonical_form(const Dfa& dfa, bool up_to_letters) {
  const std::size_t n = dfa.states();
  const std::size_t k = dfa.letters();
  std::vector<Letter> letters(k);
  std::iota(letters.begin(), letters.end(), Letter{0});

  std::optional<std::vector<State>> best;
  do {
    for (State s = 0; s < n; ++s) {
      auto table = bfs_canonical_table(dfa, s, letters);
      if (table && (!best || *table < *best)) best = std::move(table);
    }
  } while (up_to_letters && std::next_permutation(letters.begin(), letters.end()));

  std::vector<State> header{0, static_cast<State>(n), static_cast<State>(k)};
  if (best) {
    header.insert(header.end(), best->begin(), best->end());
    return header;
  }

  // No state reaches every other one: brute force over all renamings.
  if (n > 9) throw ResourceLimit("canonical form of a non-initially-connected automaton limited to 9 states");
  header[0] = 1;
  std::vector<State> perm(n);
  std::vector<State> candidate(n * k);
  std::iota(letters.begin(), letters.end(), Letter{0});
  do {
    std::iota(perm.begin(), perm.end(), State{0});
    do {
      // perm maps old state -> new state.
      for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) candidate[perm[q] * k + a] = perm[dfa.next(q, letters[a])];
      }
      if (!best || candidate < *best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (up_to_letters && std::next_permutation(letters.begin(), letters.end()));
  header.insert(header.end(), best->begin(), best->end());
  return header;
}

bool isomorphic(const Dfa& lhs, const Dfa& rhs, bool up_to_letters) {
  if (lhs.states() != rhs.states() || lhs.letters() != rhs.letters()) return false;
  return canonical_form(lhs, up_to_letters) == canonical_form(rhs, up_to_letters);
}

}  // namespace slowsync
