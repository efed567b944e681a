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

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "slowsync/automaton.hpp"
#include "slowsync/errors.hpp"
#include "support.hpp"

using namespace slowsync;

TEST_SUITE("automata") {

TEST_CASE("words parse and print") {
  const Word w = Word::parse("abba");
  CHECK(w == Word{0, 1, 1, 0});
  CHECK(to_string(w) == "abba");
  CHECK(to_string(Word{}).empty());
  CHECK(to_string(Word{26}) == "[26]");
  CHECK((Word::parse("ab").repeat(3) + Word::parse("a")) == Word::parse("abababa"));
  CHECK(Word::parse("ab").repeat(0).empty());
  CHECK_THROWS_AS(Word::parse("aB"), InvalidInput);
}

TEST_CASE("state sets") {
  StateSet s = StateSet::full(4);
  CHECK(s.size() == 4);
  CHECK(s.members() == std::vector<State>{0, 1, 2, 3});
  CHECK(StateSet::full(64).size() == 64);
  StateSet t;
  CHECK(t.empty());
  t.insert(5);
  CHECK(t == StateSet::singleton(5));
  CHECK(t.contains(5));
  CHECK_FALSE(t.contains(4));
}

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(Dfa(0, 2, {}), InvalidInput);
  CHECK_THROWS_AS(Dfa(2, 0, {}), InvalidInput);
  CHECK_THROWS_AS(Dfa(2, 2, {0, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(Dfa(2, 1, {0, 2}), InvalidInput);
  CHECK_THROWS_AS(Dfa(65, 1, std::vector<State>(65, 0)), InvalidInput);
  CHECK_THROWS_AS(Dfa::from_rows({{0, 1}, {0}}), InvalidInput);
  const Dfa d = Dfa::from_rows({{1, 0}, {1, 1}});
  CHECK(d.next(0, 0) == 1);
  CHECK(d.next(0, 1) == 0);
  CHECK(d.states() == 2);
  CHECK(d.letters() == 2);
}

TEST_CASE("applying words") {
  // a: 0->1->2->2, b: identity
  const Dfa d = Dfa::from_rows({{1, 0}, {2, 1}, {2, 2}});
  CHECK(apply(d, State{0}, Word::parse("aa")) == 2);
  CHECK(apply(d, State{0}, Word{}) == 0);
  CHECK(apply(d, StateSet::full(3), Word::parse("a")) == StateSet(0b110));
  CHECK(is_reset_word(d, Word::parse("aa")));
  CHECK_FALSE(is_reset_word(d, Word::parse("a")));
  CHECK_THROWS_AS(apply(d, State{0}, Word{2}), InvalidInput);
  CHECK_THROWS_AS(apply(d, State{3}, Word{0}), InvalidInput);
}

TEST_CASE("trivial automata") {
  const Dfa one = Dfa::from_rows({{0, 0}});
  CHECK(is_synchronizing(one));
  const auto r = shortest_reset_word(one);
  REQUIRE(r);
  CHECK(r->length == 0);
  CHECK(r->witness.empty());

  const Dfa permutation = Dfa::from_rows({{1, 0}, {2, 2}, {0, 1}});
  CHECK_FALSE(is_synchronizing(permutation));
  CHECK_FALSE(shortest_reset_word(permutation));
  CHECK_FALSE(shortest_reset_length(permutation));
  CHECK_FALSE(greedy_reset_word(permutation));
}

TEST_CASE("state cap") {
  const Dfa d = Dfa::from_rows({{1}, {2}, {3}, {3}});
  ResetOptions small;
  small.max_states = 3;
  CHECK_THROWS_AS(shortest_reset_word(d, small), ResourceLimit);
  CHECK_THROWS_AS(shortest_reset_length(d, small), ResourceLimit);
  CHECK(is_synchronizing(d));

  ::setenv("SLOWSYNC_MAX_STATES", "3", 1);
  CHECK(ResetOptions::default_state_cap() == 3);
  CHECK_THROWS_AS(shortest_reset_length(d, ResetOptions{}), ResourceLimit);
  ::unsetenv("SLOWSYNC_MAX_STATES");
  CHECK(ResetOptions::default_state_cap() == 26);
}

TEST_CASE("exact search agrees with word enumeration on every 3-state automaton") {
  for (std::size_t k = 1; k <= 2; ++k) {
    oracle::for_each_table(3, k, [&](const oracle::Table& t) {
      const Dfa d = testing::to_dfa(t, 3, k);
      const auto expected = oracle::reset_length_by_words(t, 3, k, oracle::subset_bound(3));
      const auto length = shortest_reset_length(d);
      REQUIRE(length == expected);
      CHECK(is_synchronizing(d) == expected.has_value());
    });
  }
}

TEST_CASE("pair test agrees with subset search on every 4-state binary automaton") {
  std::size_t synchronizing = 0;
  oracle::for_each_table(4, 2, [&](const oracle::Table& t) {
    const Dfa d = testing::to_dfa(t, 4, 2);
    const bool sync = is_synchronizing(d);
    REQUIRE(sync == shortest_reset_length(d).has_value());
    synchronizing += sync;
  });
  CHECK(synchronizing > 0);
}

TEST_CASE("random automata: exact length, witness, greedy bound") {
  std::mt19937 rng(20260415);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t k = 1 + rng() % 3;
    const oracle::Table t = oracle::random_table(rng, n, k);
    const Dfa d = testing::to_dfa(t, n, k);
    const auto expected = oracle::reset_length_by_words(t, n, k, n <= 4 ? oracle::subset_bound(n) : 16);
    const auto r = shortest_reset_word(d);
    if (n <= 4 || expected) {
      REQUIRE(r.has_value() == expected.has_value());
    }
    if (!r) {
      CHECK_FALSE(is_synchronizing(d));
      continue;
    }
    if (expected) CHECK(r->length == *expected);
    CHECK(r->witness.size() == r->length);
    CHECK(is_reset_word(d, r->witness));
    CHECK(shortest_reset_length(d) == r->length);
    const auto g = greedy_reset_word(d);
    REQUIRE(g);
    CHECK(is_reset_word(d, *g));
    CHECK(g->size() >= r->length);
  }
}

TEST_CASE("witness is deterministic") {
  const Dfa d = Dfa::from_rows({{1, 0}, {2, 1}, {2, 0}});
  const auto first = shortest_reset_word(d);
  const auto second = shortest_reset_word(d);
  REQUIRE(first);
  CHECK(first->witness == second->witness);
}

TEST_CASE("initial connectivity and BFS numbering") {
  const Dfa d = Dfa::from_rows({{2, 0}, {1, 1}, {1, 2}});
  CHECK(is_initially_connected(d, 0));
  CHECK_FALSE(is_initially_connected(d, 1));
  const std::vector<Letter> ab{0, 1};
  const auto t = bfs_canonical_table(d, 0, ab);
  REQUIRE(t);
  // 0 stays 0, 2 is discovered first (becomes 1), then 1 (becomes 2).
  CHECK(*t == std::vector<State>{1, 0, 2, 1, 2, 2});
  CHECK_FALSE(bfs_canonical_table(d, 1, ab));
}

TEST_CASE("canonical form is invariant under renaming") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 3;
    const oracle::Table t = oracle::random_table(rng, n, k);
    const auto perm = oracle::random_permutation(rng, n);
    const auto lperm = oracle::random_permutation(rng, k);
    const Dfa d = testing::to_dfa(t, n, k);
    const Dfa renamed = testing::to_dfa(oracle::relabel(t, n, k, perm, oracle::identity(k)), n, k);
    const Dfa both = testing::to_dfa(oracle::relabel(t, n, k, perm, lperm), n, k);
    CHECK(isomorphic(d, renamed));
    CHECK(isomorphic(d, both, true));
    CHECK(canonical_form(d, true) == canonical_form(both, true));
  }
}

TEST_CASE("canonical form separates classes exactly (3 states, 2 letters)") {
  for (bool up_to_letters : {false, true}) {
    std::set<std::vector<State>> forms;
    std::set<oracle::Table> classes;
    oracle::for_each_table(3, 2, [&](const oracle::Table& t) {
      forms.insert(canonical_form(testing::to_dfa(t, 3, 2), up_to_letters));
      classes.insert(oracle::least_relabelling(t, 3, 2, false, up_to_letters));
    });
    CHECK(forms.size() == classes.size());
  }
}

}  // TEST_SUITE
