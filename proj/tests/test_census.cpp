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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "slowsync/census.hpp"
#include "slowsync/errors.hpp"
#include "slowsync/families.hpp"
#include "support.hpp"

using namespace slowsync;

TEST_SUITE("census") {

TEST_CASE("enumeration counts match brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const auto classes = oracle::icdfa_classes(n, k);
      CHECK(enumerate_icdfa(n, k).size() == classes.size());
      CHECK(count_icdfa(n, k) == classes.size());
    }
  }
  CHECK(count_icdfa(4, 2) == oracle::icdfa_classes(4, 2).size());
  CHECK(count_icdfa(4, 1) == oracle::icdfa_classes(4, 1).size());
  CHECK(count_icdfa(1, 2) == 1);
  CHECK(count_icdfa(2, 1) == 2);
}

TEST_CASE("every enumerated automaton is canonical, connected and distinct") {
  for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    const std::vector<Letter> order = [&] {
      std::vector<Letter> o(k);
      for (std::size_t a = 0; a < static_cast<std::size_t>(k); ++a) o[a] = static_cast<Letter>(a);
      return o;
    }();
    std::set<std::vector<State>> seen;
    for (const Dfa& d : enumerate_icdfa(n, k)) {
      CHECK(is_initially_connected(d, 0));
      const auto canonical = bfs_canonical_table(d, 0, order);
      REQUIRE(canonical);
      CHECK(std::equal(canonical->begin(), canonical->end(), d.table().begin()));
      CHECK(seen.insert(*canonical).second);
    }
  }
}

TEST_CASE("larger counts") {
  CHECK(count_icdfa(5, 2) == 160675);
  CHECK(count_icdfa(6, 2) == 5931540);
  CHECK(count_icdfa(5, 2) == enumerate_icdfa(5, 2).size());
}

TEST_CASE("slices partition the enumeration") {
  CHECK(slices(3, 2, 0).size() == 1);
  CHECK_THROWS_AS(slices(3, 2, 7), InvalidInput);

  for (std::size_t depth = 0; depth <= 6; ++depth) {
    std::vector<std::vector<State>> joined;
    for (const auto& slice : slices(3, 2, depth)) {
      IcdfaStream stream(slice);
      while (stream.advance()) joined.emplace_back(stream.table().begin(), stream.table().end());
    }
    std::vector<std::vector<State>> whole;
    for (const Dfa& d : enumerate_icdfa(3, 2)) whole.emplace_back(d.table().begin(), d.table().end());
    CHECK(joined == whole);
  }

  const auto parts = slices(4, 2, 2);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(parts[i].prefix != parts[j].prefix);
  }
  CHECK(slices(6, 2, default_slice_depth(6, 2)).size() >= 64);
}

namespace {

// Census at (n, k) from the brute-force classes, with lengths from word search.
Histogram brute_histogram(const std::set<oracle::Table>& classes, std::size_t n, std::size_t k) {
  Histogram h;
  for (const auto& t : classes) h.add(oracle::reset_length_by_words(t, n, k, oracle::subset_bound(n)));
  return h;
}

}  // namespace

TEST_CASE("census matches brute force at three states") {
  for (std::size_t k = 1; k <= 2; ++k) {
    const CensusResult r = reset_length_census(3, k);
    CHECK(r.icdfa == brute_histogram(oracle::icdfa_classes(3, k), 3, k));
    CHECK(r.automata == brute_histogram(oracle::automaton_classes(3, k, false), 3, k));
    CHECK(r.automata_up_to_letters == brute_histogram(oracle::automaton_classes(3, k, true), 3, k));
  }
}

TEST_CASE("census views at four states match brute-force classes") {
  const CensusResult r = reset_length_census(4, 2);
  CHECK(r.icdfa.total == oracle::icdfa_classes(4, 2).size());
  CHECK(r.automata.total == oracle::automaton_classes(4, 2, false).size());
  CHECK(r.automata_up_to_letters.total == oracle::automaton_classes(4, 2, true).size());
  CHECK(r.icdfa.max_value() == 9);
  CHECK(r.automata.count(9) > 0);
  CHECK(r == reset_length_census_serial(4, 2));
}

TEST_CASE("census is independent of worker count") {
  CensusOptions options;
  options.workers = 1;
  const CensusResult one = reset_length_census(5, 2, options);
  for (std::size_t workers : {2, 8}) {
    options.workers = workers;
    CHECK(reset_length_census(5, 2, options) == one);
  }
  CHECK(one == reset_length_census_serial(5, 2));
  CHECK(one.icdfa.max_value() == 16);
  CHECK(one.icdfa.consistent());
  CHECK(one.automata.consistent());
  CHECK(one.automata_up_to_letters.consistent());
  CHECK(one.automata_up_to_letters.count(16) == 1);
}

TEST_CASE("short lengths can be folded") {
  CensusOptions options;
  options.min_length = 10;
  const CensusResult folded = reset_length_census(5, 2, options);
  const CensusResult full = reset_length_census(5, 2);
  std::uint64_t below = 0;
  for (const auto& [len, count] : full.automata.counts) {
    if (len < 10) below += count;
    else CHECK(folded.automata.count(len) == count);
  }
  CHECK(folded.automata.below == below);
  CHECK(folded.automata.total == full.automata.total);
  CHECK(folded.automata.absent == full.automata.absent);
  CHECK(folded.automata.consistent());
  CHECK(folded == reset_length_census_serial(5, 2, 10));
}

TEST_CASE("feasibility cap") {
  CHECK_THROWS_AS(check_census_cap(8, 2, false), ResourceLimit);
  CHECK_NOTHROW(check_census_cap(8, 2, true));
  CHECK_NOTHROW(check_census_cap(7, 2, false));
  CHECK_THROWS_AS(reset_length_census(9, 2), ResourceLimit);
  try {
    check_census_cap(9, 2, false);
  } catch (const ResourceLimit& e) {
    CHECK(std::string(e.what()).find("7.1e11") != std::string::npos);
  }
}

TEST_CASE("histogram merge is associative and commutative") {
  std::mt19937 rng(41);
  auto random_histogram = [&] {
    Histogram h;
    for (int i = 0; i < 20; ++i) {
      if (rng() % 5 == 0) h.add(std::nullopt, 1 + rng() % 3);
      else h.add(rng() % 12, 1 + rng() % 4);
    }
    return h;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Histogram a = random_histogram();
    const Histogram b = random_histogram();
    const Histogram c = random_histogram();
    Histogram ab = a;
    ab.merge(b);
    Histogram ba = b;
    ba.merge(a);
    CHECK(ab == ba);
    Histogram ab_c = ab;
    ab_c.merge(c);
    Histogram bc = b;
    bc.merge(c);
    Histogram a_bc = a;
    a_bc.merge(bc);
    CHECK(ab_c == a_bc);
    CHECK(ab_c.consistent());
    CHECK(ab_c.total == a.total + b.total + c.total);
  }
}

TEST_CASE("histogram folding and CSV") {
  Histogram h;
  h.min_value = 3;
  h.add(1);
  h.add(5, 2);
  h.add(std::nullopt);
  CHECK(h.below == 1);
  CHECK(h.count(5) == 2);
  CHECK(h.count(1) == 0);
  CHECK(h.total == 4);
  CHECK(h.consistent());
  CHECK(histogram_csv(h) == "length,count\n5,2\nbelow_3,1\nnonsync,1\ntotal,4\n");

  Histogram plain;
  plain.add(0);
  plain.add(2, 3);
  CHECK(histogram_csv(plain) == "length,count\n0,1\n2,3\nnonsync,0\ntotal,4\n");
}

TEST_CASE("gap report") {
  Histogram h4;
  h4.add(9, 1);
  h4.add(7, 2);
  const GapReport r4 = gap_report(h4, 4);
  CHECK(r4.range_low == 6);
  CHECK(r4.range_high == 9);
  CHECK(r4.max_length == 9);
  CHECK(r4.runner_up_length == 7);
  CHECK(r4.gap_below_max == std::vector<std::size_t>{8});
  CHECK(r4.empty_lengths == std::vector<std::size_t>{8, 6});

  // Stored published counts for n = 9, N = 65..51.
  const std::uint64_t row[] = {0, 1, 0, 0, 0, 0, 0, 1, 2, 3, 0, 0, 0, 4, 4};
  Histogram h9;
  for (std::size_t i = 0; i < 15; ++i) h9.add(65 - i, row[i]);
  const GapReport r9 = gap_report(h9, 9);
  CHECK(r9.range_low == 51);
  CHECK(r9.range_high == 64);
  CHECK(r9.max_length == 64);
  CHECK(r9.runner_up_length == 58);
  CHECK(r9.gap_below_max == std::vector<std::size_t>{63, 62, 61, 60, 59});
  CHECK(r9.first_gap_present);
  const std::string text = format_gap_report(r9);
  CHECK(text.find("upper range for n=9: [51, 64]") != std::string::npos);
  CHECK(text.find("N: 64 63 62 61 60 59 58 57 56 55 54 53 52 51") != std::string::npos);
  CHECK(text.find("count: 1 0 0 0 0 0 1 2 3 0 0 0 4 4") != std::string::npos);
}

TEST_CASE("census gap report at five and six states") {
  for (std::size_t n : {5, 6}) {
    const CensusResult r = reset_length_census(n, 2);
    for (const Histogram* h : {&r.icdfa, &r.automata, &r.automata_up_to_letters}) {
      const GapReport g = gap_report(*h, n);
      CHECK(g.max_length == (n - 1) * (n - 1));
      std::uint64_t in_range = 0;
      for (auto [len, count] : g.counts) {
        CHECK(h->count(len) == count);
        in_range += count;
      }
      CHECK(in_range <= h->total);
      for (std::size_t len : g.empty_lengths) CHECK(h->count(len) == 0);
    }
  }
}

// Exponent census -------------------------------------------------------------

TEST_CASE("exponent census against exhaustive brute force") {
  for (std::size_t n = 1; n <= 4; ++n) {
    Histogram labelled;
    testing::for_each_digraph(n, [&](const Digraph& d) {
      labelled.add(oracle::exponent(testing::to_matrix(d), 3 * n * n));
    });
    const ExponentCensus e = exponent_census(n);
    CHECK(e.labelled == labelled);
    CHECK(e == exponent_census_serial(n));
    CHECK(e.classes.max_value() == exponent_ceiling(n));
  }
  CHECK(exponent_census(3).classes.count(5) == 1);
  CHECK(exponent_census(4).classes.count(10) == 1);
  CHECK(exponent_census(4).classes.count(9) == 1);
  CHECK(exponent_census(4, 2) == exponent_census(4, 1));
  CHECK_THROWS_AS(exponent_census(6), ResourceLimit);
  CHECK_THROWS_AS(exponent_census(7, 1, true), ResourceLimit);
}

TEST_CASE("exponent census top classes are the extremal matrices") {
  const ExponentCensus e = exponent_census(4);
  REQUIRE(e.top_classes.count(10) == 1);
  REQUIRE(e.top_classes.at(10).size() == 1);
  CHECK(isomorphic(Digraph(4, e.top_classes.at(10).front()), wielandt_digraph(4)));
  REQUIRE(e.top_classes.count(9) == 1);
  CHECK(isomorphic(Digraph(4, e.top_classes.at(9).front()), dulmage_digraph(4)));
}

TEST_CASE("predicted exponent counts") {
  const Histogram t9 = theorem3_census(9);
  const std::uint64_t expected[] = {1, 1, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 0, 0, 4};
  for (std::size_t i = 0; i < 15; ++i) CHECK(t9.count(65 - i) == expected[i]);
  CHECK(theorem3_census(9, LowEndSource::Statement).count(51) == 3);
  CHECK(theorem3_census(5, LowEndSource::Statement) == theorem3_census(5, LowEndSource::Table));

  for (std::size_t n : {6, 8, 10}) {
    const Histogram t = theorem3_census(n);
    for (std::size_t e = exponent_top_range_low(n) + 1; e < (n - 1) * (n - 1); ++e) CHECK(t.count(e) == 0);
    CHECK(t.count(exponent_ceiling(n)) == 1);
    CHECK(t.count(exponent_ceiling(n) - 1) == 1);
  }
  CHECK(theorem3_census(6).count(18) == 3);
  CHECK(theorem3_census(8).count(38) == 4);
  CHECK_THROWS_AS(theorem3_census(4), InvalidInput);
}

}  // TEST_SUITE
