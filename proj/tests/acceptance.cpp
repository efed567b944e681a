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

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact (integer tolerance 0). Usage: acceptance [findings-dir]

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slowsync/automaton.hpp"
#include "slowsync/census.hpp"
#include "slowsync/conjecture.hpp"
#include "slowsync/digraph.hpp"
#include "slowsync/families.hpp"
#include "slowsync/numtheory.hpp"

using namespace slowsync;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::ostream& detail)> check;
};

std::filesystem::path findings_dir = "findings";

bool expect_equal(std::ostream& detail, const std::string& what, std::uint64_t got, std::uint64_t want) {
  if (got == want) return true;
  detail << "    " << what << ": got " << got << ", expected " << want << '\n';
  return false;
}

bool reset_lengths(std::ostream& detail) {
  bool ok = true;
  auto check = [&](const std::string& name, const Dfa& dfa, std::size_t want) {
    const auto got = shortest_reset_length(dfa);
    if (!got) {
      detail << "    " << name << ": not synchronizing\n";
      ok = false;
      return;
    }
    ok &= expect_equal(detail, name, *got, want);
  };
  for (std::size_t n = 4; n <= 9; ++n) {
    const std::string suffix = " n=" + std::to_string(n);
    check("cerny" + suffix, cerny(n), (n - 1) * (n - 1));
    check("wielandt" + suffix, wielandt_automaton(n), n * n - 3 * n + 3);
    check("dprime" + suffix, d_prime(n), n * n - 3 * n + 4);
    check("ddprime" + suffix, d_double_prime(n), n * n - 3 * n + 2);
  }
  for (std::size_t n : {5, 7, 9}) check("bn n=" + std::to_string(n), b_automaton(n), n * n - 3 * n + 2);
  return ok;
}

bool witness_words(std::ostream& detail) {
  bool ok = true;
  for (std::size_t n = 4; n <= 12; ++n) {
    const Word a = Word::parse("a");
    const Word b = Word::parse("b");
    struct Case {
      std::string name;
      Dfa dfa;
      Word word;
      std::size_t length;
      FamilySpec spec;
    };
    const Case cases[] = {
        {"cerny", cerny(n), (a + b.repeat(n - 1)).repeat(n - 2) + a, (n - 1) * (n - 1), {Family::Cerny, n}},
        {"wielandt", wielandt_automaton(n), (a + b.repeat(n - 2)).repeat(n - 2) + a, n * n - 3 * n + 3,
         {Family::WielandtAutomaton, n}},
        {"dprime", d_prime(n), (a + b.repeat(n - 2)).repeat(n - 2) + b + a, n * n - 3 * n + 4, {Family::DPrime, n}},
        {"ddprime", d_double_prime(n), (b + a.repeat(n - 1)).repeat(n - 3) + b + a, n * n - 3 * n + 2,
         {Family::DDoublePrime, n}},
    };
    for (const Case& c : cases) {
      const std::string label = c.name + " n=" + std::to_string(n);
      if (!is_reset_word(c.dfa, c.word)) {
        detail << "    " << label << ": word does not reset\n";
        ok = false;
      }
      ok &= expect_equal(detail, label + " word length", c.word.size(), c.length);
      if (known_reset_word(c.spec) != c.word) {
        detail << "    " << label << ": library word differs\n";
        ok = false;
      }
    }
  }
  return ok;
}

bool exponents(std::ostream& detail) {
  bool ok = true;
  auto check = [&](const std::string& name, const Digraph& d, std::size_t want) {
    const auto got = exponent(d);
    if (!got) {
      detail << "    " << name << ": not primitive\n";
      ok = false;
      return;
    }
    ok &= expect_equal(detail, name, *got, want);
  };
  for (std::size_t n = 3; n <= 12; ++n) {
    check("W n=" + std::to_string(n), wielandt_digraph(n), (n - 1) * (n - 1) + 1);
    check("D n=" + std::to_string(n), dulmage_digraph(n), (n - 1) * (n - 1));
  }
  for (std::size_t n : {5, 7, 9}) {
    const std::string suffix = " n=" + std::to_string(n);
    check("O1" + suffix, theorem3_matrix(MatrixIndex::O1, n), n * n - 3 * n + 4);
    check("O2" + suffix, theorem3_matrix(MatrixIndex::O2, n), n * n - 3 * n + 3);
    check("O3" + suffix, theorem3_matrix(MatrixIndex::O3, n), n * n - 3 * n + 2);
    check("O4" + suffix, theorem3_matrix(MatrixIndex::O4, n), n * n - 3 * n + 2);
  }
  return ok;
}

bool table_row_two(std::ostream& detail) {
  const std::uint64_t printed[] = {1, 1, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 0, 0, 4};
  const Histogram h = theorem3_census(9);
  bool ok = true;
  for (std::size_t i = 0; i < 15; ++i) {
    const std::size_t e = 65 - i;
    ok &= expect_equal(detail, "N=" + std::to_string(e), h.count(e), printed[i]);
  }
  ok &= expect_equal(detail, "entries in range", h.counts.size(), 15);
  const Histogram statement = theorem3_census(9, LowEndSource::Statement);
  detail << "    note: the stated rule gives " << statement.count(51) << " classes at N=51, the table prints "
         << h.count(51) << "\n";
  return ok;
}

bool census_substitute(std::ostream& detail) {
  bool ok = true;
  for (std::size_t n : {5, 6}) {
    CensusOptions one;
    one.workers = 1;
    CensusOptions eight;
    eight.workers = 8;
    const CensusResult a = reset_length_census(n, 2, one);
    const CensusResult b = reset_length_census(n, 2, eight);
    if (!(a == b)) {
      detail << "    n=" << n << ": 1 and 8 workers disagree\n";
      ok = false;
    }
    const std::pair<const char*, const Histogram*> views[] = {
        {"icdfa", &a.icdfa}, {"automata", &a.automata}, {"automata/letters", &a.automata_up_to_letters}};
    for (const auto& [name, h] : views) {
      const std::string label = "n=" + std::to_string(n) + " " + name;
      const GapReport g = gap_report(*h, n);
      if (!g.max_length || !h->consistent()) {
        detail << "    " << label << ": empty or inconsistent histogram\n";
        ok = false;
        continue;
      }
      ok &= expect_equal(detail, label + " max length", *g.max_length, (n - 1) * (n - 1));
      // Every length strictly between the runner-up and the maximum must be
      // reported as a gap, and nothing else.
      std::vector<std::size_t> expected_gap;
      if (g.runner_up_length) {
        for (std::size_t len = *g.max_length - 1; len > *g.runner_up_length; --len) expected_gap.push_back(len);
      }
      if (g.gap_below_max != expected_gap) {
        detail << "    " << label << ": gap report does not match the histogram\n";
        ok = false;
      }
      for (std::size_t len : g.gap_below_max) ok &= expect_equal(detail, label + " count at gap", h->count(len), 0);
      detail << "    " << label << ": runner-up " << (g.runner_up_length ? std::to_string(*g.runner_up_length) : "-")
             << ", gap";
      for (std::size_t len : g.gap_below_max) detail << ' ' << len;
      if (g.gap_below_max.empty()) detail << " none";
      detail << '\n';
    }
  }
  return ok;
}

bool enumeration_oracle(std::ostream& detail) {
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      const std::string label = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      const std::size_t brute = oracle::icdfa_classes(n, k).size();
      ok &= expect_equal(detail, label + " enumerated", enumerate_icdfa(n, k).size(), brute);
      ok &= expect_equal(detail, label + " counted", count_icdfa(n, k), brute);
    }
  }
  return ok;
}

bool exponent_census_cross_check(std::ostream& detail) {
  const ExponentCensus census = exponent_census(5, 1);
  const Histogram predicted = theorem3_census(5);
  bool ok = true;
  for (std::size_t e = 11; e <= 17; ++e) {
    ok &= expect_equal(detail, "exponent " + std::to_string(e), census.classes.count(e), predicted.count(e));
  }
  return ok;
}

bool frobenius(std::ostream& detail) {
  bool ok = true;
  for (std::uint64_t n = 4; n <= 50; ++n) {
    const std::uint64_t f = n * n - 3 * n + 1;
    const std::int64_t got = frobenius_two(n, n - 1);
    ok &= expect_equal(detail, "frobenius n=" + std::to_string(n), static_cast<std::uint64_t>(got), f);
    const GeneratorSet gens({n, n - 1});
    if (is_representable(f, gens)) {
      detail << "    n=" << n << ": " << f << " reported representable\n";
      ok = false;
    }
    for (std::uint64_t t = f + 1; t <= n * n - 2 * n; ++t) {
      if (!is_representable(t, gens)) {
        detail << "    n=" << n << ": " << t << " reported non-representable\n";
        ok = false;
      }
    }
  }
  return ok;
}

bool induced_isomorphism(std::ostream& detail) {
  bool ok = true;
  for (std::size_t n = 4; n <= 8; ++n) {
    const Dfa induced = induce(cerny(n), {Word::parse("b"), Word::parse("ab")});
    if (canonical_form(induced, true) != canonical_form(wielandt_automaton(n), true)) {
      detail << "    n=" << n << ": canonical forms differ\n";
      ok = false;
    }
  }
  return ok;
}

bool coloring_sweep(std::ostream& detail) {
  const ConjectureReport report = conjecture_sweep(4);
  bool ok = true;
  for (const auto& level : report.levels) {
    detail << "    n=" << level.n << ": " << level.digraphs << " primitive digraphs, max " << level.max_min_length
           << ", bound " << level.bound << ", violations " << level.violations.size() << '\n';
  }
  if (!report.holds()) {
    std::filesystem::create_directories(findings_dir);
    const auto path = findings_dir / "coloring_bound_violations.txt";
    std::ofstream out(path);
    for (const auto& level : report.levels) {
      for (const auto& v : level.violations) {
        out << "n=" << level.n << " min_length="
            << (v.min_length ? std::to_string(*v.min_length) : std::string("none")) << " edges:";
        for (auto [s, t] : v.digraph.edges()) out << ' ' << s << "->" << t;
        out << '\n';
      }
    }
    detail << "    violations written to " << path.string() << '\n';
  }
  // The suite fails only if the Wielandt digraph itself exceeds the bound.
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto w = min_coloring_reset_length(wielandt_digraph(n), 2);
    if (!w || *w > coloring_bound(n)) {
      detail << "    Wielandt digraph n=" << n << " exceeds the bound\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) findings_dir = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "reset lengths of the extremal families, n=4..9 (exact)", reset_lengths},
      {2, "closed-form reset words, n=4..12 (exact)", witness_words},
      {3, "exponents of the extremal matrices (exact)", exponents},
      {4, "predicted exponent counts at n=9, N=65..51 (exact)", table_row_two},
      {5, "census at n=5,6: maximum, gap report, 1 vs 8 workers (exact)", census_substitute},
      {6, "enumeration vs brute force, n<=3, k<=2 (exact)", enumeration_oracle},
      {7, "exponent census n=5 vs predictions on [11,17] (exact)", exponent_census_cross_check},
      {8, "two-generator Frobenius numbers, n=4..50 (exact)", frobenius},
      {9, "induced automaton isomorphic to the Wielandt automaton, n=4..8", induced_isomorphism},
      {10, "coloring bound over primitive digraphs, n<=4, 2 letters", coloring_sweep},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail << "    exception: " << e.what() << '\n';
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << std::fixed
              << std::setprecision(2) << seconds << "s)\n"
              << detail.str();
    failures += ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
