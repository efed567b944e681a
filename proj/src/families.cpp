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

#include "slowsync/families.hpp"

#include <array>
#include <utility>

#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

struct MatrixName {
  MatrixIndex index;
  const char* name;
};
constexpr std::array<MatrixName, 6> kMatrixNames{{
    {MatrixIndex::W, "W"},
    {MatrixIndex::D, "D"},
    {MatrixIndex::O1, "O1"},
    {MatrixIndex::O2, "O2"},
    {MatrixIndex::O3, "O3"},
    {MatrixIndex::O4, "O4"},
}};

struct FamilyName {
  Family family;
  const char* name;
};
constexpr std::array<FamilyName, 7> kFamilyNames{{
    {Family::Cerny, "cerny"},
    {Family::WielandtAutomaton, "wielandt"},
    {Family::WielandtDigraph, "wielandt-digraph"},
    {Family::DulmageDigraph, "dulmage"},
    {Family::DPrime, "dprime"},
    {Family::DDoublePrime, "ddprime"},
    {Family::Bn, "bn"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

bool odd_island(MatrixIndex index) { return index != MatrixIndex::W && index != MatrixIndex::D; }

// Two-letter automaton whose letters both advance i -> i+1 except on the
// states listed in the overrides.
Dfa advancing_automaton(std::size_t n, std::initializer_list<std::pair<State, std::pair<State, State>>> overrides) {
  std::vector<State> table(n * 2);
  for (State q = 0; q < n; ++q) {
    table[q * 2 + kA] = static_cast<State>((q + 1) % n);
    table[q * 2 + kB] = static_cast<State>((q + 1) % n);
  }
  for (const auto& [q, targets] : overrides) {
    table[q * 2 + kA] = targets.first;
    table[q * 2 + kB] = targets.second;
  }
  return Dfa(n, 2, std::move(table));
}

Word letters(Letter a, std::size_t count) { return Word(std::vector<Letter>(count, a)); }

}  // namespace

bool FamilySpec::is_automaton() const {
  switch (family) {
    case Family::Cerny:
    case Family::WielandtAutomaton:
    case Family::DPrime:
    case Family::DDoublePrime:
    case Family::Bn:
      return true;
    default:
      return false;
  }
}

void FamilySpec::validate() const {
  const std::string label = name() + " " + std::to_string(n);
  switch (family) {
    case Family::Cerny:
      require(n >= 2, label + ": needs n >= 2");
      break;
    case Family::WielandtDigraph:
    case Family::WielandtAutomaton:
    case Family::DulmageDigraph:
      require(n >= 3, label + ": needs n >= 3");
      break;
    case Family::DPrime:
    case Family::DDoublePrime:
      require(n >= 4, label + ": needs n >= 4");
      break;
    case Family::Bn:
      require(n >= 5 && n % 2 == 1, label + ": needs odd n >= 5");
      break;
    case Family::Theorem3Matrix:
      if (odd_island(matrix)) {
        require(n >= 5 && n % 2 == 1, label + ": needs odd n >= 5");
      } else {
        require(n >= 3, label + ": needs n >= 3");
      }
      break;
  }
  require(n <= kMaxStates, label + ": too many states");
}

std::string FamilySpec::name() const {
  if (family == Family::Theorem3Matrix) {
    for (const auto& m : kMatrixNames) {
      if (m.index == matrix) return std::string("thm3:") + m.name;
    }
  }
  for (const auto& f : kFamilyNames) {
    if (f.family == family) return f.name;
  }
  throw InternalError("unnamed family");
}

FamilySpec parse_family(std::string_view name, std::size_t n) {
  if (name.starts_with("thm3:")) {
    const std::string_view suffix = name.substr(5);
    for (const auto& m : kMatrixNames) {
      if (suffix == m.name) return {Family::Theorem3Matrix, n, m.index};
    }
  }
  for (const auto& f : kFamilyNames) {
    if (name == f.name) return {f.family, n};
  }
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilyNames) out.emplace_back(f.name);
  for (const auto& m : kMatrixNames) out.push_back(std::string("thm3:") + m.name);
  return out;
}

Dfa cerny(std::size_t n) {
  FamilySpec{Family::Cerny, n}.validate();
  std::vector<State> table(n * 2);
  for (State q = 0; q < n; ++q) {
    table[q * 2 + kA] = q + 1 == n ? 0 : q;
    table[q * 2 + kB] = static_cast<State>((q + 1) % n);
  }
  return Dfa(n, 2, std::move(table));
}

Digraph wielandt_digraph(std::size_t n) {
  FamilySpec{Family::WielandtDigraph, n}.validate();
  return theorem3_matrix(MatrixIndex::W, n);
}

Dfa wielandt_automaton(std::size_t n) {
  FamilySpec{Family::WielandtAutomaton, n}.validate();
  const auto last = static_cast<State>(n - 1);
  return advancing_automaton(n, {{last, {1, 0}}});
}

Digraph dulmage_digraph(std::size_t n) {
  FamilySpec{Family::DulmageDigraph, n}.validate();
  return theorem3_matrix(MatrixIndex::D, n);
}

// Letter assignment transcribed from the labelled drawing of both colorings.
Dfa d_prime(std::size_t n) {
  FamilySpec{Family::DPrime, n}.validate();
  const auto last = static_cast<State>(n - 1);
  return advancing_automaton(n, {{last - 1, {0, last}}, {last, {1, 0}}});
}

Dfa d_double_prime(std::size_t n) {
  FamilySpec{Family::DDoublePrime, n}.validate();
  const auto last = static_cast<State>(n - 1);
  return advancing_automaton(n, {{last - 1, {0, last}}, {last, {0, 1}}});
}

Dfa b_automaton(std::size_t n) {
  FamilySpec{Family::Bn, n}.validate();
  std::vector<State> table(n * 2);
  for (State q = 0; q < n; ++q) {
    table[q * 2 + kA] = q;
    table[q * 2 + kB] = static_cast<State>((q + 1) % n);
  }
  table[(n - 2) * 2 + kA] = 0;
  table[(n - 1) * 2 + kA] = 1;
  return Dfa(n, 2, std::move(table));
}

ZeroOneMatrix theorem3_zero_one_matrix(MatrixIndex index, std::size_t n) {
  FamilySpec{Family::Theorem3Matrix, n, index}.validate();
  ZeroOneMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1);
  m.set(n - 1, 0);
  m.set(n - 1, odd_island(index) ? 2 : 1);
  switch (index) {
    case MatrixIndex::W:
    case MatrixIndex::O1:
      break;
    case MatrixIndex::D:
      m.set(n - 2, 0);
      break;
    case MatrixIndex::O2:
      m.set(n - 2, 1);
      break;
    case MatrixIndex::O3:
      m.set(n - 3, 0);
      m.set(n - 2, 1);
      break;
    case MatrixIndex::O4:
      m.set(n - 3, 0);
      break;
  }
  return m;
}

Digraph theorem3_matrix(MatrixIndex index, std::size_t n) { return from_matrix(theorem3_zero_one_matrix(index, n)); }

Dfa induce(const Dfa& dfa, const std::vector<Word>& substitutions) {
  if (substitutions.empty()) throw InvalidInput("induce needs at least one substitution word");
  const std::size_t n = dfa.states();
  const std::size_t k = substitutions.size();
  std::vector<State> table(n * k);
  for (std::size_t x = 0; x < k; ++x) {
    if (substitutions[x].empty()) throw InvalidInput("substitution words must be nonempty");
    for (State q = 0; q < n; ++q) table[q * k + x] = apply(dfa, q, substitutions[x]);
  }
  return Dfa(n, k, std::move(table));
}

Dfa build_automaton(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Cerny:
      return cerny(spec.n);
    case Family::WielandtAutomaton:
      return wielandt_automaton(spec.n);
    case Family::DPrime:
      return d_prime(spec.n);
    case Family::DDoublePrime:
      return d_double_prime(spec.n);
    case Family::Bn:
      return b_automaton(spec.n);
    default:
      throw InvalidInput(spec.name() + " is a digraph family");
  }
}

Digraph build_digraph(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::WielandtDigraph:
      return wielandt_digraph(spec.n);
    case Family::DulmageDigraph:
      return dulmage_digraph(spec.n);
    case Family::Theorem3Matrix:
      return theorem3_matrix(spec.matrix, spec.n);
    default:
      return underlying_digraph(build_automaton(spec));
  }
}

std::variant<Dfa, Digraph> build(const FamilySpec& spec) {
  if (spec.is_automaton()) return build_automaton(spec);
  return build_digraph(spec);
}

std::size_t known_reset_length(const FamilySpec& spec) {
  if (!spec.is_automaton()) throw InvalidInput(spec.name() + " is a digraph family; it has no reset length");
  spec.validate();
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::Cerny:
      return (n - 1) * (n - 1);
    case Family::WielandtAutomaton:
      return n * n - 3 * n + 3;
    case Family::DPrime:
      return n * n - 3 * n + 4;
    case Family::DDoublePrime:
    case Family::Bn:
      return n * n - 3 * n + 2;
    default:
      throw InternalError("unhandled automaton family");
  }
}

std::size_t known_exponent(const FamilySpec& spec) {
  if (spec.is_automaton()) throw InvalidInput(spec.name() + " is an automaton family; it has no exponent formula");
  spec.validate();
  const std::size_t n = spec.n;
  MatrixIndex index = spec.matrix;
  if (spec.family == Family::WielandtDigraph) index = MatrixIndex::W;
  if (spec.family == Family::DulmageDigraph) index = MatrixIndex::D;
  switch (index) {
    case MatrixIndex::W:
      return (n - 1) * (n - 1) + 1;
    case MatrixIndex::D:
      return (n - 1) * (n - 1);
    case MatrixIndex::O1:
      return n * n - 3 * n + 4;
    case MatrixIndex::O2:
      return n * n - 3 * n + 3;
    case MatrixIndex::O3:
    case MatrixIndex::O4:
      return n * n - 3 * n + 2;
  }
  throw InternalError("unhandled matrix index");
}

std::optional<Word> known_reset_word(const FamilySpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const Word a{kA};
  const Word b{kB};
  switch (spec.family) {
    case Family::Cerny:
      return (a + letters(kB, n - 1)).repeat(n - 2) + a;
    case Family::WielandtAutomaton:
      return (a + letters(kB, n - 2)).repeat(n - 2) + a;
    case Family::DPrime:
      return (a + letters(kB, n - 2)).repeat(n - 2) + b + a;
    case Family::DDoublePrime:
      return (b + letters(kA, n - 1)).repeat(n - 3) + b + a;
    default:
      return std::nullopt;
  }
}

}  // namespace slowsync
