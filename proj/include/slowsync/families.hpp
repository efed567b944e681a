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

// Named automaton and digraph families with large reset lengths or
// exponents, the automaton induced by substituting words for letters, and
// the closed-form values each family is known to attain.
//
// Every constructor numbers states 0..n-1; where the usual drawings number
// them 1..n, state i there is state i-1 here. Letter a is 0, b is 1.

#ifndef SLOWSYNC_FAMILIES_HPP
#define SLOWSYNC_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slowsync/automaton.hpp"
#include "slowsync/digraph.hpp"

namespace slowsync {

enum class Family {
  Cerny,
  WielandtDigraph,
  WielandtAutomaton,
  DulmageDigraph,
  DPrime,
  DDoublePrime,
  Bn,
  Theorem3Matrix,
};

/// The six extremal exponent matrices: the Wielandt and Dulmage matrices,
/// then the four odd-order matrices with exponents n^2-3n+4, n^2-3n+3 and
/// (twice) n^2-3n+2.
enum class MatrixIndex { W, D, O1, O2, O3, O4 };

struct FamilySpec {
  Family family;
  std::size_t n;
  MatrixIndex matrix = MatrixIndex::W;

  bool is_automaton() const;
  /// Throws InvalidInput if n is outside the family's range.
  void validate() const;
  /// Stable command-line identifier, e.g. "dprime" or "thm3:O2".
  std::string name() const;

  bool operator==(const FamilySpec&) const = default;
};

/// Inverse of FamilySpec::name(). Accepts cerny, wielandt, wielandt-digraph,
/// dulmage, dprime, ddprime, bn and thm3:{W,D,O1,O2,O3,O4}.
FamilySpec parse_family(std::string_view name, std::size_t n);
std::vector<std::string> family_names();

/// Cerny automaton: b is the cycle q -> q+1 mod n, a fixes every state but
/// n-1, which it sends to 0. n >= 2.
Dfa cerny(std::size_t n);

/// Edges (i, i+1) for i < n-1, (n-1, 0) and (n-1, 1). n >= 3.
Digraph wielandt_digraph(std::size_t n);

/// The two-letter coloring of the Wielandt digraph: both letters advance
/// i -> i+1 below n-1; a sends n-1 to 1 and b sends n-1 to 0. n >= 3.
Dfa wielandt_automaton(std::size_t n);

/// The Wielandt digraph plus the edge (n-2, 0). n >= 3.
Digraph dulmage_digraph(std::size_t n);

/// Colorings of the Dulmage digraph. Below n-2 both letters advance by one.
///   d_prime:        a: n-2 -> 0, n-1 -> 1;   b: n-2 -> n-1, n-1 -> 0
///   d_double_prime: a: n-2 -> 0, n-1 -> 0;   b: n-2 -> n-1, n-1 -> 1
/// n >= 4.
Dfa d_prime(std::size_t n);
Dfa d_double_prime(std::size_t n);

/// b is the cycle; a fixes i < n-2 and sends n-2 -> 0, n-1 -> 1. Odd n >= 5.
Dfa b_automaton(std::size_t n);

/// Matrix rows 0..n-1: ones on the superdiagonal, the last row has ones in
/// columns 0 and 1 (W, D) or 0 and 2 (O1..O4), plus:
///   D:  (n-2, 0)
///   O2: (n-2, 1)
///   O3: (n-3, 0), (n-2, 1)
///   O4: (n-3, 0)
/// W and D need n >= 3; O1..O4 need odd n >= 5.
ZeroOneMatrix theorem3_zero_one_matrix(MatrixIndex index, std::size_t n);
Digraph theorem3_matrix(MatrixIndex index, std::size_t n);

/// New automaton on the same states with one letter per substitution:
/// delta'(q, x) = delta(q, substitutions[x]).
Dfa induce(const Dfa& dfa, const std::vector<Word>& substitutions);

Dfa build_automaton(const FamilySpec& spec);
Digraph build_digraph(const FamilySpec& spec);
std::variant<Dfa, Digraph> build(const FamilySpec& spec);

/// Reset length the family is proved to have. Throws InvalidInput for
/// digraph families or sizes the family is not defined for.
std::size_t known_reset_length(const FamilySpec& spec);

/// Exponent the family is proved to have. Digraph families only.
std::size_t known_exponent(const FamilySpec& spec);

/// The closed-form reset word of the construction, where one is known:
///   Cerny (ab^{n-1})^{n-2}a, Wielandt (ab^{n-2})^{n-2}a,
///   DPrime (ab^{n-2})^{n-2}ba, DDoublePrime (ba^{n-1})^{n-3}ba.
std::optional<Word> known_reset_word(const FamilySpec& spec);

}  // namespace slowsync

#endif  // SLOWSYNC_FAMILIES_HPP
