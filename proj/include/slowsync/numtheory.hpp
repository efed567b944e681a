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

// Representability of integers by non-negative combinations of generators,
// and the two-generator Frobenius number.

#ifndef SLOWSYNC_NUMTHEORY_HPP
#define SLOWSYNC_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace slowsync {

/// Nonempty multiset of positive generators.
class GeneratorSet {
 public:
  /// Throws InvalidInput if empty or any generator is zero.
  explicit GeneratorSet(std::vector<std::uint64_t> generators);

  const std::vector<std::uint64_t>& generators() const { return generators_; }
  std::uint64_t gcd() const;

 private:
  std::vector<std::uint64_t> generators_;
};

/// target == sum c_i * k_i with all c_i >= 0. Dynamic programming over 0..target.
bool is_representable(std::uint64_t target, const GeneratorSet& gens);

/// k1*k2 - k1 - k2. Throws InvalidInput unless k1, k2 >= 2 and coprime.
std::int64_t frobenius_two(std::uint64_t k1, std::uint64_t k2);

/// Least N >= 0 such that every integer above N is representable; empty if
/// the generators share a factor > 1.
std::optional<std::uint64_t> threshold_all_representable(const GeneratorSet& gens);

}  // namespace slowsync

#endif  // SLOWSYNC_NUMTHEORY_HPP
