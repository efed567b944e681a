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

#include "slowsync/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

std::vector<bool> representable_up_to(std::uint64_t limit, const std::vector<std::uint64_t>& gens) {
  std::vector<bool> ok(limit + 1, false);
  ok[0] = true;
  for (std::uint64_t v = 1; v <= limit; ++v) {
    for (std::uint64_t g : gens) {
      if (g <= v && ok[v - g]) {
        ok[v] = true;
        break;
      }
    }
  }
  return ok;
}

}  // namespace

GeneratorSet::GeneratorSet(std::vector<std::uint64_t> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("generator set must be nonempty");
  if (std::find(generators_.begin(), generators_.end(), 0U) != generators_.end()) {
    throw InvalidInput("generators must be positive");
  }
}

std::uint64_t GeneratorSet::gcd() const {
  std::uint64_t g = 0;
  for (std::uint64_t k : generators_) g = std::gcd(g, k);
  return g;
}

bool is_representable(std::uint64_t target, const GeneratorSet& gens) {
  return representable_up_to(target, gens.generators())[target];
}

std::int64_t frobenius_two(std::uint64_t k1, std::uint64_t k2) {
  if (k1 < 2 || k2 < 2) throw InvalidInput("Frobenius number needs generators >= 2");
  if (std::gcd(k1, k2) != 1) {
    throw InvalidInput(std::to_string(k1) + " and " + std::to_string(k2) + " are not coprime");
  }
  return static_cast<std::int64_t>(k1 * k2) - static_cast<std::int64_t>(k1) - static_cast<std::int64_t>(k2);
}

std::optional<std::uint64_t> threshold_all_representable(const GeneratorSet& gens) {
  if (gens.gcd() != 1) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(gens.generators().begin(), gens.generators().end());
  // With gcd 1 the Frobenius number is below (min - 1) * (max - 1).
  const std::uint64_t limit = *lo * *hi;
  const std::vector<bool> ok = representable_up_to(limit, gens.generators());
  for (std::uint64_t v = limit + 1; v-- > 0;) {
    if (!ok[v]) return v;
  }
  return 0;
}

}  // namespace slowsync
