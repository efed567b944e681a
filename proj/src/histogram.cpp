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

#include <numeric>
#include <sstream>

#include "slowsync/census.hpp"
#include "slowsync/errors.hpp"

namespace slowsync {

void Histogram::add(std::optional<std::size_t> value, std::uint64_t times) {
  total += times;
  if (!value) {
    absent += times;
  } else if (*value < min_value) {
    below += times;
  } else {
    counts[*value] += times;
  }
}

void Histogram::merge(const Histogram& other) {
  if (other.min_value != min_value) throw InvalidInput("cannot merge histograms with different thresholds");
  for (const auto& [value, count] : other.counts) counts[value] += count;
  absent += other.absent;
  below += other.below;
  total += other.total;
}

std::uint64_t Histogram::count(std::size_t value) const {
  const auto it = counts.find(value);
  return it == counts.end() ? 0 : it->second;
}

std::optional<std::size_t> Histogram::max_value() const {
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second != 0) return it->first;
  }
  return std::nullopt;
}

bool Histogram::consistent() const {
  std::uint64_t sum = absent + below;
  for (const auto& [value, count] : counts) sum += count;
  return sum == total;
}

void CensusResult::merge(const CensusResult& other) {
  if (other.n != n || other.k != k) throw InvalidInput("cannot merge censuses of different sizes");
  icdfa.merge(other.icdfa);
  automata.merge(other.automata);
  automata_up_to_letters.merge(other.automata_up_to_letters);
}

GapReport gap_report(const Histogram& h, std::size_t n) {
  GapReport r;
  r.n = n;
  r.range_low = n * n + 6 - 4 * n;
  r.range_high = (n - 1) * (n - 1);
  for (std::size_t len = r.range_high; len >= r.range_low && len > 0; --len) {
    const std::uint64_t c = h.count(len);
    r.counts.emplace_back(len, c);
    if (c == 0) r.empty_lengths.push_back(len);
  }
  r.max_length = h.max_value();
  if (r.max_length) {
    for (auto it = h.counts.rbegin(); it != h.counts.rend(); ++it) {
      if (it->first < *r.max_length && it->second != 0) {
        r.runner_up_length = it->first;
        break;
      }
    }
  }
  if (r.max_length && r.runner_up_length) {
    for (std::size_t len = *r.max_length - 1; len > *r.runner_up_length; --len) r.gap_below_max.push_back(len);
  }
  r.first_gap_present = true;
  for (std::size_t len = n * n + 5 - 3 * n; len < r.range_high; ++len) {
    if (h.count(len) != 0) r.first_gap_present = false;
  }
  return r;
}

std::string format_gap_report(const GapReport& report) {
  std::ostringstream out;
  out << "upper range for n=" << report.n << ": [" << report.range_low << ", " << report.range_high << "]\n";
  out << "N:";
  for (const auto& [len, count] : report.counts) out << ' ' << len;
  out << "\ncount:";
  for (const auto& [len, count] : report.counts) out << ' ' << count;
  out << "\nempty:";
  if (report.empty_lengths.empty()) out << " none";
  for (std::size_t len : report.empty_lengths) out << ' ' << len;
  out << "\nmax length: ";
  if (report.max_length) {
    out << *report.max_length;
  } else {
    out << "none";
  }
  out << "\nrunner-up length: ";
  if (report.runner_up_length) {
    out << *report.runner_up_length;
  } else {
    out << "none";
  }
  out << "\ngap below max:";
  if (report.gap_below_max.empty()) out << " none";
  for (std::size_t len : report.gap_below_max) out << ' ' << len;
  out << "\nfirst gap (n^2-3n+4, (n-1)^2) empty: " << (report.first_gap_present ? "yes" : "no") << '\n';
  return out.str();
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream out;
  out << "length,count\n";
  for (const auto& [value, count] : h.counts) out << value << ',' << count << '\n';
  if (h.min_value > 0) out << "below_" << h.min_value << ',' << h.below << '\n';
  out << "nonsync," << h.absent << '\n';
  out << "total," << h.total << '\n';
  return out.str();
}

}  // namespace slowsync
