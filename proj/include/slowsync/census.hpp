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

// Exhaustive censuses: reset lengths over all initially-connected automata
// of a given size, exponents over all digraphs of a given order, and the
// predicted upper range of the exponent sequence.
//
// Every census has two implementations. The *_serial functions walk the
// whole search space with the general-purpose library calls and are kept
// as the reference. The parallel functions split the space into slices,
// run specialised kernels on an OpenMP team and merge per-slice histograms.

#ifndef SLOWSYNC_CENSUS_HPP
#define SLOWSYNC_CENSUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slowsync/automaton.hpp"

namespace slowsync {

/// Value -> count, plus the items that have no value (non-synchronizing
/// automata, imprimitive digraphs). Values below min_value are lumped into
/// `below`. Invariant: total == absent + below + sum(counts).
struct Histogram {
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t absent = 0;
  std::uint64_t below = 0;
  std::uint64_t total = 0;
  std::size_t min_value = 0;

  void add(std::optional<std::size_t> value, std::uint64_t times = 1);
  void merge(const Histogram& other);
  std::uint64_t count(std::size_t value) const;
  std::optional<std::size_t> max_value() const;
  bool consistent() const;

  bool operator==(const Histogram&) const = default;
};

// ---------------------------------------------------------------------------
// Initially-connected automata

/// Canonical ICDFA: the transition table, read row by row (state-major,
/// letter-minor), introduces states 1, 2, ... in increasing order, and each
/// state j is introduced before row j is read. This is exactly the
/// numbering a breadth-first scan from state 0 produces, so each
/// initially-connected automaton with initial state 0 appears once per
/// isomorphism class.
///
/// A slice fixes the first prefix.size() table entries; all slices of one
/// depth partition the enumeration into contiguous runs.
struct IcdfaSlice {
  std::size_t n = 1;
  std::size_t k = 1;
  std::vector<State> prefix;

  std::size_t depth() const { return prefix.size(); }
  bool operator==(const IcdfaSlice&) const = default;
};

/// Lazy enumeration of canonical ICDFA tables in lexicographic order,
/// optionally restricted to one slice.
class IcdfaStream {
 public:
  IcdfaStream(std::size_t n, std::size_t k);
  explicit IcdfaStream(const IcdfaSlice& slice);

  /// Moves to the next table; false when exhausted. The first call yields
  /// the first table.
  bool advance();
  std::span<const State> table() const { return table_; }
  Dfa current() const { return Dfa(n_, k_, table_); }

 private:
  bool feasible(std::size_t position, std::size_t discovered) const;
  bool complete_from(std::size_t position);

  std::size_t n_;
  std::size_t k_;
  std::size_t fixed_;
  std::vector<State> table_;
  std::vector<std::size_t> discovered_before_;  // states introduced before each position
  bool started_ = false;
  bool exhausted_ = false;
};

std::vector<Dfa> enumerate_icdfa(std::size_t n, std::size_t k);

/// Exact number of canonical ICDFA, saturating at UINT64_MAX.
std::uint64_t count_icdfa(std::size_t n, std::size_t k);

/// All feasible prefixes of length depth, in enumeration order.
std::vector<IcdfaSlice> slices(std::size_t n, std::size_t k, std::size_t depth);

/// Depth used by the parallel census: the smallest one giving at least 64
/// slices (or n*k). Independent of the worker count so checkpoints stay
/// valid across runs with different teams.
std::size_t default_slice_depth(std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Reset-length census

struct CensusOptions {
  std::size_t workers = 1;
  std::size_t min_length = 0;
  bool force = false;
};

/// Three views of the same census. `icdfa` counts canonical ICDFA (one per
/// automaton with a chosen initial state); `automata` counts isomorphism
/// classes of initially-connected automata with the initial state
/// forgotten; `automata_up_to_letters` further identifies automata that
/// differ by a renaming of letters.
struct CensusResult {
  std::size_t n = 0;
  std::size_t k = 0;
  Histogram icdfa;
  Histogram automata;
  Histogram automata_up_to_letters;

  void merge(const CensusResult& other);
  bool operator==(const CensusResult&) const = default;
};

/// Largest search space the census accepts without `force`: the canonical
/// ICDFA count at n = 7, k = 2.
std::uint64_t census_space_cap();

/// Throws ResourceLimit (naming the search-space size) above the cap.
void check_census_cap(std::size_t n, std::size_t k, bool force);

CensusResult reset_length_census(std::size_t n, std::size_t k, const CensusOptions& options = {});
CensusResult reset_length_census_serial(std::size_t n, std::size_t k, std::size_t min_length = 0);

/// Census of a subset of slices. Used by checkpointed runs and tests.
CensusResult census_of_slices(std::span<const IcdfaSlice> work, std::size_t n, std::size_t k,
                              const CensusOptions& options);

// ---------------------------------------------------------------------------
// Checkpointed census

struct CheckpointState {
  static constexpr int kFormatVersion = 1;

  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t depth = 0;
  std::size_t min_length = 0;
  std::vector<bool> completed;
  CensusResult partial;

  bool finished() const;
};

void save_checkpoint(const std::filesystem::path& path, const CheckpointState& state);
/// Throws IntegrityError on a malformed or tampered file.
CheckpointState load_checkpoint(const std::filesystem::path& path);

struct CheckpointedRun {
  CensusResult result;
  bool finished = false;
  std::size_t slices_done_this_run = 0;
};

/// Runs (or resumes) a census persisting progress to `path` after every
/// batch of slices. A missing or empty file starts from zero. Stops after
/// `slice_budget` new slices when given, to allow staged runs.
CheckpointedRun run_census_checkpointed(std::size_t n, std::size_t k, const CensusOptions& options,
                                        const std::filesystem::path& path,
                                        std::optional<std::size_t> slice_budget = std::nullopt);

// ---------------------------------------------------------------------------
// Reports and exports

/// Upper range [n^2-4n+6, (n-1)^2] of a two-letter reset-length histogram.
struct GapReport {
  std::size_t n = 0;
  std::size_t range_low = 0;
  std::size_t range_high = 0;
  /// (length, count) from range_high down to range_low.
  std::vector<std::pair<std::size_t, std::uint64_t>> counts;
  std::vector<std::size_t> empty_lengths;
  std::optional<std::size_t> max_length;
  /// Largest attained length below max_length.
  std::optional<std::size_t> runner_up_length;
  /// Empty lengths strictly between runner_up_length and max_length.
  std::vector<std::size_t> gap_below_max;
  /// True when no length strictly between n^2-3n+4 and (n-1)^2 occurs,
  /// the same gap the exponent sequence has below (n-1)^2.
  bool first_gap_present = false;
};

GapReport gap_report(const Histogram& h, std::size_t n);
std::string format_gap_report(const GapReport& report);

/// `length,count` rows in ascending length, then `below_<L>,<count>` when
/// values were lumped, then `nonsync,<count>` and `total,<count>`.
std::string histogram_csv(const Histogram& h);

// ---------------------------------------------------------------------------
// Exponent census

struct ExponentCensus {
  std::size_t n = 0;
  /// Over all labelled digraphs on n vertices with every out-degree >= 1.
  Histogram labelled;
  /// One entry per isomorphism class.
  Histogram classes;
  /// Canonical forms (see canonical_form(const Digraph&)) of the classes
  /// whose exponent lies in the predicted upper range.
  std::map<std::size_t, std::vector<std::vector<std::uint64_t>>> top_classes;

  bool operator==(const ExponentCensus&) const = default;
};

/// Throws ResourceLimit above 5 vertices unless forced (at most 6).
ExponentCensus exponent_census(std::size_t n, std::size_t workers = 1, bool force = false);
ExponentCensus exponent_census_serial(std::size_t n);

/// Lowest exponent of the predicted upper range, n^2-4n+6 (at least 1).
std::size_t exponent_top_range_low(std::size_t n);

/// Where the class count at the low end n^2-4n+6 comes from.
///   Statement: 3 when 3 divides n, 4 otherwise.
///   Table:     as Statement, except 4 at n = 9, the tabulated value.
/// The two disagree only at n = 9. The exhaustive 5-vertex census gives 4.
enum class LowEndSource { Statement, Table };

/// Predicted isomorphism-class counts for every exponent in
/// [n^2-4n+6, (n-1)^2+1], with zeros at the known gaps. n >= 5.
Histogram theorem3_census(std::size_t n, LowEndSource source = LowEndSource::Table);

}  // namespace slowsync

#endif  // SLOWSYNC_CENSUS_HPP
