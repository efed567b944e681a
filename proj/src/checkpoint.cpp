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

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "slowsync/census.hpp"
#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

constexpr const char* kMagic = "slowsync-census-checkpoint";

std::string crc_hex(std::string_view bytes) {
  const uLong crc = crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

void write_histogram(std::ostream& out, const char* name, const Histogram& h) {
  out << "histogram " << name << ' ' << h.total << ' ' << h.absent << ' ' << h.below << ' ' << h.counts.size();
  for (const auto& [value, count] : h.counts) out << ' ' << value << ':' << count;
  out << '\n';
}

[[noreturn]] void corrupt(const std::string& what) { throw IntegrityError("corrupt checkpoint: " + what); }

template <typename T>
T read_field(std::istream& in, const char* key) {
  std::string line;
  if (!std::getline(in, line)) corrupt(std::string("missing ") + key);
  std::istringstream fields(line);
  std::string name;
  T value{};
  if (!(fields >> name >> value) || name != key) corrupt(std::string("expected ") + key);
  return value;
}

Histogram read_histogram(std::istream& in, const char* name, std::size_t min_value) {
  std::string line;
  if (!std::getline(in, line)) corrupt(std::string("missing histogram ") + name);
  std::istringstream fields(line);
  std::string tag;
  std::string label;
  Histogram h;
  h.min_value = min_value;
  std::size_t entries = 0;
  if (!(fields >> tag >> label >> h.total >> h.absent >> h.below >> entries) || tag != "histogram" || label != name) {
    corrupt(std::string("bad histogram header for ") + name);
  }
  for (std::size_t i = 0; i < entries; ++i) {
    std::size_t value = 0;
    char colon = 0;
    std::uint64_t count = 0;
    if (!(fields >> value >> colon >> count) || colon != ':') corrupt(std::string("bad entry in ") + name);
    h.counts[value] = count;
  }
  if (!h.consistent()) corrupt(std::string("histogram ") + name + " does not add up");
  return h;
}

CensusResult fresh_result(std::size_t n, std::size_t k, std::size_t min_length) {
  CensusResult r;
  r.n = n;
  r.k = k;
  r.icdfa.min_value = r.automata.min_value = r.automata_up_to_letters.min_value = min_length;
  return r;
}

}  // namespace

bool CheckpointState::finished() const {
  return std::all_of(completed.begin(), completed.end(), [](bool b) { return b; });
}

void save_checkpoint(const std::filesystem::path& path, const CheckpointState& state) {
  std::ostringstream body;
  body << kMagic << ' ' << CheckpointState::kFormatVersion << '\n';
  body << "n " << state.n << '\n';
  body << "k " << state.k << '\n';
  body << "depth " << state.depth << '\n';
  body << "min_length " << state.min_length << '\n';
  body << "slices " << state.completed.size() << '\n';
  body << "completed ";
  for (bool done : state.completed) body << (done ? '1' : '0');
  body << '\n';
  write_histogram(body, "icdfa", state.partial.icdfa);
  write_histogram(body, "automata", state.partial.automata);
  write_histogram(body, "automata_up_to_letters", state.partial.automata_up_to_letters);
  const std::string text = body.str();

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceLimit("cannot write checkpoint " + tmp.string());
    out << text << "checksum " << crc_hex(text) << '\n';
    if (!out.flush()) throw ResourceLimit("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CheckpointState load_checkpoint(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IntegrityError("cannot open checkpoint " + path.string());
  std::stringstream raw;
  raw << file.rdbuf();
  const std::string text = raw.str();

  const std::size_t tail = text.rfind("checksum ");
  if (tail == std::string::npos || (tail != 0 && text[tail - 1] != '\n')) corrupt("no checksum line");
  std::string stored = text.substr(tail + 9);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  const std::string body = text.substr(0, tail);
  if (stored != crc_hex(body)) corrupt("checksum mismatch");

  std::istringstream in(body);
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) corrupt("bad magic");
  if (version != CheckpointState::kFormatVersion) corrupt("unsupported format version " + std::to_string(version));
  in.ignore(1);

  CheckpointState state;
  state.n = read_field<std::size_t>(in, "n");
  state.k = read_field<std::size_t>(in, "k");
  state.depth = read_field<std::size_t>(in, "depth");
  state.min_length = read_field<std::size_t>(in, "min_length");
  const auto count = read_field<std::size_t>(in, "slices");
  const auto bitmap = read_field<std::string>(in, "completed");
  if (bitmap.size() != count) corrupt("completed bitmap has wrong length");
  for (char c : bitmap) {
    if (c != '0' && c != '1') corrupt("completed bitmap has bad characters");
    state.completed.push_back(c == '1');
  }
  state.partial = fresh_result(state.n, state.k, state.min_length);
  state.partial.icdfa = read_histogram(in, "icdfa", state.min_length);
  state.partial.automata = read_histogram(in, "automata", state.min_length);
  state.partial.automata_up_to_letters = read_histogram(in, "automata_up_to_letters", state.min_length);
  return state;
}

CheckpointedRun run_census_checkpointed(std::size_t n, std::size_t k, const CensusOptions& options,
                                        const std::filesystem::path& path,
                                        std::optional<std::size_t> slice_budget) {
  check_census_cap(n, k, options.force);
  const std::size_t depth = default_slice_depth(n, k);
  const std::vector<IcdfaSlice> work = slices(n, k, depth);

  CheckpointState state;
  std::error_code ec;
  if (std::filesystem::exists(path, ec) && std::filesystem::file_size(path, ec) > 0) {
    state = load_checkpoint(path);
    if (state.n != n || state.k != k || state.depth != depth || state.min_length != options.min_length ||
        state.completed.size() != work.size()) {
      throw IntegrityError("checkpoint " + path.string() + " belongs to a different census");
    }
  } else {
    state.n = n;
    state.k = k;
    state.depth = depth;
    state.min_length = options.min_length;
    state.completed.assign(work.size(), false);
    state.partial = fresh_result(n, k, options.min_length);
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!state.completed[i]) pending.push_back(i);
  }
  if (slice_budget && pending.size() > *slice_budget) pending.resize(*slice_budget);

  const std::size_t batch = std::max<std::size_t>(1, 4 * std::max<std::size_t>(1, options.workers));
  CheckpointedRun run;
  for (std::size_t begin = 0; begin < pending.size(); begin += batch) {
    const std::size_t end = std::min(pending.size(), begin + batch);
    std::vector<IcdfaSlice> chunk;
    for (std::size_t i = begin; i < end; ++i) chunk.push_back(work[pending[i]]);
    state.partial.merge(census_of_slices(chunk, n, k, options));
    for (std::size_t i = begin; i < end; ++i) state.completed[pending[i]] = true;
    save_checkpoint(path, state);
    run.slices_done_this_run += end - begin;
  }
  if (pending.empty()) save_checkpoint(path, state);

  run.result = state.partial;
  run.finished = state.finished();
  return run;
}

}  // namespace slowsync
