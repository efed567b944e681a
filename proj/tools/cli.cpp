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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slowsync/automaton.hpp"
#include "slowsync/census.hpp"
#include "slowsync/conjecture.hpp"
#include "slowsync/digraph.hpp"
#include "slowsync/errors.hpp"
#include "slowsync/families.hpp"
#include "slowsync/formats.hpp"

namespace slowsync::cli {

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidInput("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string spell(const Word& w) { return w.empty() ? "(empty word)" : to_string(w); }

std::string edge_list(const Digraph& d) {
  std::string out;
  for (auto [u, v] : d.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "->" + std::to_string(v);
  }
  return out;
}

nlohmann::json histogram_json(const Histogram& h) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [value, count] : h.counts) counts[std::to_string(value)] = count;
  nlohmann::json j{{"counts", counts}, {"nonsync", h.absent}, {"total", h.total}};
  if (h.min_value > 0) j["below_" + std::to_string(h.min_value)] = h.below;
  return j;
}

// check -----------------------------------------------------------------

struct CheckArgs {
  std::string input = "-";
  std::string format = "text";
  bool greedy = false;
  std::size_t max_states = ResetOptions::default_state_cap();
};

int check_automaton(const AutomatonDocument& doc, const CheckArgs& args, Io io) {
  ResetOptions options;
  options.max_states = args.max_states;
  const Dfa& dfa = doc.dfa;
  const bool sync = is_synchronizing(dfa);
  std::optional<ResetResult> exact;
  if (sync) exact = shortest_reset_word(dfa, options);
  if (sync != exact.has_value()) throw InternalError("pair test and subset search disagree");
  std::optional<Word> greedy;
  if (args.greedy && sync) greedy = greedy_reset_word(dfa);

  if (args.format == "json") {
    nlohmann::json j{{"type", "dfa"}, {"states", dfa.states()}, {"alphabet", dfa.letters()}, {"synchronizing", sync}};
    if (doc.name) j["name"] = *doc.name;
    if (exact) {
      j["length"] = exact->length;
      j["witness"] = to_string(exact->witness);
    }
    if (greedy) j["greedy_length"] = greedy->size();
    io.out << j.dump(2) << '\n';
    return kOk;
  }
  if (!exact) {
    io.out << "not synchronizing\n";
    return kOk;
  }
  io.out << "synchronizing, length " << exact->length << '\n';
  io.out << "witness: " << spell(exact->witness) << '\n';
  if (greedy) io.out << "greedy: length " << greedy->size() << ", " << spell(*greedy) << '\n';
  return kOk;
}

int check_digraph(const DigraphDocument& doc, const CheckArgs& args, Io io) {
  const Digraph& d = doc.digraph;
  const bool strongly_connected = is_strongly_connected(d);
  const std::size_t p = period(d);
  const auto gamma = exponent(d);
  if (args.format == "json") {
    nlohmann::json j{{"type", "digraph"}, {"vertices", d.vertices()}, {"strongly_connected", strongly_connected},
                     {"primitive", gamma.has_value()}};
    if (doc.name) j["name"] = *doc.name;
    if (strongly_connected) j["period"] = p;
    if (gamma) j["exponent"] = *gamma;
    io.out << j.dump(2) << '\n';
    return kOk;
  }
  if (gamma) {
    io.out << "primitive, exponent " << *gamma << '\n';
  } else if (strongly_connected) {
    io.out << "not primitive, period " << p << '\n';
  } else {
    io.out << "not primitive, not strongly connected\n";
  }
  return kOk;
}

int run_check(const CheckArgs& args, Io io) {
  const Document doc = parse_document(read_input(args.input, io.in));
  if (const auto* a = std::get_if<AutomatonDocument>(&doc)) return check_automaton(*a, args, io);
  return check_digraph(std::get<DigraphDocument>(doc), args, io);
}

// family ----------------------------------------------------------------

struct FamilyArgs {
  std::string name;
  std::size_t n = 0;
  std::string format = "text";
  bool dot = false;
  bool json = false;
  bool exponent = false;
  bool reset_length = false;
  bool word = false;
};

int run_family(const FamilyArgs& args, Io io) {
  const FamilySpec spec = parse_family(args.name, args.n);
  const auto built = build(spec);
  const std::string label = spec.name() + "-" + std::to_string(spec.n);

  if (args.exponent) {
    const Digraph d = std::holds_alternative<Digraph>(built) ? std::get<Digraph>(built)
                                                             : underlying_digraph(std::get<Dfa>(built));
    const auto gamma = exponent(d);
    if (gamma) {
      io.out << *gamma << '\n';
    } else {
      io.out << "not primitive\n";
    }
    return kOk;
  }
  if (args.reset_length || args.word) {
    const auto* dfa = std::get_if<Dfa>(&built);
    if (dfa == nullptr) throw InvalidInput(label + " is a digraph, not an automaton");
    if (args.word) {
      const auto w = known_reset_word(spec);
      if (!w) throw InvalidInput("no closed-form reset word is known for " + label);
      io.out << to_string(*w) << '\n';
      return kOk;
    }
    const auto length = shortest_reset_length(*dfa);
    if (!length) throw InternalError(label + " is not synchronizing");
    io.out << *length << '\n';
    return kOk;
  }

  std::string format = args.format;
  if (args.dot) format = "dot";
  if (args.json) format = "json";
  std::visit(
      [&](const auto& object) {
        using T = std::decay_t<decltype(object)>;
        using Doc = std::conditional_t<std::is_same_v<T, Dfa>, AutomatonDocument, DigraphDocument>;
        const Doc doc{object, label};
        if (format == "dot") {
          io.out << to_dot(doc);
        } else if (format == "json") {
          io.out << to_json(doc).dump(2) << '\n';
        } else {
          io.out << to_text(doc);
        }
      },
      built);
  return kOk;
}

// census ----------------------------------------------------------------

struct CensusArgs {
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t workers = 1;
  std::string checkpoint;
  std::size_t min_length = 0;
  std::optional<std::size_t> max_slices;
  bool force = false;
  bool quotient_letters = false;
  bool raw = false;
  std::string format = "csv";
};

int run_census(const CensusArgs& args, Io io) {
  CensusOptions options;
  options.workers = args.workers;
  options.min_length = args.min_length;
  options.force = args.force;

  CensusResult result;
  if (!args.checkpoint.empty()) {
    const CheckpointedRun run = run_census_checkpointed(args.n, args.k, options, args.checkpoint, args.max_slices);
    if (!run.finished) {
      io.err << "checkpoint saved to " << args.checkpoint << " after " << run.slices_done_this_run
             << " slices; rerun to resume\n";
      return kOk;
    }
    result = run.result;
  } else {
    if (args.max_slices) throw InvalidInput("--max-slices needs --checkpoint");
    result = reset_length_census(args.n, args.k, options);
  }

  const Histogram& view = args.raw ? result.icdfa
                          : args.quotient_letters ? result.automata_up_to_letters
                                                  : result.automata;
  const std::string view_name = args.raw ? "initially-connected automata"
                                : args.quotient_letters ? "automata up to state and letter renaming"
                                                        : "automata up to state renaming";
  const GapReport report = gap_report(view, args.n);

  if (args.format == "json") {
    nlohmann::json j{{"n", args.n},
                     {"k", args.k},
                     {"icdfa", histogram_json(result.icdfa)},
                     {"automata", histogram_json(result.automata)},
                     {"automata_up_to_letters", histogram_json(result.automata_up_to_letters)}};
    nlohmann::json gaps{{"range", {report.range_low, report.range_high}},
                        {"empty", report.empty_lengths},
                        {"gap_below_max", report.gap_below_max},
                        {"first_gap_present", report.first_gap_present}};
    if (report.max_length) gaps["max_length"] = *report.max_length;
    if (report.runner_up_length) gaps["runner_up_length"] = *report.runner_up_length;
    j["gap_report"] = gaps;
    io.out << j.dump(2) << '\n';
  } else if (args.format == "text") {
    io.out << "census n=" << args.n << " k=" << args.k << ", counting " << view_name << '\n';
    io.out << format_gap_report(report) << '\n' << histogram_csv(view);
  } else {
    io.out << histogram_csv(view);
    io.err << "# " << view_name << '\n' << format_gap_report(report);
  }
  return kOk;
}

// conjecture ------------------------------------------------------------

struct ConjectureArgs {
  std::size_t vertices = 0;
  std::size_t letters = 2;
  bool force = false;
  std::string format = "text";
};

int run_conjecture(const ConjectureArgs& args, Io io) {
  ConjectureOptions options;
  options.letters = args.letters;
  options.force = args.force;
  const ConjectureReport report = conjecture_sweep(args.vertices, options);

  if (args.format == "json") {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : report.levels) {
      nlohmann::json violations = nlohmann::json::array();
      for (const auto& v : level.violations) {
        nlohmann::json entry = to_json(DigraphDocument{v.digraph, std::nullopt});
        entry["min_length"] = v.min_length ? nlohmann::json(*v.min_length) : nlohmann::json(nullptr);
        violations.push_back(entry);
      }
      nlohmann::json extremal = nlohmann::json::array();
      for (const auto& d : level.extremal) extremal.push_back(to_json(DigraphDocument{d, std::nullopt}));
      levels.push_back({{"n", level.n},
                        {"bound", level.bound},
                        {"digraphs", level.digraphs},
                        {"max_min_length", level.max_min_length},
                        {"extremal", extremal},
                        {"violations", violations}});
    }
    io.out << nlohmann::json{{"letters", report.letters}, {"levels", levels}, {"holds", report.holds()}}.dump(2)
           << '\n';
    return kOk;
  }
  for (const auto& level : report.levels) {
    io.out << "n=" << level.n << " primitive digraphs=" << level.digraphs << " bound=" << level.bound
           << " max=" << level.max_min_length << " violations=" << level.violations.size() << '\n';
    for (const auto& d : level.extremal) io.out << "  extremal: " << edge_list(d) << '\n';
    for (const auto& v : level.violations) {
      io.out << "  counterexample: " << edge_list(v.digraph) << " min length "
             << (v.min_length ? std::to_string(*v.min_length) : "none") << '\n';
    }
  }
  io.out << (report.holds() ? "bound holds" : "bound violated") << " for n <= " << args.vertices << " with "
         << args.letters << " letters\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing automata, primitive digraphs and their extremal families", "slowsync"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Reset length of an automaton, or exponent of a digraph");
  check_cmd->add_option("input", check.input, "Document path, '-' for stdin")->capture_default_str();
  check_cmd->add_option("--format", check.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_flag("--greedy", check.greedy, "Also report the greedy upper bound");
  check_cmd->add_option("--max-states", check.max_states, "State cap for the exact search")->capture_default_str();

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "Emit a member of a named family");
  family_cmd->add_option("name", family.name, "One of: " + [] {
    std::string names;
    for (const auto& n : family_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }())->required();
  family_cmd->add_option("n", family.n, "Size")->required();
  family_cmd->add_option("--format", family.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  family_cmd->add_flag("--dot", family.dot, "Same as --format dot");
  family_cmd->add_flag("--json", family.json, "Same as --format json");
  family_cmd->add_flag("--exponent", family.exponent, "Print the exponent of the (underlying) digraph");
  family_cmd->add_flag("--reset-length", family.reset_length, "Print the computed reset length");
  family_cmd->add_flag("--word", family.word, "Print the closed-form reset word");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "Reset-length histogram over all 2-letter (or k-letter) automata");
  census_cmd->add_option("n", census.n, "States")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("k", census.k, "Letters")->capture_default_str()->check(CLI::PositiveNumber);
  census_cmd->add_option("--workers", census.workers, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  census_cmd->add_option("--checkpoint", census.checkpoint, "Checkpoint file; resumes when present");
  census_cmd->add_option("--max-slices", census.max_slices, "Stop after this many slices (needs --checkpoint)");
  census_cmd->add_option("--min-length", census.min_length, "Fold lengths below this into one bucket");
  census_cmd->add_flag("--force", census.force, "Run above the feasibility cap");
  census_cmd->add_flag("--quotient-letters", census.quotient_letters, "Also identify automata differing by letter names");
  census_cmd->add_flag("--raw", census.raw, "Count initially-connected automata instead of isomorphism classes");
  census_cmd->add_option("--format", census.format, "Output format")->check(CLI::IsMember({"csv", "text", "json"}));

  ConjectureArgs conjecture;
  auto* conjecture_cmd =
      app.add_subcommand("conjecture", "Check the n^2-3n+3 coloring bound over all small primitive digraphs");
  conjecture_cmd->add_option("vertices", conjecture.vertices, "Largest vertex count")->required()->check(
      CLI::PositiveNumber);
  conjecture_cmd->add_option("--letters", conjecture.letters, "Letters")->capture_default_str()->check(
      CLI::PositiveNumber);
  conjecture_cmd->add_flag("--force", conjecture.force, "Run above the vertex cap");
  conjecture_cmd->add_option("--format", conjecture.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Io io{in, out, err};
  try {
    if (*check_cmd) return run_check(check, io);
    if (*family_cmd) return run_family(family, io);
    if (*census_cmd) return run_census(census, io);
    return run_conjecture(conjecture, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IntegrityError& e) {
    err << "corrupt checkpoint: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace slowsync::cli
