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

#include "slowsync/formats.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <vector>

#include "slowsync/errors.hpp"

namespace slowsync {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t to_number(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Splits into non-comment, non-blank lines; collects "# name:" metadata.
std::vector<Line> content_lines(std::string_view input, std::optional<std::string>& name) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    const std::size_t end = std::min(input.find('\n', pos), input.size());
    const std::string_view line = input.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == input.size()) break;
      continue;
    }
    if (line[first] == '#') {
      std::string_view rest = line.substr(first + 1);
      const std::size_t key = rest.find_first_not_of(' ');
      if (key != std::string_view::npos && rest.substr(key).starts_with("name:")) {
        std::string value(rest.substr(key + 5));
        value.erase(0, value.find_first_not_of(' '));
        while (!value.empty() && (value.back() == ' ' || value.back() == '\r')) value.pop_back();
        name = value;
      }
    } else {
      out.push_back({number, tokenize(line)});
    }
    if (end == input.size()) break;
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string name_comment(const std::optional<std::string>& name) { return name ? "# name: " + *name + "\n" : ""; }

AutomatonDocument automaton_from_text(const std::vector<Line>& lines, std::optional<std::string> name) {
  const Line& header = lines.front();
  if (header.tokens.size() != 3) throw ParseError(header.number, 0, "header must be 'dfa <n> <k>'");
  const std::size_t n = to_number(header.tokens[1], header.number);
  const std::size_t k = to_number(header.tokens[2], header.number);
  if (n == 0 || k == 0) throw ParseError(header.number, header.tokens[1].column, "n and k must be positive");
  if (n > kMaxStates) throw ParseError(header.number, header.tokens[1].column, "too many states");
  if (lines.size() != n + 1) {
    const Line& last = lines.back();
    throw ParseError(last.number, 0, "expected " + std::to_string(n) + " transition rows, found " +
                                         std::to_string(lines.size() - 1));
  }
  std::vector<State> table;
  table.reserve(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    const Line& row = lines[q + 1];
    if (row.tokens.size() != k) {
      throw ParseError(row.number, 0, "expected " + std::to_string(k) + " targets, found " +
                                          std::to_string(row.tokens.size()));
    }
    for (const Token& t : row.tokens) {
      const std::size_t target = to_number(t, row.number);
      if (target >= n) throw ParseError(row.number, t.column, "target " + std::to_string(target) + " out of range");
      table.push_back(static_cast<State>(target));
    }
  }
  return {Dfa(n, k, std::move(table)), std::move(name)};
}

DigraphDocument digraph_from_text(const std::vector<Line>& lines, std::optional<std::string> name) {
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, 0, "header must be 'digraph <n>'");
  const std::size_t n = to_number(header.tokens[1], header.number);
  if (n == 0 || n > kMaxStates) throw ParseError(header.number, header.tokens[1].column, "bad vertex count");
  std::vector<std::uint64_t> rows(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) throw ParseError(line.number, 0, "edge lines must be 'u v'");
    const std::size_t u = to_number(line.tokens[0], line.number);
    const std::size_t v = to_number(line.tokens[1], line.number);
    if (u >= n) throw ParseError(line.number, line.tokens[0].column, "vertex out of range");
    if (v >= n) throw ParseError(line.number, line.tokens[1].column, "vertex out of range");
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (rows[u] & bit) throw ParseError(line.number, 0, "duplicate edge");
    rows[u] |= bit;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v] == 0) throw ParseError(lines.back().number, 0, "vertex " + std::to_string(v) + " has no outgoing edge");
  }
  return {Digraph(n, std::move(rows)), std::move(name)};
}

std::optional<std::string> json_name(const nlohmann::json& j) {
  if (j.contains("name") && j["name"].is_string()) return j["name"].get<std::string>();
  return std::nullopt;
}

Document document_from_json(std::string_view input) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "invalid JSON");
  }
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "dfa") {
      const auto n = j.at("states").get<std::size_t>();
      const auto k = j.at("alphabet").get<std::size_t>();
      const auto rows = j.at("delta").get<std::vector<std::vector<State>>>();
      if (rows.size() != n) throw ParseError(1, 0, "delta must have one row per state");
      for (const auto& r : rows) {
        if (r.size() != k) throw ParseError(1, 0, "delta rows must have one entry per letter");
      }
      return AutomatonDocument{Dfa::from_rows(rows), json_name(j)};
    }
    if (type == "digraph") {
      const auto n = j.at("vertices").get<std::size_t>();
      const auto edges = j.at("edges").get<std::vector<std::pair<Vertex, Vertex>>>();
      return DigraphDocument{Digraph::from_edges(n, edges), json_name(j)};
    }
    throw ParseError(1, 0, "unknown document type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 0, std::string("malformed document: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(1, 0, e.what());
  }
}

}  // namespace

std::string letter_name(Letter a) { return to_string(Word{a}); }

std::string to_text(const AutomatonDocument& doc) {
  std::ostringstream out;
  out << name_comment(doc.name);
  out << "dfa " << doc.dfa.states() << ' ' << doc.dfa.letters() << '\n';
  for (State q = 0; q < doc.dfa.states(); ++q) {
    const auto row = doc.dfa.row(q);
    for (std::size_t a = 0; a < row.size(); ++a) out << (a ? " " : "") << row[a];
    out << '\n';
  }
  return out.str();
}

std::string to_text(const DigraphDocument& doc) {
  std::ostringstream out;
  out << name_comment(doc.name);
  out << "digraph " << doc.digraph.vertices() << '\n';
  for (auto [u, v] : doc.digraph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

nlohmann::json to_json(const AutomatonDocument& doc) {
  nlohmann::json j;
  j["type"] = "dfa";
  if (doc.name) j["name"] = *doc.name;
  j["states"] = doc.dfa.states();
  j["alphabet"] = doc.dfa.letters();
  auto delta = nlohmann::json::array();
  for (State q = 0; q < doc.dfa.states(); ++q) {
    const auto row = doc.dfa.row(q);
    delta.push_back(std::vector<State>(row.begin(), row.end()));
  }
  j["delta"] = std::move(delta);
  return j;
}

nlohmann::json to_json(const DigraphDocument& doc) {
  nlohmann::json j;
  j["type"] = "digraph";
  if (doc.name) j["name"] = *doc.name;
  j["vertices"] = doc.digraph.vertices();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : doc.digraph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

std::string to_dot(const AutomatonDocument& doc) {
  const Dfa& dfa = doc.dfa;
  std::ostringstream out;
  out << "digraph " << quote(doc.name.value_or("automaton")) << " {\n";
  out << "  rankdir=LR;\n  node [shape=circle];\n";
  for (State q = 0; q < dfa.states(); ++q) out << "  " << quote(std::to_string(q + 1)) << ";\n";
  for (State q = 0; q < dfa.states(); ++q) {
    // One arrow per target, labelled with every letter that takes it.
    std::map<State, std::string> labels;
    for (Letter a = 0; a < dfa.letters(); ++a) {
      std::string& label = labels[dfa.next(q, a)];
      label += (label.empty() ? "" : ",") + letter_name(a);
    }
    for (const auto& [target, label] : labels) {
      out << "  " << quote(std::to_string(q + 1)) << " -> " << quote(std::to_string(target + 1))
          << " [label=" << quote(label) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DigraphDocument& doc) {
  std::ostringstream out;
  out << "digraph " << quote(doc.name.value_or("digraph")) << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < doc.digraph.vertices(); ++v) out << "  " << quote(std::to_string(v + 1)) << ";\n";
  for (auto [u, v] : doc.digraph.edges()) {
    out << "  " << quote(std::to_string(u + 1)) << " -> " << quote(std::to_string(v + 1)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

Document parse_document(std::string_view input) {
  const std::size_t first = input.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && input[first] == '{') return document_from_json(input);

  std::optional<std::string> name;
  const std::vector<Line> lines = content_lines(input, name);
  if (lines.empty()) throw ParseError(1, 0, "empty document");
  const Line& header = lines.front();
  if (header.tokens.empty()) throw ParseError(header.number, 0, "missing header");
  const std::string_view kind = header.tokens.front().text;
  if (kind == "dfa") return automaton_from_text(lines, std::move(name));
  if (kind == "digraph") return digraph_from_text(lines, std::move(name));
  throw ParseError(header.number, header.tokens.front().column,
                   "expected 'dfa' or 'digraph', got '" + std::string(kind) + "'");
}

AutomatonDocument parse_automaton(std::string_view input) {
  Document doc = parse_document(input);
  if (auto* a = std::get_if<AutomatonDocument>(&doc)) return std::move(*a);
  throw ParseError(1, 0, "expected an automaton document, got a digraph");
}

DigraphDocument parse_digraph(std::string_view input) {
  Document doc = parse_document(input);
  if (auto* d = std::get_if<DigraphDocument>(&doc)) return std::move(*d);
  throw ParseError(1, 0, "expected a digraph document, got an automaton");
}

}  // namespace slowsync
