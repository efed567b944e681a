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

// Document formats shared by the command-line tool.
//
// Text automaton:   "dfa <n> <k>" then n lines of k targets (0-based).
// Text digraph:     "digraph <n>" then one "u v" edge per line.
// Lines starting with '#' are comments; "# name: <text>" names the document.
//
// JSON automaton:   {"type":"dfa","name":...,"states":n,"alphabet":k,"delta":[[...],...]}
// JSON digraph:     {"type":"digraph","name":...,"vertices":n,"edges":[[u,v],...]}
//
// DOT output labels vertices 1..n and letters a, b, c, ... as in the usual
// drawings of these automata.

#ifndef SLOWSYNC_FORMATS_HPP
#define SLOWSYNC_FORMATS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "slowsync/automaton.hpp"
#include "slowsync/digraph.hpp"

namespace slowsync {

struct AutomatonDocument {
  Dfa dfa;
  std::optional<std::string> name;
};

struct DigraphDocument {
  Digraph digraph;
  std::optional<std::string> name;
};

using Document = std::variant<AutomatonDocument, DigraphDocument>;

std::string to_text(const AutomatonDocument& doc);
std::string to_text(const DigraphDocument& doc);

nlohmann::json to_json(const AutomatonDocument& doc);
nlohmann::json to_json(const DigraphDocument& doc);

std::string to_dot(const AutomatonDocument& doc);
std::string to_dot(const DigraphDocument& doc);

/// Accepts either text format or JSON (detected by a leading '{').
/// Throws ParseError with the offending line and column.
Document parse_document(std::string_view input);
AutomatonDocument parse_automaton(std::string_view input);
DigraphDocument parse_digraph(std::string_view input);

/// Letter name used in DOT labels, spelled as in to_string(Word).
std::string letter_name(Letter a);

}  // namespace slowsync

#endif  // SLOWSYNC_FORMATS_HPP
