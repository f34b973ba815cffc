#pragma once

// Line-oriented text format for unary automata:
//
//   # optional comment lines
//   mode xnfa|nfa|dfa
//   states <n>
//   initial <i>
//   accepting <i> <j> ...
//   edge <from> <to>
//   ...
//
// serialize() always emits the canonical form (edges sorted by (from, to),
// single spaces, LF endings, no comments), which parse() reads back exactly.

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/error.hpp"

namespace uxnfa {

inline std::string_view mode_keyword(semantics mode) {
  switch (mode) {
    case semantics::existential: return "nfa";
    case semantics::exclusive: return "xnfa";
    case semantics::deterministic: return "dfa";
  }
  return "xnfa";
}

inline semantics parse_mode_keyword(std::string_view word) {
  if (word == "xnfa") return semantics::exclusive;
  if (word == "nfa") return semantics::existential;
  if (word == "dfa") return semantics::deterministic;
  throw error(errc::parse_error, "unknown mode '" + std::string(word) + "' (expected xnfa, nfa or dfa)");
}

struct automaton_file {
  unary_automaton automaton;
  semantics mode = semantics::exclusive;
};

inline std::string serialize(const unary_automaton& a, semantics mode) {
  std::ostringstream out;
  out << "mode " << mode_keyword(mode) << '\n'
      << "states " << a.state_count << '\n'
      << "initial " << a.initial << '\n'
      << "accepting";
  for (std::size_t f : a.accepting) out << ' ' << f;
  out << '\n';
  for (std::size_t q = 0; q < a.state_count; ++q)
    for (std::size_t r : a.successors[q]) out << "edge " << q << ' ' << r << '\n';
  return out.str();
}

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

}  // namespace detail

/// Parses and validates an automaton file.  Diagnostics name the offending
/// line.  Duplicate edges collapse into one.
inline automaton_file parse(std::string_view text) {
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    return error(errc::parse_error, "line " + std::to_string(line_no) + ": " + what);
  };
  auto index = [&](std::string_view word) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || end != word.data() + word.size())
      throw fail("expected a decimal index, got '" + std::string(word) + "'");
    return v;
  };

  enum class expect { mode, states, initial, accepting, edges } stage = expect::mode;
  automaton_file file;
  std::size_t states = 0, initial = 0;
  std::vector<std::size_t> accepting;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = detail::split_words(line);
    if (words.empty() || words.front().starts_with('#')) continue;

    const std::string_view key = words.front();
    switch (stage) {
      case expect::mode:
        if (key != "mode" || words.size() != 2) throw fail("expected 'mode xnfa|nfa|dfa'");
        try {
          file.mode = parse_mode_keyword(words[1]);
        } catch (const error&) {
          throw fail("unknown mode '" + std::string(words[1]) + "'");
        }
        stage = expect::states;
        break;
      case expect::states:
        if (key != "states" || words.size() != 2) throw fail("expected 'states <n>'");
        states = index(words[1]);
        if (states == 0) throw fail("an automaton needs at least one state");
        stage = expect::initial;
        break;
      case expect::initial:
        if (key != "initial" || words.size() != 2) throw fail("expected 'initial <i>'");
        initial = index(words[1]);
        stage = expect::accepting;
        break;
      case expect::accepting:
        if (key != "accepting") throw fail("expected 'accepting <i...>'");
        for (std::size_t i = 1; i < words.size(); ++i) accepting.push_back(index(words[i]));
        stage = expect::edges;
        break;
      case expect::edges:
        if (key != "edge" || words.size() != 3) throw fail("expected 'edge <from> <to>'");
        edges.emplace_back(index(words[1]), index(words[2]));
        break;
    }
  }
  if (stage != expect::edges) {
    ++line_no;
    throw fail("unexpected end of file");
  }
  file.automaton = make_automaton(states, initial, std::move(accepting), edges);
  require_valid(file.automaton, file.mode);
  return file;
}

}  // namespace uxnfa
