// Line-oriented text format and DOT export for automata.
//
//   tracks <k>
//   states <n>
//   initial <i>
//   final <i ...>
//   t <from> <b1...bk> <to>      (ascending by from, then symbol)
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zeckit/automaton.hpp"
#include "zeckit/errors.hpp"

namespace zeckit {

/// Serializes the minimized, breadth-first-numbered form of `a`.
std::string to_text(const Dfa& a);
Dfa from_text(std::string_view text);

std::string to_dot(const Dfa& a, std::string_view name);

void save_automaton(const std::filesystem::path& path, const Dfa& a);
Dfa load_automaton(const std::filesystem::path& path);

}  // namespace zeckit
