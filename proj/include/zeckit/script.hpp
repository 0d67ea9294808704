// Proof scripts in Walnut command syntax.
//
//   def <name> "<formula>":
//   eval <name> "<formula>":
//   reg <name> msd_fib ... msd_fib "<regex>":
//   concat <out> <a> <b>:
//   alphabet <out> msd_fib $<a>:
//
// '#' starts a comment that runs to the end of the line.
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeckit/compiler.hpp"
#include "zeckit/errors.hpp"

namespace zeckit {

struct Command {
    enum class Kind { Def, Eval, Reg, Concat, Alphabet };
    Kind kind;
    std::string name;
    std::vector<std::string> args;  // concat/alphabet operands
    std::string body;               // formula or regex text
    int tracks = 0;                 // reg
    std::size_t line = 0;
    std::size_t body_line = 0;      // position of the body's first character
    std::size_t body_column = 0;
};

/// Throws ParseError on malformed commands.
std::vector<Command> parse_script(std::string_view text);

struct CommandResult {
    Command::Kind kind;
    std::string name;
    std::optional<bool> value;  // eval only
};

/// Intersects with track validity, drops leading-zero distinctions, minimizes.
Dfa renumerate(const Dfa& a);

/// Runs `commands` in order. Automata produced by def/reg/concat/alphabet go
/// into `reg` and, when `store` is non-empty, into `<store>/<name>.aut`.
/// `on_result` sees each command as it finishes.
std::vector<CommandResult> run_commands(const std::vector<Command>& commands, Registry& reg,
                                        const std::filesystem::path& store = {},
                                        const std::function<void(const CommandResult&)>& on_result = {});

/// Loads every `<name>.aut` file in `store` into `reg`.
void load_store(const std::filesystem::path& store, Registry& reg);

std::string to_string(const CommandResult& r);

}  // namespace zeckit
