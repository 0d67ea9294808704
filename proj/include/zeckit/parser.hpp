// Parser for the Walnut-style query language.
//
// Precedence, tightest first: ~, &, |, =>, <=>. The last two associate to
// the right. A quantifier (A or E followed by a comma-separated variable
// list) scopes as far to the right as possible.
#pragma once

#include <string_view>

#include "zeckit/errors.hpp"
#include "zeckit/formula.hpp"

namespace zeckit {

class UnsupportedNumerationError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Parses an optional "?msd_fib" tag followed by a formula. Positions in
/// errors are reported relative to (first_line, first_column).
Formula parse(std::string_view source, std::size_t first_line = 1, std::size_t first_column = 1);

}  // namespace zeckit
