// Regular expressions over tuple alphabets.
//
//   [b1,...,bk]   a k-tuple literal (bare 0 or 1 is allowed when k = 1)
//   r|s  rs  r*  r+  r?  (r)
#pragma once

#include <string_view>

#include "zeckit/automaton.hpp"
#include "zeckit/errors.hpp"

namespace zeckit {

/// Minimal DFA for the pattern's language. Throws ParseError (line 1,
/// column = 1-based offset) on malformed patterns.
Dfa regex_to_dfa(std::string_view pattern, int tracks);

}  // namespace zeckit
