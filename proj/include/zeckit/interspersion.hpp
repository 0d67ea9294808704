// Stolarsky interspersions generated exactly from their definition.
//
// Row i is a generalized Fibonacci sequence seeded by A(i,1), A(i,2). The
// first entry of a row is the least positive integer missing from all
// earlier rows; the second is f(A(i,1)), or floor(alpha A(i,1)) + delta_i.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zeckit/zeckendorf.hpp"

namespace zeckit {

enum class FKind { Wythoff, Stolarsky, Dual };

struct FRule {
    FKind kind;
};

/// delta_1, delta_2, ...: the preperiod, then the period repeated forever.
struct DeltaRule {
    std::vector<std::uint8_t> preperiod;
    std::vector<std::uint8_t> period;
};

struct ArraySpec {
    std::string name;
    std::variant<FRule, DeltaRule> rule;
    /// Name of the first-column automaton in proof scripts ("w1", "s1", ...).
    std::string column1;
};

/// wythoff, stolarsky, dual, efc, esc, k100.
const std::vector<ArraySpec>& builtin_arrays();
/// Throws std::invalid_argument for unknown names.
const ArraySpec& builtin_array(std::string_view name);

using Table = std::vector<std::vector<Natural>>;

/// F^{a,b}(n) with F(1) = a, F(2) = b.
Natural gen_fib(const Natural& a, const Natural& b, unsigned n);

Natural eval_f(FKind kind, const Natural& n);

/// Throws std::logic_error when the spec has an f-rule.
unsigned delta_value(const ArraySpec& spec, std::uint64_t i);

/// Least positive integer not in s.
Natural mex(const std::set<Natural>& s);

/// Second entry of the row whose first entry is `first`.
Natural second_entry(const ArraySpec& spec, std::uint64_t row, const Natural& first);

Table generate(const ArraySpec& spec, std::size_t rows, std::size_t cols);
std::vector<Natural> first_column(const ArraySpec& spec, std::size_t count);

std::string to_tsv(const Table& t);
std::string to_pretty(const Table& t);

}  // namespace zeckit
