// The seven-step method: generate data, guess the first column, then prove
// the guess correct with first-order checks.
//
//   1 data            first terms of column 1 from the definition
//   2 guess           automaton for i -> A(i,1)
//   3 functionality   the guess is a total function on i >= 1
//   4 monotonicity    the guess is strictly increasing
//   5 columns-2-3     automata for columns 2 and 3 from the second-column rule
//   6 set-S           entries of columns >= 2 as one automaton
//   7 mex-induction   A(i,1) is the least positive integer outside S and
//                     outside A(1,1), ..., A(i-1,1)
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeckit/compiler.hpp"
#include "zeckit/interspersion.hpp"

namespace zeckit {

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::string array;
    std::vector<Check> steps;     // the seven steps, in order, up to the first failure
    std::vector<Check> evidence;  // oracle agreement and other supporting checks
    std::size_t col1_states = 0;
    std::size_t col2_states = 0;
    std::size_t col3_states = 0;
    std::vector<std::pair<std::string, bool>> theorems;

    bool fully_verified() const;
    /// One line per check: "<name> PASS|FAIL <detail>".
    std::string to_text() const;
};

struct PipelineOptions {
    std::size_t samples = 0;         // 0: the array's default
    std::uint64_t oracle_rows = 1000;
    bool theorems = true;
};

/// Default number of column-1 terms used for guessing.
std::size_t default_samples(const ArraySpec& spec);

/// Runs the seven steps, registering the certified automata in `reg`:
/// column 1 under spec.column1, the rest as "<array>_col2", "<array>_col3",
/// "<array>_S", ... When the steps pass and options.theorems is set, the
/// array's theorem suite runs too.
VerificationReport seven_step_verify(const ArraySpec& spec, Registry& reg, const PipelineOptions& options = {});

/// Proof-script text of the theorem suite for a built-in array, or for
/// "lemmas". The scripts use the column-1 names w1, s1, d1, efc1, esc1, k100.
const std::string& suite_script(const std::string& name);
std::vector<std::string> suite_names();

/// Evaluates the suite against a copy of `reg`; returns (eval name, value).
/// Throws std::logic_error if the array's column-1 automaton is missing.
std::vector<std::pair<std::string, bool>> theorem_suite(const std::string& name, const Registry& reg);

/// The output y with (x, y) accepted by a 2-track functional automaton.
std::optional<Natural> evaluate_function(const Dfa& a, const Natural& x);

/// delta_i = A(i,2) - floor(alpha A(i,1)) for i = 1..count.
std::vector<std::uint8_t> classification_sequence(const ArraySpec& spec, std::size_t count);

/// Number of distinct length-n factors. Throws InsufficientDataError when
/// the sequence is shorter than max(2^12, 2^n).
std::size_t subword_complexity(const std::vector<std::uint8_t>& seq, std::size_t n);

}  // namespace zeckit
