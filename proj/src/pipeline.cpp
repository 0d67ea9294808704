#include "zeckit/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "zeckit/inference.hpp"
#include "zeckit/parser.hpp"
#include "zeckit/regex.hpp"
#include "zeckit/script.hpp"

namespace zeckit {

bool VerificationReport::fully_verified() const {
    return steps.size() == 7 && std::all_of(steps.begin(), steps.end(), [](const Check& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    auto line = [&](const Check& c) {
        out << c.name << (c.passed ? " PASS" : " FAIL");
        if (!c.detail.empty()) out << ' ' << c.detail;
        out << '\n';
    };
    for (const auto& c : steps) line(c);
    for (const auto& c : evidence) line(c);
    for (const auto& [name, value] : theorems) line({"theorem:" + name, value, value ? "TRUE" : "FALSE"});
    line({"fully-verified", fully_verified(), array});
    return out.str();
}

std::size_t default_samples(const ArraySpec& spec) {
    if (spec.name == "wythoff") return 500;
    if (spec.name == "esc") return 2000;
    if (spec.name == "k100") return 15000;
    return 1000;
}

namespace {

const char* const kMexNote =
    "the check excludes values of all earlier first-column entries, including ones "
    "that are not below the candidate; since column 1 increases, those are larger "
    "than A(i,1) and cannot change the least missing value";

std::string col2_formula(const ArraySpec& spec) {
    const std::string& c1 = spec.column1;
    if (const auto* f = std::get_if<FRule>(&spec.rule)) {
        switch (f->kind) {
            case FKind::Wythoff: return "Ex,y $" + c1 + "(i,x) & $phin(x+1,y) & z+1=y";
            case FKind::Stolarsky: return "En,y $" + c1 + "(i,n) & $phin(2*n,y) & z=(y+1)/2";
            case FKind::Dual: return "Ex,y $" + c1 + "(i,x) & $phin(x-1,y) & z=y+2";
        }
    }
    return "Ex,y,r $" + c1 + "(i,x) & $phin(x,y) & $" + spec.name + "_delta(i,r) & z=y+r";
}

// delta(i, r): the preperiod bits for i = 1..p, then the period from i = p+1 on.
// A purely periodic sequence is also defined at i = 0 by extending it backwards.
std::string delta_formula(const DeltaRule& rule) {
    std::vector<std::string> cases;
    const std::size_t p = rule.preperiod.size(), period = rule.period.size();
    for (std::size_t k = 0; k < p; ++k)
        cases.push_back("(i=" + std::to_string(k + 1) + " & r=" + std::to_string(rule.preperiod[k]) + ")");
    const std::string guard = p == 0 ? "" : "i>=" + std::to_string(p + 1) + " & ";
    for (std::size_t j = 0; j < period; ++j) {
        const std::string bit = "r=" + std::to_string(rule.period[j]);
        if (period == 1) {
            cases.push_back("(" + guard + bit + ")");
        } else {
            const std::size_t residue = (p + 1 + j) % period;
            cases.push_back("(" + guard + "Eq i=" + std::to_string(period) + "*q+" + std::to_string(residue) + " & " +
                            bit + ")");
        }
    }
    std::string out;
    for (const auto& c : cases) out += (out.empty() ? "" : " | ") + c;
    return out;
}

bool holds(const Registry& reg, const std::string& sentence) { return eval_sentence(parse(sentence), reg); }

void define_as(Registry& reg, const std::string& name, const std::string& formula) {
    reg.add(name, compile(parse(formula), reg));
}

std::string verdict(const std::string& name, bool value) { return name + (value ? " TRUE" : " FALSE"); }

}  // namespace

VerificationReport seven_step_verify(const ArraySpec& spec, Registry& reg, const PipelineOptions& options) {
    VerificationReport report;
    report.array = spec.name;
    const std::string& c1 = spec.column1;
    const std::string prefix = spec.name + "_";
    auto step = [&](const std::string& name, bool ok, std::string detail) {
        report.steps.push_back({name, ok, std::move(detail)});
        return ok;
    };

    // 1. data
    const std::size_t n = options.samples ? options.samples : default_samples(spec);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    const auto column = first_column(spec, n);
    for (std::size_t i = 0; i < column.size(); ++i)
        pairs.emplace_back(i + 1, column[i].convert_to<std::uint64_t>());
    step("data", true, std::to_string(n) + " terms of column 1");

    // 2. guess
    const Dfa col1 = guess_dfa(SampleSet(std::move(pairs)));
    reg.add(c1, col1);
    report.col1_states = col1.live_state_count();
    step("guess", true, c1 + ": " + std::to_string(report.col1_states) + " states");

    // 3. functionality
    const bool total = holds(reg, "An (n>=1) => Ex $" + c1 + "(n,x)");
    const bool functional = holds(reg, "~En,x,y n>=1 & x!=y & $" + c1 + "(n,x) & $" + c1 + "(n,y)");
    if (!step("functionality", total && functional,
              verdict(c1 + "_func1", total) + "; " + verdict(c1 + "_func2", functional)))
        return report;

    // 4. monotonicity
    const bool increasing = holds(reg, "An,x,y (n>=1 & $" + c1 + "(n,x) & $" + c1 + "(n+1,y)) => x<y");
    if (!step("monotonicity", increasing, verdict("increasing_" + c1, increasing))) return report;

    // 5. columns 2 and 3
    if (const auto* rule = std::get_if<DeltaRule>(&spec.rule)) define_as(reg, prefix + "delta", delta_formula(*rule));
    define_as(reg, prefix + "col2", col2_formula(spec));
    define_as(reg, prefix + "col3", "Ex,y $" + c1 + "(i,x) & $" + prefix + "col2(i,y) & z=x+y");
    report.col2_states = reg.at(prefix + "col2").live_state_count();
    report.col3_states = reg.at(prefix + "col3").live_state_count();
    const bool col_total = holds(reg, "Ai (i>=1) => Ez $" + prefix + "col2(i,z)") &&
                           holds(reg, "~Ei,y,z i>=1 & y!=z & $" + prefix + "col2(i,y) & $" + prefix + "col2(i,z)");
    if (!step("columns-2-3", col_total,
              prefix + "col2: " + std::to_string(report.col2_states) + " states; " + prefix +
                  "col3: " + std::to_string(report.col3_states) + " states"))
        return report;

    // 6. the set S of entries in columns >= 2
    define_as(reg, prefix + "c3mem", "Ei i>=1 & $" + prefix + "col3(i,n)");
    reg.add("all0", minimize(restrict_valid(regex_to_dfa("0*", 1))).with_labels({"x0"}));
    reg.add(prefix + "cols3", renumerate(concat_languages(reg.at(prefix + "c3mem"), reg.at("all0"))));
    define_as(reg, prefix + "S", "(Ei i>=1 & $" + prefix + "col2(i,n)) | $" + prefix + "cols3(n)");
    step("set-S", true, prefix + "S: " + std::to_string(reg.at(prefix + "S").live_state_count()) + " states");

    // 7. mex induction
    define_as(reg, prefix + "chk", "(~$" + prefix + "S(n)) & Aj,x (j<i & $" + c1 + "(j,x)) => n!=x");
    define_as(reg, prefix + "mex", "$" + prefix + "chk(i,x) & Ay (y>=1 & $" + prefix + "chk(i,y)) => y>=x");
    const bool base = holds(reg, "$" + c1 + "(1,1)");
    const bool induction = holds(reg, "Ai,x (i>=2 & $" + prefix + "mex(i,x)) => $" + c1 + "(i,x)");
    if (!step("mex-induction", base && induction,
              verdict(c1 + "(1,1)", base) + "; " + verdict("chk_" + spec.name, induction)))
        return report;

    // Supporting evidence.
    const bool disjoint = holds(reg, "~Ei,x i>=1 & $" + c1 + "(i,x) & $" + prefix + "S(x)");
    report.evidence.push_back({"col1-disjoint-from-S", disjoint, disjoint ? "no column-1 value lies in S" : ""});
    report.evidence.push_back({"mex-note", true, kMexNote});
    if (options.oracle_rows > 0) {
        const Table t = generate(spec, options.oracle_rows, 3);
        const Dfa* cols[] = {&reg.at(c1), &reg.at(prefix + "col2"), &reg.at(prefix + "col3")};
        std::string mismatch;
        for (std::size_t i = 0; i < t.size() && mismatch.empty(); ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (evaluate_function(*cols[j], Natural(i + 1)) != t[i][j]) {
                    mismatch = "column " + std::to_string(j + 1) + " differs at i=" + std::to_string(i + 1);
                    break;
                }
        report.evidence.push_back({"oracle-agreement", mismatch.empty(),
                                   mismatch.empty() ? "columns 1-3 match the generator for i <= " +
                                                          std::to_string(options.oracle_rows)
                                                    : mismatch});
    }

    if (options.theorems) report.theorems = theorem_suite(spec.name, reg);
    return report;
}

std::vector<std::pair<std::string, bool>> theorem_suite(const std::string& name, const Registry& reg) {
    if (name != "lemmas") {
        const ArraySpec& spec = builtin_array(name);
        if (!reg.contains(spec.column1))
            throw std::logic_error("theorem suite for " + name + " needs a verified " + spec.column1);
    }
    Registry scratch = reg;
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& r : run_commands(parse_script(suite_script(name)), scratch))
        if (r.value) out.emplace_back(r.name, *r.value);
    return out;
}

std::optional<Natural> evaluate_function(const Dfa& a, const Natural& x) {
    if (a.track_count() != 2) throw CompositionError("function evaluation needs a 2-track automaton");
    const ZeckWord in = encode(x);
    const std::size_t n = a.state_count();
    constexpr std::size_t kNone = SIZE_MAX;
    // Try padded lengths in increasing order; the output may be a few digits longer than the input.
    for (std::size_t length = std::max<std::size_t>(in.size(), 1); length <= in.size() + 12; ++length) {
        const ZeckWord padded = in.padded(length);
        // parent[pos][q] = (previous state, output bit) encoded as 2*prev + bit.
        std::vector<std::vector<std::size_t>> parent(length + 1, std::vector<std::size_t>(n, kNone));
        parent[0][a.initial()] = 0;
        for (std::size_t pos = 0; pos < length; ++pos)
            for (State q = 0; q < n; ++q) {
                if (parent[pos][q] == kNone) continue;
                for (unsigned bit = 0; bit < 2; ++bit) {
                    State t = a.next(q, static_cast<Symbol>(padded.digits()[pos] << 1 | bit));
                    if (parent[pos + 1][t] == kNone) parent[pos + 1][t] = 2 * q + bit;
                }
            }
        for (State q = 0; q < n; ++q) {
            if (parent[length][q] == kNone || !a.is_final(q)) continue;
            std::vector<std::uint8_t> digits(length);
            State cur = q;
            for (std::size_t pos = length; pos > 0; --pos) {
                digits[pos - 1] = static_cast<std::uint8_t>(parent[pos][cur] & 1);
                cur = static_cast<State>(parent[pos][cur] >> 1);
            }
            return decode(ZeckWord(std::move(digits)));
        }
    }
    return std::nullopt;
}

std::vector<std::uint8_t> classification_sequence(const ArraySpec& spec, std::size_t count) {
    std::vector<std::uint8_t> out;
    for (const auto& row : generate(spec, count, 2))
        out.push_back(static_cast<std::uint8_t>(row[1] - floor_alpha(row[0])));
    return out;
}

std::size_t subword_complexity(const std::vector<std::uint8_t>& seq, std::size_t n) {
    const std::size_t needed = n >= 12 ? (n >= 63 ? SIZE_MAX : std::size_t{1} << n) : std::size_t{1} << 12;
    if (seq.size() < needed)
        throw InsufficientDataError("need at least " + std::to_string(needed) + " terms for factors of length " +
                                    std::to_string(n));
    if (n == 0) return 1;
    std::set<std::vector<std::uint8_t>> factors;
    for (std::size_t i = 0; i + n <= seq.size(); ++i) factors.emplace(seq.begin() + i, seq.begin() + i + n);
    return factors.size();
}

}  // namespace zeckit
