#include "zeckit/interspersion.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace zeckit {

const std::vector<ArraySpec>& builtin_arrays() {
    static const std::vector<ArraySpec> arrays = {
        {"wythoff", FRule{FKind::Wythoff}, "w1"},
        {"stolarsky", FRule{FKind::Stolarsky}, "s1"},
        {"dual", FRule{FKind::Dual}, "d1"},
        {"efc", DeltaRule{{1}, {1, 0}}, "efc1"},
        {"esc", DeltaRule{{}, {1, 0}}, "esc1"},
        {"k100", DeltaRule{{}, {1, 0, 0}}, "k100"},
    };
    return arrays;
}

const ArraySpec& builtin_array(std::string_view name) {
    for (const auto& a : builtin_arrays())
        if (a.name == name) return a;
    throw std::invalid_argument("unknown array '" + std::string(name) + "'");
}

Natural gen_fib(const Natural& a, const Natural& b, unsigned n) {
    if (n == 1) return a;
    Natural prev = a, cur = b;
    for (unsigned k = 2; k < n; ++k) {
        Natural next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Natural eval_f(FKind kind, const Natural& n) {
    switch (kind) {
        case FKind::Wythoff: return floor_alpha(n + 1) - 1;
        case FKind::Stolarsky: return (floor_alpha(2 * n) + 1) / 2;
        case FKind::Dual: return floor_alpha(n - 1) + 2;
    }
    throw std::invalid_argument("unknown f-rule");
}

unsigned delta_value(const ArraySpec& spec, std::uint64_t i) {
    const auto* rule = std::get_if<DeltaRule>(&spec.rule);
    if (!rule) throw std::logic_error(spec.name + " has no classification rule");
    if (i == 0) throw std::invalid_argument("rows are numbered from 1");
    if (i <= rule->preperiod.size()) return rule->preperiod[i - 1];
    return rule->period[(i - 1 - rule->preperiod.size()) % rule->period.size()];
}

Natural mex(const std::set<Natural>& s) {
    Natural m = 1;
    for (auto it = s.lower_bound(1); it != s.end() && *it == m; ++it) ++m;
    return m;
}

Natural second_entry(const ArraySpec& spec, std::uint64_t row, const Natural& first) {
    if (const auto* f = std::get_if<FRule>(&spec.rule)) return eval_f(f->kind, first);
    return floor_alpha(first) + delta_value(spec, row);
}

namespace {

// Successive first entries. Earlier rows are extended lazily: only their
// entries up to the current candidate are ever materialized.
class ColumnOne {
public:
    explicit ColumnOne(const ArraySpec& spec) : spec_(spec) {}

    std::pair<Natural, Natural> next_row() {
        Natural candidate = next_candidate_;
        while (true) {
            while (!pending_.empty() && pending_.top().value <= candidate) {
                Entry e = pending_.top();
                pending_.pop();
                used_.insert(e.value);
                pending_.push({e.value + e.prev, e.value});
            }
            if (used_.count(candidate) == 0) break;
            ++candidate;
        }
        ++row_;
        Natural second = second_entry(spec_, row_, candidate);
        used_.insert(candidate);
        pending_.push({second, candidate});
        // Entries below the candidate are no longer needed.
        used_.erase(used_.begin(), used_.lower_bound(candidate));
        next_candidate_ = candidate + 1;
        return {candidate, second};
    }

private:
    struct Entry {
        Natural value;
        Natural prev;
        bool operator>(const Entry& o) const { return value > o.value; }
    };

    const ArraySpec& spec_;
    std::uint64_t row_ = 0;
    Natural next_candidate_ = 1;
    std::set<Natural> used_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pending_;
};

}  // namespace

Table generate(const ArraySpec& spec, std::size_t rows, std::size_t cols) {
    Table t;
    ColumnOne column(spec);
    for (std::size_t i = 0; i < rows; ++i) {
        auto [a, b] = column.next_row();
        std::vector<Natural> row;
        Natural prev = a, cur = b;
        for (std::size_t j = 0; j < cols; ++j) {
            row.push_back(prev);
            Natural next = prev + cur;
            prev = std::move(cur);
            cur = std::move(next);
        }
        t.push_back(std::move(row));
    }
    return t;
}

std::vector<Natural> first_column(const ArraySpec& spec, std::size_t count) {
    std::vector<Natural> out;
    ColumnOne column(spec);
    for (std::size_t i = 0; i < count; ++i) out.push_back(column.next_row().first);
    return out;
}

std::string to_tsv(const Table& t) {
    std::ostringstream out;
    for (const auto& row : t) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j];
        out << '\n';
    }
    return out.str();
}

std::string to_pretty(const Table& t) {
    std::vector<std::size_t> width;
    for (const auto& row : t)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (width.size() <= j) width.push_back(0);
            width[j] = std::max(width[j], row[j].str().size());
        }
    std::ostringstream out;
    for (const auto& row : t) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string s = row[j].str();
            out << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace zeckit
