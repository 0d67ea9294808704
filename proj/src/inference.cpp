#include "zeckit/inference.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "zeckit/zeckendorf.hpp"

namespace zeckit {

SampleSet::SampleSet(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    for (const auto& p : pairs) {
        if (!pairs_.empty() && pairs_.back().first == p.first) {
            if (pairs_.back().second != p.second)
                throw SampleError("inconsistent samples for i = " + std::to_string(p.first));
            continue;
        }
        pairs_.push_back(p);
    }
    std::uint64_t next = 1;
    for (const auto& [i, v] : pairs_) {
        if (i == 0) continue;
        if (i != next) break;
        complete_upto_ = i;
        ++next;
    }
}

std::optional<std::uint64_t> SampleSet::value(std::uint64_t i) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair<std::uint64_t, std::uint64_t>{i, 0});
    if (it == pairs_.end() || it->first != i) return std::nullopt;
    return it->second;
}

SampleSet read_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SampleError("cannot open " + path.string());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::uint64_t i = 0, v = 0;
        std::string rest;
        if (!(ls >> i >> v) || (ls >> rest))
            throw SampleError(path.string() + ":" + std::to_string(n) + ": expected '<i> <value>'");
        pairs.emplace_back(i, v);
    }
    return SampleSet(std::move(pairs));
}

void write_samples(const std::filesystem::path& path, const SampleSet& s) {
    std::ofstream out(path);
    if (!out) throw SampleError("cannot write " + path.string());
    for (const auto& [i, v] : s.pairs()) out << i << ' ' << v << '\n';
}

namespace {

// Running value of one msd-first track: cur = value of the digits so far,
// next = value if a 0 were appended. Appending d gives (next + d, cur + next + 2d).
struct TrackValue {
    std::uint64_t cur = 0;
    std::uint64_t next = 0;
    std::uint8_t last = 0;
};

struct Prefix {
    std::vector<TrackValue> tracks;
    std::size_t length = 0;
    bool valid = true;
};

Prefix append(const Prefix& p, Symbol a) {
    Prefix q = p;
    const int k = static_cast<int>(p.tracks.size());
    ++q.length;
    for (int t = 0; t < k; ++t) {
        const std::uint8_t d = static_cast<std::uint8_t>(track_bit(a, t, k));
        auto& tv = q.tracks[t];
        if (d && tv.last) q.valid = false;
        const std::uint64_t cur = tv.next + d;
        tv.next = tv.cur + tv.next + 2 * d;
        tv.cur = cur;
        tv.last = d;
    }
    return q;
}

using Oracle = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

class Table {
public:
    Table(int inputs, const Oracle& f, std::size_t suffix_length)
        : k_(inputs + 1), f_(f), s_(suffix_length), subtree_(suffix_length + 2, 0) {
        // subtree_[d] = entries in a row subtree rooted at depth d.
        const std::size_t sigma = symbol_count(k_);
        subtree_[s_] = 1;
        for (std::size_t d = s_; d-- > 0;) subtree_[d] = 1 + sigma * subtree_[d + 1];
    }

    bool member(const Prefix& p) const {
        if (!p.valid) return false;
        std::uint64_t in[kMaxTracks];
        for (int t = 0; t + 1 < k_; ++t) in[t] = p.tracks[t].cur;
        return f_(std::span<const std::uint64_t>(in, static_cast<std::size_t>(k_ - 1))) == p.tracks.back().cur;
    }

    std::vector<std::uint64_t> row(const Prefix& p) const {
        std::vector<std::uint64_t> bits((subtree_[0] + 63) / 64, 0);
        std::size_t index = 0;
        fill(p, 0, bits, index);
        return bits;
    }

private:
    void fill(const Prefix& p, std::size_t depth, std::vector<std::uint64_t>& bits, std::size_t& index) const {
        if (!p.valid) {
            index += subtree_[depth];
            return;
        }
        if (member(p)) bits[index / 64] |= std::uint64_t{1} << (index % 64);
        ++index;
        if (depth == s_) return;
        const Symbol sigma = static_cast<Symbol>(symbol_count(k_));
        for (Symbol a = 0; a < sigma; ++a) fill(append(p, a), depth + 1, bits, index);
    }

    int k_;
    const Oracle& f_;
    std::size_t s_;
    std::vector<std::size_t> subtree_;
};

struct RowHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = v.size();
        for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// Words of length <= window have every input <= bound, so their membership is known.
std::size_t window_length(std::uint64_t bound) {
    std::size_t length = 0;
    while (fibonacci(static_cast<unsigned>(length + 3)) - 1 <= bound) ++length;
    return length;
}

std::optional<Dfa> hypothesis(int inputs, const Oracle& f, std::size_t window, std::size_t s,
                              std::size_t budget) {
    const int k = inputs + 1;
    const Table table(inputs, f, s);
    const Symbol sigma = static_cast<Symbol>(symbol_count(k));
    std::vector<Prefix> reps;
    std::unordered_map<std::vector<std::uint64_t>, State, RowHash> index;
    std::vector<State> delta;
    std::vector<bool> finals;

    Prefix root;
    root.tracks.resize(static_cast<std::size_t>(k));
    index.emplace(table.row(root), 0);
    reps.push_back(root);
    finals.push_back(table.member(root));
    for (std::size_t r = 0; r < reps.size(); ++r) {
        if (reps[r].length + 1 + s > window) return std::nullopt;
        for (Symbol a = 0; a < sigma; ++a) {
            Prefix child = append(reps[r], a);
            auto [it, inserted] = index.emplace(table.row(child), static_cast<State>(reps.size()));
            if (inserted) {
                if (reps.size() >= budget) return std::nullopt;
                finals.push_back(table.member(child));
                reps.push_back(std::move(child));
            }
            delta.push_back(it->second);
        }
    }
    Dfa h(k, 0, std::move(finals), std::move(delta));
    return minimize(normalize_leading_zeros(restrict_valid(h)));
}

Symbol tuple_symbol(const std::vector<const ZeckWord*>& words, std::size_t length, std::size_t pos,
                    unsigned output_bit) {
    Symbol s = 0;
    for (const ZeckWord* w : words) {
        const std::size_t offset = length - w->size();
        s = (s << 1) | (pos >= offset ? w->digits()[pos - offset] : 0u);
    }
    return (s << 1) | output_bit;
}

// Exactly one output word of each padded length is accepted, and it is `out`.
bool unique_output(const Dfa& a, const std::vector<ZeckWord>& in, const ZeckWord& out, std::size_t max_pad) {
    std::vector<const ZeckWord*> words;
    std::size_t base = out.size();
    for (const auto& w : in) {
        words.push_back(&w);
        base = std::max(base, w.size());
    }
    std::vector<std::uint8_t> count(a.state_count()), next(a.state_count());
    for (std::size_t pad = 0; pad <= max_pad; ++pad) {
        const std::size_t length = base + pad;
        State q = a.initial();
        for (std::size_t pos = 0; pos < length; ++pos) {
            const std::size_t offset = length - out.size();
            const unsigned bit = pos >= offset ? out.digits()[pos - offset] : 0u;
            q = a.next(q, tuple_symbol(words, length, pos, bit));
        }
        if (!a.is_final(q)) return false;

        std::fill(count.begin(), count.end(), 0);
        count[a.initial()] = 1;
        for (std::size_t pos = 0; pos < length; ++pos) {
            std::fill(next.begin(), next.end(), 0);
            for (State p = 0; p < a.state_count(); ++p) {
                if (!count[p]) continue;
                for (unsigned bit = 0; bit < 2; ++bit) {
                    State t = a.next(p, tuple_symbol(words, length, pos, bit));
                    next[t] = static_cast<std::uint8_t>(std::min(2, next[t] + count[p]));
                }
            }
            std::swap(count, next);
        }
        unsigned accepted = 0;
        for (State p = 0; p < a.state_count(); ++p)
            if (a.is_final(p)) accepted += count[p];
        if (accepted != 1) return false;
    }
    return true;
}

Dfa guess(int inputs, std::uint64_t bound, const Oracle& f, const GuessOptions& options,
          const std::function<bool(const Dfa&)>& sound) {
    const std::size_t window = window_length(bound);
    if (window < 2) throw InferenceError("too few samples to guess an automaton");
    for (std::size_t s = 1; s + 1 < window; ++s) {
        auto h = hypothesis(inputs, f, window, s, options.state_budget);
        if (h && h->state_count() <= options.state_budget && sound(*h)) return *h;
    }
    throw InferenceError("no automaton within " + std::to_string(options.state_budget) +
                         " states is consistent with the samples");
}

}  // namespace

bool sound_on_samples(const Dfa& a, const SampleSet& samples, std::size_t max_pad) {
    if (a.track_count() != 2) return false;
    for (const auto& [i, v] : samples.pairs())
        if (!unique_output(a, {encode_u64(i)}, encode_u64(v), max_pad)) return false;
    return true;
}

Dfa guess_dfa(const SampleSet& samples, const GuessOptions& options) {
    if (samples.pairs().empty()) throw SampleError("no samples");
    const std::uint64_t zero = samples.value(0).value_or(0);
    const std::uint64_t bound = samples.complete_upto();
    Oracle f = [&](std::span<const std::uint64_t> in) {
        return in[0] == 0 ? zero : *samples.value(in[0]);
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> all = samples.pairs();
    if (!samples.value(0)) all.emplace_back(0, 0);
    const SampleSet checked(std::move(all));
    Dfa a = guess(1, bound, f, options, [&](const Dfa& h) { return sound_on_samples(h, checked, options.max_pad); });
    return a.with_labels({"x0", "x1"});
}

Dfa guess_function(int inputs, std::uint64_t bound, const Oracle& f, const GuessOptions& options) {
    if (inputs < 1 || inputs + 1 > kMaxTracks) throw InferenceError("unsupported input count");
    auto sound = [&](const Dfa& h) {
        std::vector<std::uint64_t> in(static_cast<std::size_t>(inputs), 0);
        while (true) {
            std::vector<ZeckWord> words;
            for (auto x : in) words.push_back(encode_u64(x));
            if (!unique_output(h, words, encode_u64(f(in)), options.max_pad)) return false;
            std::size_t t = 0;
            while (t < in.size() && in[t] == bound) in[t++] = 0;
            if (t == in.size()) return true;
            ++in[t];
        }
    };
    std::vector<std::string> labels;
    for (int t = 0; t <= inputs; ++t) labels.push_back("x" + std::to_string(t));
    return guess(inputs, bound, f, options, sound).with_labels(labels);
}

}  // namespace zeckit
