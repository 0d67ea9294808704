// Complete deterministic automata over k-track binary tuple alphabets.
//
// A symbol is a k-bit tuple (b_1, ..., b_k) stored as the integer whose binary
// expansion, most significant bit first, is b_1 b_2 ... b_k. Symbol 0 is the
// all-zero tuple used for leading-zero padding.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeckit {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using TupleWord = std::vector<Symbol>;

inline constexpr int kMaxTracks = 16;

class CompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::size_t symbol_count(int tracks) { return std::size_t{1} << tracks; }

/// Bit of `track` (0-based, left to right) inside a symbol of a k-track alphabet.
inline unsigned track_bit(Symbol s, int track, int tracks) {
    return (s >> (tracks - 1 - track)) & 1u;
}

Symbol make_symbol(std::span<const std::uint8_t> bits);
std::string symbol_string(Symbol s, int tracks);

class Dfa {
public:
    /// `delta` is row-major: delta[q * 2^tracks + s].
    Dfa(int tracks, State initial, std::vector<bool> finals, std::vector<State> delta,
        std::vector<std::string> labels = {});

    int track_count() const { return tracks_; }
    std::size_t symbol_count() const { return zeckit::symbol_count(tracks_); }
    std::size_t state_count() const { return finals_.size(); }
    State initial() const { return initial_; }
    bool is_final(State q) const { return finals_[q]; }
    State next(State q, Symbol s) const { return delta_[q * symbol_count() + s]; }

    const std::vector<bool>& finals() const { return finals_; }
    const std::vector<State>& transitions() const { return delta_; }
    const std::vector<std::string>& labels() const { return labels_; }
    Dfa with_labels(std::vector<std::string> labels) const;

    State run(std::span<const Symbol> word) const;
    bool accepts(std::span<const Symbol> word) const { return is_final(run(word)); }

    /// A non-final state whose every transition loops back to itself.
    std::optional<State> dead_state() const;
    /// Number of states not counting a dead sink; this is how published
    /// automaton sizes are usually reported.
    std::size_t live_state_count() const;

    bool accepts_nothing() const;

private:
    int tracks_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
    std::vector<std::string> labels_;
};

/// Nondeterministic automaton with spontaneous moves; only an intermediate.
struct Nfa {
    explicit Nfa(int tracks) : tracks(tracks) {}

    State add_state(bool final = false) {
        edges.emplace_back();
        epsilon.emplace_back();
        finals.push_back(final);
        return static_cast<State>(finals.size() - 1);
    }
    void add_edge(State from, Symbol s, State to) { edges[from].push_back({s, to}); }
    void add_epsilon(State from, State to) { epsilon[from].push_back(to); }
    std::size_t state_count() const { return finals.size(); }

    int tracks;
    std::vector<std::vector<std::pair<Symbol, State>>> edges;
    std::vector<std::vector<State>> epsilon;
    std::vector<State> initial;
    std::vector<bool> finals;
};

enum class BoolOp { And, Or, Xor, Minus, Implies, Iff };

/// Minimal complete DFA with states numbered in breadth-first order from the
/// initial state (symbols visited in ascending order). Language-equal inputs
/// give identical results.
Dfa minimize(const Dfa& a);
Dfa determinize(const Nfa& a);
Nfa to_nfa(const Dfa& a);

Dfa boolean_combine(BoolOp op, const Dfa& a, const Dfa& b);
Dfa complement(const Dfa& a);

/// Removes `track` existentially. The kept tracks may absorb extra leading
/// zero tuples, so a witness longer than the remaining tracks is still found.
Dfa project(const Dfa& a, int track);

/// Closes the language under adding and removing leading all-zero tuples.
Dfa normalize_leading_zeros(const Dfa& a);

Dfa concat_languages(const Dfa& a, const Dfa& b);

bool equivalent(const Dfa& a, const Dfa& b);

/// Accepted words of length <= max_length, ordered by length then lexicographically.
std::vector<TupleWord> enumerate_accepted(const Dfa& a, std::size_t max_length);

/// Keeps only words in which every track has no two adjacent ones.
Dfa restrict_valid(const Dfa& a);

/// Adds tracks so the automaton reads `labels` (a sorted superset of its own
/// labels); the new tracks are unconstrained.
Dfa cylindrify(const Dfa& a, const std::vector<std::string>& labels);

/// Renames track i to names[i] and reorders tracks so labels ascend.
/// Names must be distinct.
Dfa rename_tracks(const Dfa& a, const std::vector<std::string>& names);

/// Reorders tracks: track i of the result is track perm[i] of `a`.
Dfa permute_tracks(const Dfa& a, const std::vector<int>& perm);

/// Automaton over the given tracks accepting every word.
Dfa universal(int tracks);
/// Automaton over the given tracks accepting nothing.
Dfa empty_language(int tracks);

}  // namespace zeckit
