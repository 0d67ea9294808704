#include "zeckit/automaton.hpp"

#include <algorithm>

namespace zeckit {

Symbol make_symbol(std::span<const std::uint8_t> bits) {
    Symbol s = 0;
    for (auto b : bits) s = (s << 1) | (b & 1u);
    return s;
}

std::string symbol_string(Symbol s, int tracks) {
    std::string out;
    out.reserve(static_cast<std::size_t>(tracks));
    for (int t = 0; t < tracks; ++t) out.push_back(static_cast<char>('0' + track_bit(s, t, tracks)));
    return out;
}

Dfa::Dfa(int tracks, State initial, std::vector<bool> finals, std::vector<State> delta,
         std::vector<std::string> labels)
    : tracks_(tracks),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)),
      labels_(std::move(labels)) {
    if (tracks_ < 0 || tracks_ > kMaxTracks) throw CompositionError("unsupported track count");
    if (finals_.empty()) throw CompositionError("automaton needs at least one state");
    if (delta_.size() != finals_.size() * symbol_count())
        throw CompositionError("transition table is not total");
    if (initial_ >= finals_.size()) throw CompositionError("initial state out of range");
    for (State t : delta_) {
        if (t >= finals_.size()) throw CompositionError("transition target out of range");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(tracks_))
        throw CompositionError("label count does not match track count");
}

Dfa Dfa::with_labels(std::vector<std::string> labels) const {
    return Dfa(tracks_, initial_, finals_, delta_, std::move(labels));
}

State Dfa::run(std::span<const Symbol> word) const {
    State q = initial_;
    const std::size_t n = symbol_count();
    for (Symbol s : word) q = delta_[q * n + s];
    return q;
}

std::optional<State> Dfa::dead_state() const {
    const std::size_t n = symbol_count();
    for (State q = 0; q < state_count(); ++q) {
        if (finals_[q]) continue;
        bool sink = true;
        for (std::size_t s = 0; s < n && sink; ++s) sink = delta_[q * n + s] == q;
        if (sink) return q;
    }
    return std::nullopt;
}

std::size_t Dfa::live_state_count() const {
    return state_count() - (dead_state() ? 1 : 0);
}

bool Dfa::accepts_nothing() const {
    std::vector<bool> seen(state_count(), false);
    std::vector<State> stack{initial_};
    seen[initial_] = true;
    const std::size_t n = symbol_count();
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        if (finals_[q]) return false;
        for (std::size_t s = 0; s < n; ++s) {
            State t = delta_[q * n + s];
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return true;
}

Dfa universal(int tracks) {
    return Dfa(tracks, 0, {true}, std::vector<State>(symbol_count(tracks), 0));
}

Dfa empty_language(int tracks) {
    return Dfa(tracks, 0, {false}, std::vector<State>(symbol_count(tracks), 0));
}

}  // namespace zeckit
