#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "zeckit/automaton.hpp"

namespace zeckit {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size() * 0x9e3779b97f4a7c15ull;
        for (State s : v) h = (h ^ s) * 0x100000001b3ull + (h >> 29);
        return h;
    }
};

// Renumbers the states reachable from `initial` in breadth-first order.
Dfa canonical_bfs(int tracks, State initial, const std::vector<bool>& finals,
                  const std::vector<State>& delta, std::vector<std::string> labels) {
    const std::size_t k = symbol_count(tracks);
    const std::size_t n = finals.size();
    std::vector<State> id(n, UINT32_MAX);
    std::vector<State> order;
    order.reserve(n);
    id[initial] = 0;
    order.push_back(initial);
    for (std::size_t head = 0; head < order.size(); ++head) {
        State q = order[head];
        for (std::size_t s = 0; s < k; ++s) {
            State t = delta[q * k + s];
            if (id[t] == UINT32_MAX) {
                id[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    }
    std::vector<bool> new_finals(order.size());
    std::vector<State> new_delta(order.size() * k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        State q = order[i];
        new_finals[i] = finals[q];
        for (std::size_t s = 0; s < k; ++s) new_delta[i * k + s] = id[delta[q * k + s]];
    }
    return Dfa(tracks, 0, std::move(new_finals), std::move(new_delta), std::move(labels));
}

// Hopcroft partition refinement on a DFA whose states are all reachable.
// Returns the block index of every state.
std::vector<State> hopcroft_blocks(const Dfa& a) {
    const std::size_t n = a.state_count();
    const std::size_t k = a.symbol_count();
    const auto& delta = a.transitions();

    // Predecessors grouped by (symbol, target).
    std::vector<std::uint32_t> offset(k * n + 1, 0);
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < k; ++s) ++offset[s * n + delta[q * k + s] + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<State> preds(n * k);
    {
        std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < k; ++s) preds[fill[s * n + delta[q * k + s]]++] = static_cast<State>(q);
    }

    std::vector<State> elems(n), loc(n), block(n);
    std::vector<std::uint32_t> first, end, mid;
    {
        std::size_t pos = 0;
        for (int want = 1; want >= 0; --want) {
            std::size_t start = pos;
            for (std::size_t q = 0; q < n; ++q) {
                if (a.is_final(static_cast<State>(q)) == static_cast<bool>(want)) {
                    elems[pos] = static_cast<State>(q);
                    loc[q] = static_cast<State>(pos);
                    block[q] = static_cast<State>(first.size());
                    ++pos;
                }
            }
            if (pos > start) {
                first.push_back(static_cast<std::uint32_t>(start));
                end.push_back(static_cast<std::uint32_t>(pos));
                mid.push_back(static_cast<std::uint32_t>(start));
            }
        }
    }
    if (first.size() < 2) return block;

    std::vector<std::pair<State, Symbol>> work;
    std::vector<char> in_work(first.size() * k, 0);
    auto push = [&](State b, Symbol s) {
        if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k * 2, 0);
        in_work[b * k + s] = 1;
        work.push_back({b, s});
    };
    {
        State smaller = (end[0] - first[0] <= end[1] - first[1]) ? 0 : 1;
        for (std::size_t s = 0; s < k; ++s) push(smaller, static_cast<Symbol>(s));
    }

    std::vector<State> splitter;
    std::vector<State> touched;
    while (!work.empty()) {
        auto [b, s] = work.back();
        work.pop_back();
        in_work[b * k + s] = 0;
        splitter.assign(elems.begin() + first[b], elems.begin() + end[b]);
        touched.clear();
        for (State q : splitter) {
            for (std::uint32_t i = offset[s * n + q]; i < offset[s * n + q + 1]; ++i) {
                State p = preds[i];
                State pb = block[p];
                if (loc[p] < mid[pb]) continue;  // already marked
                State other = elems[mid[pb]];
                std::swap(elems[loc[p]], elems[mid[pb]]);
                loc[other] = loc[p];
                loc[p] = mid[pb];
                ++mid[pb];
                if (mid[pb] == first[pb] + 1) touched.push_back(pb);
            }
        }
        for (State x : touched) {
            if (mid[x] == end[x]) {
                mid[x] = first[x];
                continue;
            }
            State nb = static_cast<State>(first.size());
            first.push_back(first[x]);
            end.push_back(mid[x]);
            mid.push_back(first[x]);
            first[x] = mid[x];
            for (std::uint32_t i = first[nb]; i < end[nb]; ++i) block[elems[i]] = nb;
            if (in_work.size() < (nb + 1) * k) in_work.resize((nb + 1) * k * 2, 0);
            const bool new_smaller = end[nb] - first[nb] <= end[x] - first[x];
            for (std::size_t c = 0; c < k; ++c) {
                if (in_work[x * k + c]) {
                    push(nb, static_cast<Symbol>(c));
                } else {
                    push(new_smaller ? nb : x, static_cast<Symbol>(c));
                }
            }
        }
    }
    return block;
}

// Generic subset construction. `succ(set, symbol, out)` fills `out` with the
// sorted, duplicate-free successor set.
template <class Final, class Succ>
Dfa subset_construction(int tracks, std::vector<State> start, Final is_final, Succ succ,
                        std::vector<std::string> labels) {
    const std::size_t k = symbol_count(tracks);
    std::unordered_map<std::vector<State>, State, VectorHash> ids;
    std::vector<std::vector<State>> sets;
    std::vector<State> delta;
    std::vector<bool> finals;
    auto intern = [&](std::vector<State>&& set) -> State {
        auto it = ids.find(set);
        if (it != ids.end()) return it->second;
        State id = static_cast<State>(sets.size());
        finals.push_back(is_final(set));
        ids.emplace(set, id);
        sets.push_back(std::move(set));
        return id;
    };
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    intern(std::move(start));
    std::vector<State> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        delta.resize((i + 1) * k);
        for (std::size_t s = 0; s < k; ++s) {
            out.clear();
            succ(sets[i], static_cast<Symbol>(s), out);
            State t = intern(std::vector<State>(out));
            delta[i * k + s] = t;
        }
    }
    return minimize(Dfa(tracks, 0, std::move(finals), std::move(delta), std::move(labels)));
}

void sort_unique(std::vector<State>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// States reachable from `from` by reading only the all-zero symbol.
std::vector<State> zero_reach(const Dfa& a, State from) {
    std::vector<State> out{from};
    State q = from;
    std::vector<bool> seen(a.state_count(), false);
    seen[q] = true;
    while (true) {
        q = a.next(q, 0);
        if (seen[q]) break;
        seen[q] = true;
        out.push_back(q);
    }
    return out;
}

void check_same_arity(const Dfa& a, const Dfa& b) {
    if (a.track_count() != b.track_count())
        throw CompositionError("track count mismatch: " + std::to_string(a.track_count()) + " vs " +
                               std::to_string(b.track_count()));
    if (!a.labels().empty() && !b.labels().empty() && a.labels() != b.labels())
        throw CompositionError("track labels differ");
}

}  // namespace

Dfa minimize(const Dfa& a) {
    Dfa reach = canonical_bfs(a.track_count(), a.initial(), a.finals(), a.transitions(), a.labels());
    std::vector<State> block = hopcroft_blocks(reach);
    const std::size_t k = reach.symbol_count();
    State blocks = 0;
    for (State b : block) blocks = std::max(blocks, b + 1);
    std::vector<bool> finals(blocks);
    std::vector<State> delta(blocks * k);
    for (State q = 0; q < reach.state_count(); ++q) {
        finals[block[q]] = reach.is_final(q);
        for (std::size_t s = 0; s < k; ++s) delta[block[q] * k + s] = block[reach.next(q, static_cast<Symbol>(s))];
    }
    return canonical_bfs(reach.track_count(), block[reach.initial()], finals, delta, reach.labels());
}

Nfa to_nfa(const Dfa& a) {
    Nfa out(a.track_count());
    for (State q = 0; q < a.state_count(); ++q) out.add_state(a.is_final(q));
    for (State q = 0; q < a.state_count(); ++q)
        for (Symbol s = 0; s < a.symbol_count(); ++s) out.add_edge(q, s, a.next(q, s));
    out.initial = {a.initial()};
    return out;
}

Dfa determinize(const Nfa& a) {
    auto closure = [&](std::vector<State>& set) {
        std::vector<State> stack(set.begin(), set.end());
        std::vector<bool> in(a.state_count(), false);
        for (State q : set) in[q] = true;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (State t : a.epsilon[q]) {
                if (!in[t]) {
                    in[t] = true;
                    set.push_back(t);
                    stack.push_back(t);
                }
            }
        }
        sort_unique(set);
    };
    std::vector<State> start = a.initial;
    closure(start);
    return subset_construction(
        a.tracks, start,
        [&](const std::vector<State>& set) {
            return std::any_of(set.begin(), set.end(), [&](State q) { return a.finals[q]; });
        },
        [&](const std::vector<State>& set, Symbol s, std::vector<State>& out) {
            for (State q : set)
                for (auto [sym, t] : a.edges[q])
                    if (sym == s) out.push_back(t);
            closure(out);
        },
        {});
}

Dfa boolean_combine(BoolOp op, const Dfa& a, const Dfa& b) {
    check_same_arity(a, b);
    const std::size_t k = a.symbol_count();
    auto combine = [op](bool x, bool y) {
        switch (op) {
            case BoolOp::And: return x && y;
            case BoolOp::Or: return x || y;
            case BoolOp::Xor: return x != y;
            case BoolOp::Minus: return x && !y;
            case BoolOp::Implies: return !x || y;
            case BoolOp::Iff: return x == y;
        }
        return false;
    };
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, State>> pairs;
    std::vector<bool> finals;
    std::vector<State> delta;
    auto intern = [&](State p, State q) {
        std::uint64_t key = (std::uint64_t{p} << 32) | q;
        auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) {
            pairs.push_back({p, q});
            finals.push_back(combine(a.is_final(p), b.is_final(q)));
        }
        return it->second;
    };
    intern(a.initial(), b.initial());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        delta.resize((i + 1) * k);
        auto [p, q] = pairs[i];
        for (std::size_t s = 0; s < k; ++s)
            delta[i * k + s] = intern(a.next(p, static_cast<Symbol>(s)), b.next(q, static_cast<Symbol>(s)));
    }
    auto labels = a.labels().empty() ? b.labels() : a.labels();
    return minimize(Dfa(a.track_count(), 0, std::move(finals), std::move(delta), std::move(labels)));
}

Dfa complement(const Dfa& a) {
    std::vector<bool> finals = a.finals();
    finals.flip();
    return Dfa(a.track_count(), a.initial(), std::move(finals), a.transitions(), a.labels());
}

Dfa project(const Dfa& a, int track) {
    const int k = a.track_count();
    if (track < 0 || track >= k) throw CompositionError("projected track out of range");
    const int kept = k - 1;
    // Inserting a bit for the removed track at position `track`.
    const unsigned low_bits = static_cast<unsigned>(k - 1 - track);
    auto widen = [&](Symbol s, unsigned bit) -> Symbol {
        Symbol low = s & ((1u << low_bits) - 1u);
        Symbol high = s >> low_bits;
        return (((high << 1) | bit) << low_bits) | low;
    };
    // Start from every state reachable by reading all-zero kept tracks, so the
    // removed track may be longer than the others.
    std::vector<State> start;
    {
        std::vector<bool> seen(a.state_count(), false);
        std::vector<State> stack{a.initial()};
        seen[a.initial()] = true;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            start.push_back(q);
            for (unsigned bit = 0; bit < 2; ++bit) {
                State t = a.next(q, widen(0, bit));
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
    }
    std::vector<std::string> labels;
    if (!a.labels().empty()) {
        labels = a.labels();
        labels.erase(labels.begin() + track);
    }
    Dfa det = subset_construction(
        kept, std::move(start),
        [&](const std::vector<State>& set) {
            return std::any_of(set.begin(), set.end(), [&](State q) { return a.is_final(q); });
        },
        [&](const std::vector<State>& set, Symbol s, std::vector<State>& out) {
            Symbol s0 = widen(s, 0), s1 = widen(s, 1);
            for (State q : set) {
                out.push_back(a.next(q, s0));
                out.push_back(a.next(q, s1));
            }
            sort_unique(out);
        },
        std::move(labels));
    return normalize_leading_zeros(det);
}

Dfa normalize_leading_zeros(const Dfa& a) {
    Dfa m = minimize(a);
    if (m.next(m.initial(), 0) == m.initial()) return m;
    // 0* . { w : 0^n w in L for some n }
    Nfa n = to_nfa(m);
    State pre = n.add_state(false);
    n.add_edge(pre, 0, pre);
    for (State z : zero_reach(m, m.initial())) n.add_epsilon(pre, z);
    n.initial = {pre};
    return determinize(n).with_labels(m.labels());
}

// Labels are positional here; only the arity has to agree.
Dfa concat_languages(const Dfa& a, const Dfa& b) {
    if (a.track_count() != b.track_count())
        throw CompositionError("track count mismatch: " + std::to_string(a.track_count()) + " vs " +
                               std::to_string(b.track_count()));
    Nfa n(a.track_count());
    for (State q = 0; q < a.state_count(); ++q) n.add_state(false);
    const State offset = static_cast<State>(a.state_count());
    for (State q = 0; q < b.state_count(); ++q) n.add_state(b.is_final(q));
    for (State q = 0; q < a.state_count(); ++q) {
        for (Symbol s = 0; s < a.symbol_count(); ++s) n.add_edge(q, s, a.next(q, s));
        if (a.is_final(q)) n.add_epsilon(q, offset + b.initial());
    }
    for (State q = 0; q < b.state_count(); ++q)
        for (Symbol s = 0; s < b.symbol_count(); ++s) n.add_edge(offset + q, s, offset + b.next(q, s));
    n.initial = {a.initial()};
    auto labels = a.labels().empty() ? b.labels() : a.labels();
    return determinize(n).with_labels(std::move(labels));
}

bool equivalent(const Dfa& a, const Dfa& b) {
    if (a.track_count() != b.track_count()) throw CompositionError("track count mismatch in equivalence");
    Dfa ma = minimize(a), mb = minimize(b);
    return ma.finals() == mb.finals() && ma.transitions() == mb.transitions();
}

std::vector<TupleWord> enumerate_accepted(const Dfa& a, std::size_t max_length) {
    const std::size_t n = a.state_count();
    const std::size_t k = a.symbol_count();
    // Shortest distance from each state to a final state.
    std::vector<std::size_t> dist(n, SIZE_MAX);
    {
        std::vector<std::vector<State>> rev(n);
        for (State q = 0; q < n; ++q)
            for (Symbol s = 0; s < k; ++s) rev[a.next(q, s)].push_back(q);
        std::vector<State> queue;
        for (State q = 0; q < n; ++q)
            if (a.is_final(q)) {
                dist[q] = 0;
                queue.push_back(q);
            }
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (State p : rev[queue[h]])
                if (dist[p] == SIZE_MAX) {
                    dist[p] = dist[queue[h]] + 1;
                    queue.push_back(p);
                }
    }
    std::vector<TupleWord> out;
    TupleWord word;
    for (std::size_t len = 0; len <= max_length; ++len) {
        // Depth-first in ascending symbol order gives lexicographic order.
        auto rec = [&](auto&& self, State q) -> void {
            const std::size_t remaining = len - word.size();
            if (dist[q] == SIZE_MAX || dist[q] > remaining) return;
            if (remaining == 0) {
                if (a.is_final(q)) out.push_back(word);
                return;
            }
            for (Symbol s = 0; s < k; ++s) {
                word.push_back(s);
                self(self, a.next(q, s));
                word.pop_back();
            }
        };
        rec(rec, a.initial());
    }
    return out;
}

Dfa restrict_valid(const Dfa& a) {
    const std::size_t k = a.symbol_count();
    // State (q, mask): mask holds the previous symbol; a track repeating a 1 dies.
    std::unordered_map<std::uint64_t, State> ids;
    std::vector<std::pair<State, Symbol>> pairs;
    std::vector<bool> finals;
    std::vector<State> delta;
    const State dead = 0;
    pairs.push_back({0, 0});
    finals.push_back(false);
    auto intern = [&](State q, Symbol mask) {
        std::uint64_t key = (std::uint64_t{q} << 32) | mask;
        auto [it, inserted] = ids.try_emplace(key, static_cast<State>(pairs.size()));
        if (inserted) {
            pairs.push_back({q, mask});
            finals.push_back(a.is_final(q));
        }
        return it->second;
    };
    intern(a.initial(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        delta.resize((i + 1) * k);
        if (i == dead) {
            std::fill(delta.begin(), delta.begin() + static_cast<std::ptrdiff_t>(k), dead);
            continue;
        }
        auto [q, mask] = pairs[i];
        for (Symbol s = 0; s < k; ++s) delta[i * k + s] = (s & mask) ? dead : intern(a.next(q, s), s);
    }
    return minimize(Dfa(a.track_count(), 1, std::move(finals), std::move(delta), a.labels()));
}

Dfa permute_tracks(const Dfa& a, const std::vector<int>& perm) {
    const int k = a.track_count();
    if (static_cast<int>(perm.size()) != k) throw CompositionError("permutation size mismatch");
    const std::size_t m = a.symbol_count();
    std::vector<Symbol> old_of(m);
    for (Symbol s = 0; s < m; ++s) {
        Symbol old = 0;
        for (int i = 0; i < k; ++i)
            if (track_bit(s, i, k)) old |= 1u << (k - 1 - perm[static_cast<std::size_t>(i)]);
        old_of[s] = old;
    }
    std::vector<State> delta(a.state_count() * m);
    for (State q = 0; q < a.state_count(); ++q)
        for (Symbol s = 0; s < m; ++s) delta[q * m + s] = a.next(q, old_of[s]);
    std::vector<std::string> labels;
    if (!a.labels().empty())
        for (int i = 0; i < k; ++i) labels.push_back(a.labels()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    return Dfa(k, a.initial(), a.finals(), std::move(delta), std::move(labels));
}

Dfa rename_tracks(const Dfa& a, const std::vector<std::string>& names) {
    if (names.size() != static_cast<std::size_t>(a.track_count()))
        throw CompositionError("expected " + std::to_string(a.track_count()) + " track names, got " +
                               std::to_string(names.size()));
    std::vector<int> perm(names.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int x, int y) { return names[static_cast<std::size_t>(x)] < names[static_cast<std::size_t>(y)]; });
    for (std::size_t i = 1; i < perm.size(); ++i)
        if (names[static_cast<std::size_t>(perm[i])] == names[static_cast<std::size_t>(perm[i - 1])])
            throw CompositionError("duplicate track name '" + names[static_cast<std::size_t>(perm[i])] + "'");
    Dfa relabeled = a.with_labels(names);
    return permute_tracks(relabeled, perm);
}

Dfa cylindrify(const Dfa& a, const std::vector<std::string>& labels) {
    if (labels == a.labels()) return a;
    const int k = static_cast<int>(labels.size());
    if (k > kMaxTracks) throw CompositionError("too many tracks");
    std::vector<int> position;  // new position of each old track
    for (const auto& name : a.labels()) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) throw CompositionError("cylindrify: label '" + name + "' missing");
        position.push_back(static_cast<int>(it - labels.begin()));
    }
    if (a.labels().size() != static_cast<std::size_t>(a.track_count()))
        throw CompositionError("cylindrify needs a labeled automaton");
    const int old_k = a.track_count();
    const std::size_t m = symbol_count(k);
    std::vector<Symbol> old_of(m);
    for (Symbol s = 0; s < m; ++s) {
        Symbol old = 0;
        for (int i = 0; i < old_k; ++i) old = (old << 1) | track_bit(s, position[static_cast<std::size_t>(i)], k);
        old_of[s] = old;
    }
    std::vector<State> delta(a.state_count() * m);
    for (State q = 0; q < a.state_count(); ++q)
        for (Symbol s = 0; s < m; ++s) delta[q * m + s] = a.next(q, old_of[s]);
    return Dfa(k, a.initial(), a.finals(), std::move(delta), labels);
}

}  // namespace zeckit
