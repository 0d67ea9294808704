#include "zeckit/regex.hpp"

#include <cctype>
#include <string>

namespace zeckit {

namespace {

// Thompson construction straight from a recursive-descent parse.
class RegexCompiler {
public:
    RegexCompiler(std::string_view text, int tracks) : text_(text), tracks_(tracks), nfa_(tracks) {}

    Nfa compile() {
        auto [start, accept] = alternation();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        nfa_.initial = {start};
        nfa_.finals[accept] = true;
        return std::move(nfa_);
    }

private:
    using Fragment = std::pair<State, State>;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Fragment alternation() {
        Fragment left = concatenation();
        if (!peek('|')) return left;
        State s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_epsilon(s, left.first);
        nfa_.add_epsilon(left.second, e);
        while (peek('|')) {
            ++pos_;
            Fragment right = concatenation();
            nfa_.add_epsilon(s, right.first);
            nfa_.add_epsilon(right.second, e);
        }
        return {s, e};
    }

    Fragment concatenation() {
        State s = nfa_.add_state();
        State cur = s;
        while (true) {
            skip_space();
            if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') break;
            Fragment f = repetition();
            nfa_.add_epsilon(cur, f.first);
            cur = f.second;
        }
        return {s, cur};
    }

    Fragment repetition() {
        Fragment f = atom();
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c != '*' && c != '+' && c != '?') break;
            ++pos_;
            State s = nfa_.add_state(), e = nfa_.add_state();
            nfa_.add_epsilon(s, f.first);
            nfa_.add_epsilon(f.second, e);
            if (c != '+') nfa_.add_epsilon(s, e);
            if (c != '?') nfa_.add_epsilon(f.second, f.first);
            f = {s, e};
        }
        return f;
    }

    Fragment atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of pattern");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Fragment f = alternation();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return f;
        }
        Symbol sym = 0;
        if (c == '[') {
            ++pos_;
            for (int t = 0; t < tracks_; ++t) {
                if (t > 0) {
                    if (!peek(',')) fail("expected ',' in tuple literal");
                    ++pos_;
                }
                sym = (sym << 1) | bit();
            }
            if (!peek(']')) fail("expected ']' closing a " + std::to_string(tracks_) + "-tuple");
            ++pos_;
        } else if (c == '0' || c == '1') {
            if (tracks_ != 1) fail("bare digit needs a 1-track pattern; use [b1,...,bk]");
            sym = bit();
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        State s = nfa_.add_state(), e = nfa_.add_state();
        nfa_.add_edge(s, sym, e);
        return {s, e};
    }

    Symbol bit() {
        skip_space();
        if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("expected 0 or 1");
        return static_cast<Symbol>(text_[pos_++] - '0');
    }

    std::string_view text_;
    int tracks_;
    std::size_t pos_ = 0;
    Nfa nfa_;
};

}  // namespace

Dfa regex_to_dfa(std::string_view pattern, int tracks) {
    if (tracks < 1 || tracks > kMaxTracks) throw CompositionError("regex track count out of range");
    return determinize(RegexCompiler(pattern, tracks).compile());
}

}  // namespace zeckit
