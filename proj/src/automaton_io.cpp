#include "zeckit/automaton_io.hpp"

#include <fstream>
#include <sstream>

namespace zeckit {

std::string to_text(const Dfa& a) {
    Dfa m = minimize(a);
    std::ostringstream out;
    out << "tracks " << m.track_count() << '\n';
    out << "states " << m.state_count() << '\n';
    out << "initial " << m.initial() << '\n';
    out << "final";
    for (State q = 0; q < m.state_count(); ++q)
        if (m.is_final(q)) out << ' ' << q;
    out << '\n';
    for (State q = 0; q < m.state_count(); ++q)
        for (Symbol s = 0; s < m.symbol_count(); ++s)
            out << "t " << q << ' ' << symbol_string(s, m.track_count()) << ' ' << m.next(q, s) << '\n';
    return out.str();
}

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    bool next(std::string& line) {
        if (pos_ >= text_.size()) return false;
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        line.assign(text_.substr(pos_, end - pos_));
        pos_ = end + 1;
        ++line_no_;
        return true;
    }
    std::size_t line_no() const { return line_no_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

std::size_t header_value(LineReader& r, const std::string& key) {
    std::string line;
    if (!r.next(line)) throw ParseError("missing '" + key + "' line", r.line_no() + 1, 1);
    std::istringstream in(line);
    std::string word;
    long long value = -1;
    if (!(in >> word) || word != key || !(in >> value) || value < 0)
        throw ParseError("expected '" + key + " <n>'", r.line_no(), 1);
    return static_cast<std::size_t>(value);
}

}  // namespace

Dfa from_text(std::string_view text) {
    LineReader r(text);
    const std::size_t tracks = header_value(r, "tracks");
    if (tracks > static_cast<std::size_t>(kMaxTracks)) throw ParseError("too many tracks", 1, 1);
    const std::size_t states = header_value(r, "states");
    const std::size_t initial = header_value(r, "initial");
    if (states == 0 || initial >= states) throw ParseError("bad state count or initial state", 3, 1);
    std::vector<bool> finals(states, false);
    std::string line;
    if (!r.next(line)) throw ParseError("missing 'final' line", 4, 1);
    {
        std::istringstream in(line);
        std::string word;
        if (!(in >> word) || word != "final") throw ParseError("expected 'final ...'", r.line_no(), 1);
        long long q;
        while (in >> q) {
            if (q < 0 || static_cast<std::size_t>(q) >= states) throw ParseError("final state out of range", r.line_no(), 1);
            finals[static_cast<std::size_t>(q)] = true;
        }
    }
    const std::size_t k = symbol_count(static_cast<int>(tracks));
    std::vector<State> delta(states * k, UINT32_MAX);
    while (r.next(line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string tag, bits;
        long long from = -1, to = -1;
        in >> tag >> from;
        // The symbol field is empty for 0-track automata.
        if (tracks > 0) in >> bits;
        in >> to;
        if (tag != "t" || !in || bits.size() != tracks || from < 0 || to < 0 ||
            static_cast<std::size_t>(from) >= states || static_cast<std::size_t>(to) >= states)
            throw ParseError("malformed transition", r.line_no(), 1);
        Symbol s = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') throw ParseError("bad symbol bit", r.line_no(), 1);
            s = (s << 1) | static_cast<Symbol>(c - '0');
        }
        delta[static_cast<std::size_t>(from) * k + s] = static_cast<State>(to);
    }
    for (State t : delta)
        if (t == UINT32_MAX) throw ParseError("transition function is not total", r.line_no(), 1);
    return Dfa(static_cast<int>(tracks), static_cast<State>(initial), std::move(finals), std::move(delta));
}

std::string to_dot(const Dfa& a, std::string_view name) {
    Dfa m = minimize(a);
    auto dead = m.dead_state();
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  start [shape=point];\n  start -> q" << m.initial() << ";\n";
    for (State q = 0; q < m.state_count(); ++q) {
        if (dead && *dead == q) continue;
        out << "  q" << q << " [label=\"" << q << "\"" << (m.is_final(q) ? ", shape=doublecircle" : "") << "];\n";
    }
    for (State q = 0; q < m.state_count(); ++q) {
        if (dead && *dead == q) continue;
        // Group symbols sharing a target into one edge label.
        std::vector<std::string> labels(m.state_count());
        for (Symbol s = 0; s < m.symbol_count(); ++s) {
            State t = m.next(q, s);
            if (dead && *dead == t) continue;
            auto& l = labels[t];
            if (!l.empty()) l += ",";
            l += m.track_count() == 1 ? symbol_string(s, 1) : "[" + symbol_string(s, m.track_count()) + "]";
        }
        for (State t = 0; t < m.state_count(); ++t)
            if (!labels[t].empty()) out << "  q" << q << " -> q" << t << " [label=\"" << labels[t] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

void save_automaton(const std::filesystem::path& path, const Dfa& a) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << to_text(a);
}

Dfa load_automaton(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str());
}

}  // namespace zeckit
