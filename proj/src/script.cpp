#include "zeckit/script.hpp"

#include <algorithm>
#include <cctype>

#include "zeckit/automaton_io.hpp"
#include "zeckit/parser.hpp"
#include "zeckit/regex.hpp"

namespace zeckit {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool done() {
        skip_blank();
        return pos_ >= text_.size();
    }

    std::string word(const char* what) {
        skip_blank();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            advance();
        if (start == pos_) fail(std::string("expected ") + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    bool peek(char c) {
        skip_blank();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        advance();
    }

    /// Contents of a double-quoted string; records where the contents start.
    std::string quoted(std::size_t& line, std::size_t& column) {
        expect('"');
        line = line_;
        column = column_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') advance();
        if (pos_ >= text_.size()) throw ParseError("unterminated string", line, column - 1);
        std::string body(text_.substr(start, pos_ - start));
        advance();
        return body;
    }

    std::size_t line() {
        skip_blank();
        return line_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const char* kind_name(Command::Kind k) {
    switch (k) {
        case Command::Kind::Def: return "def";
        case Command::Kind::Eval: return "eval";
        case Command::Kind::Reg: return "reg";
        case Command::Kind::Concat: return "concat";
        case Command::Kind::Alphabet: return "alphabet";
    }
    return "?";
}

// Strips the "line:col: " prefix a ParseError puts on its message.
std::string bare_message(const ParseError& e) {
    std::string what = e.what();
    auto first = what.find(':');
    auto second = first == std::string::npos ? first : what.find(':', first + 1);
    return second == std::string::npos ? what : what.substr(second + 2);
}

std::vector<std::string> positional_labels(int tracks) {
    std::vector<std::string> labels;
    for (int t = 0; t < tracks; ++t) labels.push_back("x" + std::to_string(t));
    return labels;
}

}  // namespace

std::vector<Command> parse_script(std::string_view text) {
    Scanner in(text);
    std::vector<Command> out;
    while (!in.done()) {
        Command c;
        c.line = in.line();
        const std::string verb = in.word("a command");
        if (verb == "def" || verb == "eval") {
            c.kind = verb == "def" ? Command::Kind::Def : Command::Kind::Eval;
            c.name = in.word("a name");
            c.body = in.quoted(c.body_line, c.body_column);
        } else if (verb == "reg") {
            c.kind = Command::Kind::Reg;
            c.name = in.word("a name");
            while (!in.peek('"')) {
                std::string base = in.word("a numeration system");
                if (base != "msd_fib") in.fail("unsupported numeration system '" + base + "'");
                ++c.tracks;
            }
            if (c.tracks == 0) in.fail("expected a numeration system");
            c.body = in.quoted(c.body_line, c.body_column);
        } else if (verb == "concat") {
            c.kind = Command::Kind::Concat;
            c.name = in.word("a name");
            c.args.push_back(in.word("an automaton name"));
            c.args.push_back(in.word("an automaton name"));
        } else if (verb == "alphabet") {
            c.kind = Command::Kind::Alphabet;
            c.name = in.word("a name");
            while (!in.peek('$')) {
                std::string base = in.word("a numeration system");
                if (base != "msd_fib") in.fail("unsupported numeration system '" + base + "'");
            }
            in.expect('$');
            c.args.push_back(in.word("an automaton name"));
        } else {
            throw ParseError("unknown command '" + verb + "'", c.line, 1);
        }
        in.expect(':');
        out.push_back(std::move(c));
    }
    return out;
}

Dfa renumerate(const Dfa& a) { return minimize(normalize_leading_zeros(restrict_valid(a))); }

void load_store(const std::filesystem::path& store, Registry& reg) {
    if (store.empty() || !std::filesystem::exists(store)) return;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(store))
        if (entry.path().extension() == ".aut") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        Dfa a = load_automaton(path);
        reg.add(path.stem().string(), a.with_labels(positional_labels(a.track_count())));
    }
}

std::vector<CommandResult> run_commands(const std::vector<Command>& commands, Registry& reg,
                                        const std::filesystem::path& store,
                                        const std::function<void(const CommandResult&)>& on_result) {
    std::vector<CommandResult> results;
    if (!store.empty()) std::filesystem::create_directories(store);
    for (const Command& c : commands) {
        CommandResult r{c.kind, c.name, std::nullopt};
        std::optional<Dfa> produced;
        try {
            switch (c.kind) {
                case Command::Kind::Def:
                    produced = compile(parse(c.body, c.body_line, c.body_column), reg);
                    break;
                case Command::Kind::Eval:
                    r.value = eval_sentence(parse(c.body, c.body_line, c.body_column), reg);
                    break;
                case Command::Kind::Reg:
                    try {
                        produced = minimize(restrict_valid(regex_to_dfa(c.body, c.tracks)))
                                       .with_labels(positional_labels(c.tracks));
                    } catch (const ParseError& e) {
                        throw ParseError(bare_message(e), c.body_line, c.body_column + e.column() - 1);
                    }
                    break;
                case Command::Kind::Concat:
                    produced = minimize(concat_languages(reg.at(c.args[0]), reg.at(c.args[1])));
                    break;
                case Command::Kind::Alphabet: produced = renumerate(reg.at(c.args[0])); break;
            }
            if (produced) reg.add(c.name, *produced);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(c.line) + ": " + kind_name(c.kind) + " " + c.name +
                                     ": " + e.what());
        }
        if (produced && !store.empty()) save_automaton(store / (c.name + ".aut"), reg.at(c.name));
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

std::string to_string(const CommandResult& r) {
    if (r.value) return r.name + ": " + (*r.value ? "TRUE" : "FALSE");
    return std::string(kind_name(r.kind)) + " " + r.name;
}

}  // namespace zeckit
