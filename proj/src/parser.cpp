#include "zeckit/parser.hpp"

#include <cctype>

namespace zeckit {

namespace {

enum class Tok { Ident, Number, Call, Op, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src, std::size_t line, std::size_t column) {
    static const char* const kOps[] = {"<=>", "=>", "!=", "<=", ">=", "=", "<", ">", "&", "|",
                                       "~",   "+",  "-",  "*",  "/",  "(", ")", ","};
    std::vector<Token> out;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, col = column;
        auto word_end = [&](std::size_t from) {
            while (from < src.size() && (std::isalnum(static_cast<unsigned char>(src[from])) || src[from] == '_')) ++from;
            return from;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = word_end(i);
            out.push_back({Tok::Ident, std::string(src.substr(i, e - i)), l, col});
            advance(e - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = i;
            while (e < src.size() && std::isdigit(static_cast<unsigned char>(src[e]))) ++e;
            out.push_back({Tok::Number, std::string(src.substr(i, e - i)), l, col});
            advance(e - i);
        } else if (c == '$') {
            std::size_t e = word_end(i + 1);
            if (e == i + 1) throw ParseError("expected automaton name after '$'", l, col);
            out.push_back({Tok::Call, std::string(src.substr(i + 1, e - i - 1)), l, col});
            advance(e - i);
        } else {
            bool matched = false;
            for (const char* op : kOps) {
                std::string_view o(op);
                if (src.substr(i, o.size()) == o) {
                    out.push_back({Tok::Op, std::string(o), l, col});
                    advance(o.size());
                    matched = true;
                    break;
                }
            }
            if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", l, col);
        }
    }
    out.push_back({Tok::End, "", line, column});
    return out;
}

bool is_quantifier(const Token& t) {
    return t.kind == Tok::Ident && (t.text[0] == 'A' || t.text[0] == 'E');
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Formula parse_all() {
        Formula f = iff();
        if (cur().kind != Tok::End) fail("unexpected '" + cur().text + "'");
        return f;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    bool at_op(std::string_view op) const { return cur().kind == Tok::Op && cur().text == op; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur().line, cur().column); }
    void expect(std::string_view op) {
        if (!at_op(op)) fail("expected '" + std::string(op) + "'");
        ++pos_;
    }

    Formula iff() {
        Formula left = implies();
        if (at_op("<=>")) {
            ++pos_;
            return Formula::binary(Formula::Kind::Iff, std::move(left), iff());
        }
        return left;
    }

    Formula implies() {
        Formula left = disjunction();
        if (at_op("=>")) {
            ++pos_;
            return Formula::binary(Formula::Kind::Implies, std::move(left), implies());
        }
        return left;
    }

    Formula disjunction() {
        Formula left = conjunction();
        while (at_op("|")) {
            ++pos_;
            left = Formula::binary(Formula::Kind::Or, std::move(left), conjunction());
        }
        return left;
    }

    Formula conjunction() {
        Formula left = unary();
        while (at_op("&")) {
            ++pos_;
            left = Formula::binary(Formula::Kind::And, std::move(left), unary());
        }
        return left;
    }

    Formula unary() {
        if (at_op("~")) {
            ++pos_;
            return Formula::negate(unary());
        }
        if (is_quantifier(cur())) return quantifier();
        return primary();
    }

    Formula quantifier() {
        const Token& q = cur();
        auto kind = q.text[0] == 'A' ? Formula::Kind::Forall : Formula::Kind::Exists;
        std::vector<std::string> vars;
        std::string first = q.text.substr(1);
        ++pos_;
        if (first.empty()) {
            if (cur().kind != Tok::Ident) fail("expected a quantified variable");
            first = cur().text;
            ++pos_;
        }
        vars.push_back(first);
        while (at_op(",")) {
            ++pos_;
            if (cur().kind != Tok::Ident) fail("expected a quantified variable");
            vars.push_back(cur().text);
            ++pos_;
        }
        return Formula::quantified(kind, std::move(vars), iff());
    }

    static bool is_comparison(const Token& t) {
        if (t.kind != Tok::Op) return false;
        return t.text == "=" || t.text == "!=" || t.text == "<" || t.text == "<=" || t.text == ">" ||
               t.text == ">=";
    }
    static bool is_arith(const Token& t) {
        return t.kind == Tok::Op && (t.text == "+" || t.text == "-" || t.text == "*" || t.text == "/");
    }

    Formula primary() {
        if (cur().kind == Tok::Call) {
            std::string name = cur().text;
            ++pos_;
            expect("(");
            std::vector<Term> args;
            if (!at_op(")")) {
                args.push_back(term());
                while (at_op(",")) {
                    ++pos_;
                    args.push_back(term());
                }
            }
            expect(")");
            return Formula::call(std::move(name), std::move(args));
        }
        if (at_op("(")) {
            // Either a parenthesized formula or the start of a parenthesized term.
            const std::size_t save = pos_;
            try {
                ++pos_;
                Formula f = iff();
                expect(")");
                if (!is_comparison(cur()) && !is_arith(cur())) return f;
            } catch (const ParseError&) {
            }
            pos_ = save;
        }
        return atom();
    }

    Formula atom() {
        Term lhs = term();
        if (!is_comparison(cur())) fail("expected a comparison operator");
        const std::string op = cur().text;
        ++pos_;
        Term rhs = term();
        Cmp c = op == "=" ? Cmp::Eq
                : op == "!=" ? Cmp::Ne
                : op == "<" ? Cmp::Lt
                : op == "<=" ? Cmp::Le
                : op == ">" ? Cmp::Gt
                : Cmp::Ge;
        return Formula::atom(c, std::move(lhs), std::move(rhs));
    }

    Term term() {
        Term left = product();
        while (at_op("+") || at_op("-")) {
            bool plus = cur().text == "+";
            ++pos_;
            Term right = product();
            left = plus ? Term::add(std::move(left), std::move(right)) : Term::sub(std::move(left), std::move(right));
        }
        return left;
    }

    Term product() {
        Term left = factor();
        while (at_op("*") || at_op("/")) {
            const bool times = cur().text == "*";
            const Token op = cur();
            ++pos_;
            Term right = factor();
            if (times) {
                if (right.kind == Term::Kind::Const) {
                    left = Term::mul(std::move(left), right.value);
                } else if (left.kind == Term::Kind::Const) {
                    left = Term::mul(std::move(right), left.value);
                } else {
                    throw ParseError("multiplication needs a constant operand", op.line, op.column);
                }
            } else {
                if (right.kind != Term::Kind::Const)
                    throw ParseError("division needs a constant divisor", op.line, op.column);
                if (right.value == 0) throw ParseError("division by zero", op.line, op.column);
                left = Term::div(std::move(left), right.value);
            }
        }
        return left;
    }

    Term factor() {
        const Token& t = cur();
        if (t.kind == Tok::Number) {
            ++pos_;
            return Term::constant(Natural(t.text));
        }
        if (t.kind == Tok::Ident) {
            if (is_quantifier(t) && t.text.size() == 1) fail("unexpected quantifier in a term");
            ++pos_;
            return Term::var(t.text);
        }
        if (at_op("(")) {
            ++pos_;
            Term inner = term();
            expect(")");
            return inner;
        }
        fail(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view source, std::size_t first_line, std::size_t first_column) {
    std::size_t line = first_line, column = first_column;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < source.size() && std::isspace(static_cast<unsigned char>(source[i]))) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    skip_ws();
    if (i < source.size() && source[i] == '?') {
        std::size_t e = i + 1;
        while (e < source.size() && (std::isalnum(static_cast<unsigned char>(source[e])) || source[e] == '_')) ++e;
        std::string_view tag = source.substr(i + 1, e - i - 1);
        if (tag != "msd_fib")
            throw UnsupportedNumerationError("unsupported numeration system '" + std::string(tag) + "'", line, column);
        column += e - i;
        i = e;
    }
    return Parser(tokenize(source.substr(i), line, column)).parse_all();
}

}  // namespace zeckit
