#include "zeckit/formula.hpp"

namespace zeckit {

Term Term::var(std::string n) {
    Term t;
    t.kind = Kind::Var;
    t.name = std::move(n);
    return t;
}

Term Term::constant(Natural v) {
    Term t;
    t.kind = Kind::Const;
    t.value = std::move(v);
    return t;
}

Term Term::add(Term a, Term b) {
    Term t;
    t.kind = Kind::Add;
    t.args = {std::move(a), std::move(b)};
    return t;
}

Term Term::sub(Term a, Term b) {
    Term t;
    t.kind = Kind::Sub;
    t.args = {std::move(a), std::move(b)};
    return t;
}

Term Term::mul(Term a, Natural factor) {
    Term t;
    t.kind = Kind::Mul;
    t.value = std::move(factor);
    t.args = {std::move(a)};
    return t;
}

Term Term::div(Term a, Natural divisor) {
    Term t;
    t.kind = Kind::Div;
    t.value = std::move(divisor);
    t.args = {std::move(a)};
    return t;
}

Formula Formula::atom(Cmp c, Term lhs, Term rhs) {
    Formula f;
    f.kind = Kind::Atom;
    f.cmp = c;
    f.terms = {std::move(lhs), std::move(rhs)};
    return f;
}

Formula Formula::call(std::string name, std::vector<Term> args) {
    Formula f;
    f.kind = Kind::Call;
    f.name = std::move(name);
    f.terms = std::move(args);
    return f;
}

Formula Formula::negate(Formula g) {
    Formula f;
    f.kind = Kind::Not;
    f.children.push_back(std::move(g));
    return f;
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
    Formula f;
    f.kind = k;
    f.children.push_back(std::move(a));
    f.children.push_back(std::move(b));
    return f;
}

Formula Formula::quantified(Kind k, std::vector<std::string> vars, Formula body) {
    Formula f;
    f.kind = k;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    return f;
}

void collect_variables(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Var) out.insert(t.name);
    for (const auto& a : t.args) collect_variables(a, out);
}

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    switch (f.kind) {
        case Formula::Kind::Atom:
        case Formula::Kind::Call:
            for (const auto& t : f.terms) collect_variables(t, out);
            break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
            out = free_variables(f.children[0]);
            for (const auto& v : f.vars) out.erase(v);
            break;
        default:
            for (const auto& c : f.children) {
                auto sub = free_variables(c);
                out.insert(sub.begin(), sub.end());
            }
    }
    return out;
}

std::string to_string(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.name;
        case Term::Kind::Const: return t.value.str();
        case Term::Kind::Add: return "(" + to_string(t.args[0]) + "+" + to_string(t.args[1]) + ")";
        case Term::Kind::Sub: return "(" + to_string(t.args[0]) + "-" + to_string(t.args[1]) + ")";
        case Term::Kind::Mul: return t.value.str() + "*" + to_string(t.args[0]);
        case Term::Kind::Div: return "(" + to_string(t.args[0]) + "/" + t.value.str() + ")";
    }
    return {};
}

namespace {

const char* cmp_text(Cmp c) {
    switch (c) {
        case Cmp::Eq: return "=";
        case Cmp::Ne: return "!=";
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Gt: return ">";
        case Cmp::Ge: return ">=";
    }
    return "?";
}

std::string join_vars(const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    return s;
}

}  // namespace

std::string to_string(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Atom: return to_string(f.terms[0]) + cmp_text(f.cmp) + to_string(f.terms[1]);
        case Formula::Kind::Call: {
            std::string s = "$" + f.name + "(";
            for (std::size_t i = 0; i < f.terms.size(); ++i) s += (i ? "," : "") + to_string(f.terms[i]);
            return s + ")";
        }
        case Formula::Kind::Not: return "~(" + to_string(f.children[0]) + ")";
        case Formula::Kind::And: return "(" + to_string(f.children[0]) + " & " + to_string(f.children[1]) + ")";
        case Formula::Kind::Or: return "(" + to_string(f.children[0]) + " | " + to_string(f.children[1]) + ")";
        case Formula::Kind::Implies: return "(" + to_string(f.children[0]) + " => " + to_string(f.children[1]) + ")";
        case Formula::Kind::Iff: return "(" + to_string(f.children[0]) + " <=> " + to_string(f.children[1]) + ")";
        case Formula::Kind::Exists: return "(E" + join_vars(f.vars) + " " + to_string(f.children[0]) + ")";
        case Formula::Kind::Forall: return "(A" + join_vars(f.vars) + " " + to_string(f.children[0]) + ")";
    }
    return {};
}

}  // namespace zeckit
