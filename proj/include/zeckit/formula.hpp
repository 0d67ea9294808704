// Abstract syntax of the first-order query language.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "zeckit/zeckendorf.hpp"

namespace zeckit {

struct Term {
    enum class Kind { Var, Const, Add, Sub, Mul, Div };

    Kind kind = Kind::Const;
    std::string name;     // Var
    Natural value = 0;    // Const value, Mul factor, Div divisor
    std::vector<Term> args;

    static Term var(std::string n);
    static Term constant(Natural v);
    static Term add(Term a, Term b);
    static Term sub(Term a, Term b);
    static Term mul(Term a, Natural factor);
    static Term div(Term a, Natural divisor);
};

enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };

struct Formula {
    enum class Kind { Atom, Call, Not, And, Or, Implies, Iff, Exists, Forall };

    Kind kind = Kind::Atom;
    Cmp cmp = Cmp::Eq;               // Atom
    std::vector<Term> terms;         // Atom: {lhs, rhs}; Call: arguments
    std::string name;                // Call: automaton name
    std::vector<std::string> vars;   // quantifier variables
    std::vector<Formula> children;

    static Formula atom(Cmp c, Term lhs, Term rhs);
    static Formula call(std::string name, std::vector<Term> args);
    static Formula negate(Formula f);
    static Formula binary(Kind k, Formula a, Formula b);
    static Formula quantified(Kind k, std::vector<std::string> vars, Formula body);
};

std::set<std::string> free_variables(const Formula& f);
void collect_variables(const Term& t, std::set<std::string>& out);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

}  // namespace zeckit
