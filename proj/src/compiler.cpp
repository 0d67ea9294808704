#include "zeckit/compiler.hpp"

#include <algorithm>
#include <map>

namespace zeckit {

void Registry::add(const std::string& name, Dfa a) {
    auto it = entries_.find(name);
    if (it != entries_.end()) {
        if (it->second.automaton->track_count() == a.track_count() && equivalent(*it->second.automaton, a)) return;
        if (it->second.reserved) throw RegistryError("'" + name + "' is a reserved base relation");
        throw RegistryError("'" + name + "' is already defined");
    }
    entries_.emplace(name, Entry{std::make_shared<const Dfa>(std::move(a)), false});
}

void Registry::add_reserved(const std::string& name, Dfa a) {
    add(name, std::move(a));
    entries_.at(name).reserved = true;
}

const Dfa* Registry::find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : it->second.automaton.get();
}

const Dfa& Registry::at(const std::string& name) const {
    const Dfa* a = find(name);
    if (!a) throw RegistryError("unknown automaton '" + name + "'");
    return *a;
}

bool Registry::is_reserved(const std::string& name) const {
    auto it = entries_.find(name);
    return it != entries_.end() && it->second.reserved;
}

std::vector<std::string> Registry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, entry] : entries_) out.push_back(name);
    return out;
}

Dfa constant_automaton(const Natural& value) {
    const ZeckWord w = encode(value);
    // States 0..n-1 read the word after any leading zeros; n accepts; n+1 is dead.
    const std::size_t n = w.size();
    const State accept = static_cast<State>(n), dead = static_cast<State>(n + 1);
    std::vector<bool> finals(n + 2, false);
    finals[accept] = true;
    std::vector<State> delta((n + 2) * 2, dead);
    for (std::size_t i = 0; i < n; ++i) delta[i * 2 + w.digits()[i]] = static_cast<State>(i + 1);
    delta[0 * 2 + 0] = 0;  // leading zeros (w starts with 1 unless empty)
    if (n == 0) delta[0] = 0;
    delta[accept * 2 + 0] = n == 0 ? accept : dead;
    return minimize(Dfa(1, 0, std::move(finals), std::move(delta)));
}

Dfa equality_automaton() {
    // Diagonal symbols only; validity tracked through the previous digit.
    // 0: last digit 0, 1: last digit 1, 2: dead.
    std::vector<State> delta(3 * 4, 2);
    delta[0 * 4 + 0b00] = 0;
    delta[0 * 4 + 0b11] = 1;
    delta[1 * 4 + 0b00] = 0;
    return Dfa(2, 0, {true, true, false}, std::move(delta));
}

namespace {

std::vector<std::string> label_union(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool has_label(const Dfa& a, const std::string& v) {
    return std::find(a.labels().begin(), a.labels().end(), v) != a.labels().end();
}

// A linear combination sum(coef * atom) + constant whose atoms are variables
// or floor divisions. Coefficients may be negative before sides are split.
struct Linear {
    std::vector<std::pair<Natural, Term>> positive;  // (coefficient, atom)
    std::vector<std::pair<Natural, Term>> negative;
    Natural constant_pos = 0;
    Natural constant_neg = 0;
};

void linearize(const Term& t, const Natural& coef, bool negated, Linear& out) {
    switch (t.kind) {
        case Term::Kind::Const:
            (negated ? out.constant_neg : out.constant_pos) += coef * t.value;
            break;
        case Term::Kind::Var:
        case Term::Kind::Div:
            (negated ? out.negative : out.positive).push_back({coef, t});
            break;
        case Term::Kind::Add:
            linearize(t.args[0], coef, negated, out);
            linearize(t.args[1], coef, negated, out);
            break;
        case Term::Kind::Sub:
            linearize(t.args[0], coef, negated, out);
            linearize(t.args[1], coef, !negated, out);
            break;
        case Term::Kind::Mul:
            linearize(t.args[0], coef * t.value, negated, out);
            break;
    }
}

class Compiler {
public:
    Compiler(const Registry& reg, CompileStats* stats) : reg_(reg), stats_(stats) {}

    Dfa compile(const Formula& f) {
        switch (f.kind) {
            case Formula::Kind::Atom: return compile_atom(f);
            case Formula::Kind::Call: return compile_call(f);
            case Formula::Kind::Not: return negate(compile(f.children[0]));
            case Formula::Kind::And: {
                std::vector<Dfa> parts;
                flatten_and(f, parts);
                return conjoin(std::move(parts), {});
            }
            case Formula::Kind::Or: return combine(BoolOp::Or, compile(f.children[0]), compile(f.children[1]));
            case Formula::Kind::Implies:
                return combine(BoolOp::Implies, compile(f.children[0]), compile(f.children[1]));
            case Formula::Kind::Iff: return combine(BoolOp::Iff, compile(f.children[0]), compile(f.children[1]));
            case Formula::Kind::Exists: return compile_exists(f.vars, f.children[0], false);
            case Formula::Kind::Forall:
                // A x P  ==  ~ E x ~P
                return negate(compile_exists(f.vars, f.children[0], true));
        }
        throw CompositionError("unknown formula node");
    }

private:
    std::string fresh() { return "#" + std::to_string(counter_++); }

    void note(const Dfa& a) {
        if (stats_) stats_->peak_states = std::max(stats_->peak_states, a.state_count());
    }

    const Dfa& primitive(const char* name) const {
        const Dfa* a = reg_.find(name);
        if (!a) throw CompositionError(std::string("base relation '") + name + "' is not available yet");
        return *a;
    }

    Dfa negate(const Dfa& a) { return restrict_valid(complement(a)); }

    Dfa combine(BoolOp op, Dfa a, Dfa b) {
        auto labels = label_union(a.labels(), b.labels());
        const bool widened = labels != a.labels() || labels != b.labels();
        Dfa r = boolean_combine(op, cylindrify(a, labels), cylindrify(b, labels));
        if (stats_) ++stats_->products;
        if (op != BoolOp::And && (widened || op != BoolOp::Or)) r = restrict_valid(r);
        note(r);
        return r;
    }

    Dfa project_var(const Dfa& a, const std::string& v) {
        auto it = std::find(a.labels().begin(), a.labels().end(), v);
        if (it == a.labels().end()) return a;
        if (stats_) ++stats_->projections;
        Dfa r = project(a, static_cast<int>(it - a.labels().begin()));
        note(r);
        return r;
    }

    // Conjunction with early quantification: each variable in `eliminate`
    // is projected away as soon as no remaining conjunct mentions it.
    Dfa conjoin(std::vector<Dfa> parts, std::vector<std::string> eliminate) {
        auto mentioned_elsewhere = [&](const std::string& v, std::size_t skip) {
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (i != skip && has_label(parts[i], v)) return true;
            return false;
        };
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& v : eliminate)
                if (has_label(parts[i], v) && !mentioned_elsewhere(v, i)) parts[i] = project_var(parts[i], v);
        if (parts.empty()) return universal(0).with_labels({});

        Dfa current = std::move(parts.front());
        parts.erase(parts.begin());
        while (!parts.empty()) {
            // Prefer the conjunct sharing the most tracks with what we have.
            std::size_t best = 0;
            long best_score = -1;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                long shared = 0;
                for (const auto& l : parts[i].labels()) shared += has_label(current, l) ? 1 : 0;
                long added = static_cast<long>(parts[i].labels().size()) - shared;
                long score = shared * 4 - added;
                if (score > best_score) {
                    best_score = score;
                    best = i;
                }
            }
            Dfa next = std::move(parts[best]);
            parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(best));
            current = combine(BoolOp::And, std::move(current), std::move(next));
            for (const auto& v : eliminate)
                if (has_label(current, v) && !mentioned_elsewhere(v, SIZE_MAX)) current = project_var(current, v);
        }
        for (const auto& v : eliminate) current = project_var(current, v);
        return current;
    }

    void flatten_and(const Formula& f, std::vector<Dfa>& parts) {
        if (f.kind == Formula::Kind::And) {
            flatten_and(f.children[0], parts);
            flatten_and(f.children[1], parts);
        } else {
            parts.push_back(compile(f));
        }
    }

    // Collects conjuncts of `f` (or of ~f when `negated`), pushing negation
    // through ~, | and => so that quantified bodies stay conjunctive.
    void conjuncts(const Formula& f, bool negated, std::vector<Dfa>& parts) {
        if (!negated && f.kind == Formula::Kind::And) {
            conjuncts(f.children[0], false, parts);
            conjuncts(f.children[1], false, parts);
        } else if (f.kind == Formula::Kind::Not) {
            conjuncts(f.children[0], !negated, parts);
        } else if (negated && f.kind == Formula::Kind::Or) {
            conjuncts(f.children[0], true, parts);
            conjuncts(f.children[1], true, parts);
        } else if (negated && f.kind == Formula::Kind::Implies) {
            conjuncts(f.children[0], false, parts);
            conjuncts(f.children[1], true, parts);
        } else {
            Dfa a = compile(f);
            parts.push_back(negated ? negate(a) : std::move(a));
        }
    }

    // E vars body   (or E vars ~body when `negate_body`)
    Dfa compile_exists(const std::vector<std::string>& vars, const Formula& body, bool negate_body) {
        std::vector<Dfa> parts;
        conjuncts(body, negate_body, parts);
        return conjoin(std::move(parts), vars);
    }

    // ---- terms -------------------------------------------------------------

    struct Lowered {
        std::vector<Dfa> constraints;
        std::vector<std::string> fresh;
    };

    std::string new_var(Lowered& low) {
        std::string v = fresh();
        low.fresh.push_back(v);
        return v;
    }

    void add_constraint(Lowered& low, const Dfa& relation, std::vector<std::string> names) {
        low.constraints.push_back(rename_tracks(relation, names));
    }

    std::string constant_var(const Natural& value, Lowered& low) {
        std::string v = new_var(low);
        add_constraint(low, constant_automaton(value), {v});
        return v;
    }

    // out = a + b
    std::string sum_var(const std::string& a, const std::string& b, Lowered& low) {
        std::string v = new_var(low);
        if (a == b) {
            std::string copy = new_var(low);
            add_constraint(low, equality_automaton(), {a, copy});
            add_constraint(low, primitive(kAdderName), {a, copy, v});
        } else {
            add_constraint(low, primitive(kAdderName), {a, b, v});
        }
        return v;
    }

    std::string scaled_var(const std::string& v, const Natural& factor, Lowered& low) {
        if (factor == 0) return constant_var(0, low);
        if (factor == 1) return v;
        // Binary method: doublings of v, summed where factor has a 1 bit.
        std::string power = v, acc;
        Natural f = factor;
        while (f > 0) {
            if ((f & 1) != 0) acc = acc.empty() ? power : sum_var(acc, power, low);
            f >>= 1;
            if (f > 0) power = sum_var(power, power, low);
        }
        return acc;
    }

    // Variable holding the value of `t`. A difference a-b is the v with v+b = a.
    std::string term_var(const Term& t, Lowered& low) {
        switch (t.kind) {
            case Term::Kind::Var: return t.name;
            case Term::Kind::Const: return constant_var(t.value, low);
            case Term::Kind::Add: return sum_var(term_var(t.args[0], low), term_var(t.args[1], low), low);
            case Term::Kind::Mul: return scaled_var(term_var(t.args[0], low), t.value, low);
            case Term::Kind::Div: {
                // t/k = q  where  t = k*q + r  and  r < k
                std::string q = new_var(low), r = new_var(low);
                std::string kq = scaled_var(q, t.value, low);
                std::string dividend = term_var(t.args[0], low);
                if (dividend == kq || dividend == r) {
                    std::string copy = new_var(low);
                    add_constraint(low, equality_automaton(), {dividend, copy});
                    dividend = copy;
                }
                add_constraint(low, primitive(kAdderName), {kq, r, dividend});
                std::string bound = constant_var(t.value, low);
                add_constraint(low, primitive(kLessThanName), {r, bound});
                return q;
            }
            case Term::Kind::Sub: {
                std::string v = new_var(low);
                low.constraints.push_back(
                    compile_comparison(Cmp::Eq, Term::add(Term::var(v), t.args[1]), t.args[0]));
                return v;
            }
        }
        throw CompositionError("unexpected term");
    }

    std::string side_var(const std::vector<std::pair<Natural, Term>>& items, const Natural& constant,
                         Lowered& low) {
        std::vector<std::string> summands;
        for (const auto& [coef, atom] : items) summands.push_back(scaled_var(term_var(atom, low), coef, low));
        if (constant != 0 || summands.empty()) summands.push_back(constant_var(constant, low));
        std::string acc = summands[0];
        for (std::size_t i = 1; i < summands.size(); ++i) acc = sum_var(acc, summands[i], low);
        return acc;
    }

    Dfa relation(Cmp c, const std::string& a, const std::string& b) {
        auto named = [](const Dfa& r, std::vector<std::string> names) { return rename_tracks(r, names); };
        switch (c) {
            case Cmp::Eq: return named(equality_automaton(), {a, b});
            case Cmp::Ne: return negate(named(equality_automaton(), {a, b}));
            case Cmp::Lt: return named(primitive(kLessThanName), {a, b});
            case Cmp::Gt: return named(primitive(kLessThanName), {b, a});
            case Cmp::Le: return negate(named(primitive(kLessThanName), {b, a}));
            case Cmp::Ge: return negate(named(primitive(kLessThanName), {a, b}));
        }
        throw CompositionError("unknown comparison");
    }

    Dfa compile_comparison(Cmp c, const Term& lhs, const Term& rhs) {
        Linear lin;
        linearize(lhs, 1, false, lin);
        linearize(rhs, 1, true, lin);
        // Differences move across: everything negative goes to the right side.
        Natural left_const = 0, right_const = 0;
        if (lin.constant_pos >= lin.constant_neg) {
            left_const = lin.constant_pos - lin.constant_neg;
        } else {
            right_const = lin.constant_neg - lin.constant_pos;
        }
        Lowered low;
        std::string a = side_var(lin.positive, left_const, low);
        std::string b = side_var(lin.negative, right_const, low);
        if (a == b) {
            std::string copy = new_var(low);
            low.constraints.push_back(rename_tracks(equality_automaton(), {b, copy}));
            b = copy;
        }
        // x = <fresh sum>: let the producing adder write x directly.
        if (c == Cmp::Eq && !low.constraints.empty()) {
            for (auto [target, source] : {std::pair{a, b}, std::pair{b, a}}) {
                if (target.front() == '#' || source.front() != '#') continue;
                auto& last = low.constraints.back();
                if (!has_label(last, source) || has_label(last, target)) continue;
                if (std::count_if(low.constraints.begin(), low.constraints.end(),
                                  [&](const Dfa& d) { return has_label(d, source); }) != 1)
                    continue;
                std::vector<std::string> names = last.labels();
                std::replace(names.begin(), names.end(), source, target);
                last = rename_tracks(last, names);
                return conjoin(std::move(low.constraints), low.fresh);
            }
        }
        low.constraints.push_back(relation(c, a, b));
        return conjoin(std::move(low.constraints), low.fresh);
    }

    Dfa compile_atom(const Formula& f) { return compile_comparison(f.cmp, f.terms[0], f.terms[1]); }

    Dfa compile_call(const Formula& f) {
        const Dfa* target = reg_.find(f.name);
        if (!target) throw CompositionError("unknown automaton '" + f.name + "'");
        if (static_cast<std::size_t>(target->track_count()) != f.terms.size())
            throw CompositionError("$" + f.name + " takes " + std::to_string(target->track_count()) +
                                   " arguments, got " + std::to_string(f.terms.size()));
        Lowered low;
        std::vector<std::string> names;
        for (const Term& t : f.terms) {
            std::string v = term_var(t, low);
            if (std::find(names.begin(), names.end(), v) != names.end()) {
                std::string copy = new_var(low);
                low.constraints.push_back(rename_tracks(equality_automaton(), {v, copy}));
                v = copy;
            }
            names.push_back(v);
        }
        auto cached = prepared_.find(f.name);
        if (cached == prepared_.end()) {
            Dfa p = restrict_valid(*target);
            if (!f.terms.empty()) p = normalize_leading_zeros(p);
            cached = prepared_.emplace(f.name, std::move(p)).first;
        }
        low.constraints.push_back(rename_tracks(cached->second, names));
        return conjoin(std::move(low.constraints), low.fresh);
    }

    const Registry& reg_;
    CompileStats* stats_;
    std::size_t counter_ = 0;
    std::map<std::string, Dfa> prepared_;
};

}  // namespace

Dfa compile(const Formula& f, const Registry& reg, CompileStats* stats) {
    Compiler c(reg, stats);
    Dfa out = normalize_leading_zeros(c.compile(f));
    auto vars = free_variables(f);
    std::vector<std::string> expected(vars.begin(), vars.end());
    if (out.labels() != expected) out = restrict_valid(cylindrify(out, expected));
    return out;
}

bool eval_sentence(const Formula& f, const Registry& reg) {
    auto vars = free_variables(f);
    if (!vars.empty()) {
        std::string list;
        for (const auto& v : vars) list += (list.empty() ? "" : ", ") + v;
        throw CompositionError("sentence has free variables: " + list);
    }
    Dfa a = compile(f, reg);
    return a.is_final(a.initial());
}

Registry define(const Registry& reg, const std::string& name, const Formula& f) {
    Registry out = reg;
    out.add(name, compile(f, reg));
    return out;
}

}  // namespace zeckit
