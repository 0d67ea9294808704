// Compilation of formulas to automata over Zeckendorf representations.
//
// The automaton for a formula reads one track per free variable, tracks in
// alphabetical order of the variable names. It accepts exactly the padded
// tuple words whose tracks are valid Zeckendorf words denoting a satisfying
// assignment.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zeckit/automaton.hpp"
#include "zeckit/formula.hpp"

namespace zeckit {

class RegistryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Named automata available to $name(...) calls. Copies share storage.
class Registry {
public:
    /// Adds `a` under `name`. Re-adding a language-identical automaton is a
    /// no-op; anything else under a taken name throws RegistryError.
    void add(const std::string& name, Dfa a);
    /// Marks a name as reserved for a base relation and stores it.
    void add_reserved(const std::string& name, Dfa a);

    const Dfa* find(const std::string& name) const;
    const Dfa& at(const std::string& name) const;
    bool contains(const std::string& name) const { return entries_.count(name) != 0; }
    bool is_reserved(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    struct Entry {
        std::shared_ptr<const Dfa> automaton;
        bool reserved = false;
    };
    std::map<std::string, Entry> entries_;
};

/// Names the compiler looks up for its arithmetic primitives.
inline constexpr const char* kLessThanName = "lt";
inline constexpr const char* kAdderName = "add";

struct CompileStats {
    std::size_t products = 0;
    std::size_t projections = 0;
    std::size_t peak_states = 0;
};

/// Compiles `f` to a minimized, leading-zero-normalized automaton whose
/// labels are the sorted free variables of `f`.
Dfa compile(const Formula& f, const Registry& reg, CompileStats* stats = nullptr);

/// True iff the closed formula `f` holds. Throws CompositionError when `f`
/// has free variables.
bool eval_sentence(const Formula& f, const Registry& reg);

/// Returns a copy of `reg` extended with the compiled `f` under `name`.
Registry define(const Registry& reg, const std::string& name, const Formula& f);

/// 1-track automaton accepting the padded representations of `value`.
Dfa constant_automaton(const Natural& value);
/// 2-track equality relation on valid words.
Dfa equality_automaton();

}  // namespace zeckit
