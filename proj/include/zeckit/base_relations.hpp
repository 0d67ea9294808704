// The bootstrap automata behind every formula: order, successor, addition,
// shift, floor(alpha n) and floor(alpha^2 n).
//
// Each relation is certified before anything may use it, in the order
// less-than, successor, adder, shift, phin, phi2n. Successor and adder are
// guessed from data and then pinned down by first-order properties that,
// together with the certified order, determine them uniquely.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zeckit/compiler.hpp"

namespace zeckit {

class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CertifiedRelation {
    std::string name;
    Dfa automaton;
    /// (property, passed); every entry is true once construction succeeds.
    std::vector<std::pair<std::string, bool>> certificate;
};

struct CertificationBounds {
    std::uint64_t less_than = 3000;
    std::uint64_t successor_samples = 2000;
    std::uint64_t adder_samples = 300;
    std::uint64_t shift = 10000;
    std::uint64_t phin = 1000000;
    std::uint64_t phi2n = 10000;
};

Dfa build_validity(int tracks);

CertifiedRelation build_less_than(const CertificationBounds& b = {});
CertifiedRelation build_successor(const Registry& with_lt, const CertificationBounds& b = {});
CertifiedRelation build_adder(const Registry& with_succ, const CertificationBounds& b = {});
CertifiedRelation build_shift(const Registry& with_lt, const CertificationBounds& b = {});
CertifiedRelation build_phin(const Registry& with_shift, const CertificationBounds& b = {});
CertifiedRelation build_phi2n(const Registry& with_phin, const CertificationBounds& b = {});

/// Regular expression for the shift relation (y)_F = (x)_F 0.
inline constexpr const char* kShiftPattern = "([0,0]|[0,1][1,1]*[1,0])*";

struct BaseRelations {
    std::vector<CertifiedRelation> relations;  // in certification order
    Registry registry;                          // reserved names, ready to use
};

/// Runs the whole chain; `progress` (if set) hears about each finished relation.
BaseRelations certify_base_relations(const CertificationBounds& b = {},
                                     const std::function<void(const CertifiedRelation&)>& progress = {});

/// The reserved names: valid_1..valid_3, lt, succ, add, shift, phin, phi2n.
std::vector<std::string> reserved_names();

}  // namespace zeckit
