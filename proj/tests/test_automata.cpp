#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/automaton_io.hpp"
#include "zeckit/regex.hpp"

using namespace zeckit;
using test::accepts;

namespace {

TupleWord bits(const std::string& s) {
    TupleWord w;
    for (char c : s) w.push_back(c == '1' ? 1 : 0);
    return w;
}

}  // namespace

TEST_CASE("boolean operations") {
    const Dfa v = build_validity(1);
    CHECK(equivalent(boolean_combine(BoolOp::And, v, v), v));
    const Dfa all = universal(1);
    CHECK(boolean_combine(BoolOp::Minus, all, v).accepts(bits("11")));
    CHECK(equivalent(complement(complement(v)), v));
    CHECK(complement(empty_language(1)).accepts(bits("")));
    CHECK(complement(v).accepts(bits("0110")));
    CHECK_FALSE(equivalent(v, all));
}

TEST_CASE("mismatched arity is rejected") {
    CHECK_THROWS_AS(boolean_combine(BoolOp::And, universal(1), universal(2)), CompositionError);
}

TEST_CASE("projection") {
    const Registry& reg = test::base().registry;
    const Dfa add = reg.at("add");
    const Dfa xy = normalize_leading_zeros(project(add, 2));
    CHECK(equivalent(minimize(xy), minimize(restrict_valid(universal(2)))));
}

TEST_CASE("minimize is idempotent and canonical") {
    const Dfa a = regex_to_dfa("(0|1)*1(00)*", 1);
    const Dfa m = minimize(a);
    CHECK(minimize(m).state_count() == m.state_count());
    CHECK(to_text(m) == to_text(minimize(regex_to_dfa("((0|1)*1)(00)*", 1))));
}

TEST_CASE("shift regex determinizes to two live states") {
    const Dfa shift = minimize(regex_to_dfa("([0,0]|[0,1][1,1]*[1,0])*", 2));
    CHECK(shift.live_state_count() == 2);
    CHECK(shift.accepts(TupleWord{0b01, 0b10}));
}

TEST_CASE("regex examples") {
    const Dfa even0 = regex_to_dfa("(00)*", 1);
    CHECK(even0.accepts(bits("0000")));
    CHECK_FALSE(even0.accepts(bits("000")));
    CHECK(regex_to_dfa("0*", 1).accepts(bits("")));
    CHECK_THROWS_AS(regex_to_dfa("(0|1", 1), ParseError);
    CHECK_THROWS_AS(regex_to_dfa("[0,1]", 1), ParseError);
}

TEST_CASE("concatenation") {
    const Dfa a = regex_to_dfa("101", 1);
    const Dfa b = regex_to_dfa("0*", 1);
    CHECK(concat_languages(a, b).accepts(bits("10100")));
    CHECK(equivalent(concat_languages(regex_to_dfa("", 1), a), a));
}

TEST_CASE("leading-zero normalization") {
    const Dfa n = normalize_leading_zeros(regex_to_dfa("101", 1));
    for (auto w : {"101", "0101", "00101"}) CHECK(n.accepts(bits(w)));
    CHECK(equivalent(normalize_leading_zeros(n), n));
    CHECK(normalize_leading_zeros(empty_language(1)).accepts_nothing());
}

TEST_CASE("enumeration") {
    const auto words = enumerate_accepted(build_validity(1), 2);
    CHECK(words.size() == 6);
    CHECK(enumerate_accepted(empty_language(1), 5).empty());
    const auto ends_in_one = enumerate_accepted(restrict_valid(regex_to_dfa("(0|1)*1", 1)), 3);
    CHECK(ends_in_one == std::vector<TupleWord>{{1}, {0, 1}, {0, 0, 1}, {1, 0, 1}});
}

TEST_CASE("empty word") {
    const Dfa v = build_validity(2);
    CHECK(v.accepts(TupleWord{}) == v.is_final(v.initial()));
    CHECK(v.accepts(TupleWord{0b10, 0b01}));
    CHECK_FALSE(v.accepts(TupleWord{0b10, 0b10}));
    CHECK_FALSE(build_validity(1).accepts(bits("11")));
}

TEST_CASE("track operations") {
    const Dfa lt = test::base().registry.at("lt");
    const Dfa gt = permute_tracks(lt, {1, 0});
    CHECK(accepts(gt, {7, 4}));
    CHECK_FALSE(accepts(gt, {4, 7}));
    const Dfa wide = cylindrify(lt.with_labels({"a", "c"}), {"a", "b", "c"});
    CHECK(wide.track_count() == 3);
    CHECK(accepts(wide, {4, 100, 7}));
}

TEST_CASE("text format round-trips") {
    const Dfa a = test::base().registry.at("add");
    const Dfa b = from_text(to_text(a));
    CHECK(equivalent(a, b));
    CHECK(to_text(b) == to_text(a));
    CHECK_THROWS_AS(from_text("tracks 1\nstates x\n"), ParseError);
    CHECK(to_dot(a, "add").find("digraph") != std::string::npos);
}
