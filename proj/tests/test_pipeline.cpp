#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/pipeline.hpp"
#include "zeckit/regex.hpp"
#include "zeckit/script.hpp"

using namespace zeckit;
using test::accepts;

namespace {

bool all_true(const VerificationReport& r) {
    for (const auto& [name, v] : r.theorems)
        if (!v) return false;
    return !r.theorems.empty();
}

VerificationReport prove(const char* array, Registry& reg) { return seven_step_verify(builtin_array(array), reg); }

}  // namespace

TEST_CASE("wythoff") {
    Registry reg = test::base().registry;
    const auto r = prove("wythoff", reg);
    CHECK(r.fully_verified());
    CHECK(r.col1_states == 10);
    CHECK(r.col2_states == 13);
    CHECK(r.col3_states == 18);
    CHECK(all_true(r));
    CHECK(r.to_text().find("fully-verified PASS wythoff") != std::string::npos);

    const Table t = generate(builtin_array("wythoff"), 50, 3);
    for (std::uint64_t i = 1; i <= 50; ++i) {
        CHECK(evaluate_function(reg.at("w1"), i) == t[i - 1][0]);
        CHECK(evaluate_function(reg.at("wythoff_col2"), i) == t[i - 1][1]);
        CHECK(evaluate_function(reg.at("wythoff_col3"), i) == t[i - 1][2]);
    }
}

TEST_CASE("other arrays") {
    struct Expect {
        const char* name;
        std::size_t col1, col2, col3;  // 0: not checked
    };
    for (const Expect& e : {Expect{"stolarsky", 0, 0, 0}, Expect{"dual", 11, 0, 0}, Expect{"efc", 32, 47, 67},
                            Expect{"esc", 39, 52, 72}}) {
        Registry reg = test::base().registry;
        const auto r = prove(e.name, reg);
        CHECK_MESSAGE(r.fully_verified(), r.to_text());
        CHECK_MESSAGE(all_true(r), r.to_text());
        if (e.col1) CHECK(r.col1_states == e.col1);
        if (e.col2) CHECK(r.col2_states == e.col2);
        if (e.col3) CHECK(r.col3_states == e.col3);
    }
}

TEST_CASE("stolarsky conjecture") {
    Registry reg = test::base().registry;
    const auto r = prove("stolarsky", reg);
    bool found = false;
    for (const auto& [name, v] : r.theorems)
        if (name == "stol_conjecture") found = v;
    CHECK(found);
}

TEST_CASE("too few samples fail visibly") {
    Registry reg = test::base().registry;
    PipelineOptions opt;
    opt.samples = 20;
    opt.theorems = false;
    VerificationReport r;
    try {
        r = seven_step_verify(builtin_array("efc"), reg, opt);
        CHECK_FALSE(r.fully_verified());
    } catch (const std::exception&) {
        // a hypothesis that cannot be built is also a failure
    }
}

TEST_CASE("theorem suite needs column 1") {
    CHECK_THROWS_AS(theorem_suite("dual", test::base().registry), std::logic_error);
    for (const auto& [name, v] : theorem_suite("lemmas", test::base().registry)) CHECK_MESSAGE(v, name);
}

TEST_CASE("classification sequences") {
    const auto w = classification_sequence(builtin_array("wythoff"), 100);
    for (auto d : w) CHECK(d == 1);
    const auto s = classification_sequence(builtin_array("stolarsky"), 5000);
    CHECK((s[0] == 1 && s[1] == 0 && s[2] == 0));
    const auto d = classification_sequence(builtin_array("dual"), 50);
    CHECK(d[0] == 1);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] == 0);
    CHECK(subword_complexity(s, 1) == 2);
    CHECK(subword_complexity(s, 3) == 6);
    CHECK(subword_complexity(std::vector<std::uint8_t>(5000, 1), 4) == 1);
    CHECK_THROWS_AS(subword_complexity(std::vector<std::uint8_t>(100, 1), 2), InsufficientDataError);
}

TEST_CASE("renumerate") {
    const Dfa r = renumerate(concat_languages(regex_to_dfa("101", 1), regex_to_dfa("0*", 1)));
    CHECK(accepts(r, {11}));
    CHECK(accepts(r, {4}, 2));
    CHECK(equivalent(renumerate(r), r));
    const Dfa any = renumerate(concat_languages(regex_to_dfa("(0|1)*", 1), regex_to_dfa("0*", 1)));
    CHECK(any.accepts(TupleWord{1, 0, 1, 0, 0}));
    CHECK_FALSE(any.accepts(TupleWord{1, 1, 0}));
}
