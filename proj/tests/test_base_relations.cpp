#include "doctest.h"
#include "helpers.hpp"

using namespace zeckit;
using test::accepts;

namespace {
const Dfa& rel(const char* name) { return test::base().registry.at(name); }
}  // namespace

TEST_CASE("certification chain") {
    const auto& b = test::base();
    REQUIRE(b.relations.size() == 6);
    const char* order[] = {"lt", "succ", "add", "shift", "phin", "phi2n"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(b.relations[i].name == order[i]);
        for (const auto& [prop, ok] : b.relations[i].certificate) CHECK_MESSAGE(ok, b.relations[i].name << ": " << prop);
    }
    for (const auto& name : reserved_names()) CHECK(b.registry.is_reserved(name));
}

TEST_CASE("validity automata") {
    CHECK_FALSE(build_validity(1).accepts(TupleWord{1, 1}));
    CHECK(build_validity(2).accepts(TupleWord{0b10, 0b01}));
    CHECK_FALSE(build_validity(2).accepts(TupleWord{0b11, 0b10}));
}

TEST_CASE("less than") {
    CHECK(accepts(rel("lt"), {4, 7}));
    CHECK_FALSE(accepts(rel("lt"), {0, 0}));
    CHECK_FALSE(accepts(rel("lt"), {7, 4}));
    for (std::uint64_t x = 0; x < 60; ++x)
        for (std::uint64_t y = 0; y < 60; ++y) REQUIRE(accepts(rel("lt"), {x, y}, 1) == (x < y));
}

TEST_CASE("successor") {
    CHECK(accepts(rel("succ"), {0, 1}));
    CHECK(accepts(rel("succ"), {4, 5}));
    CHECK_FALSE(accepts(rel("succ"), {4, 6}));
    // beyond the sampled range
    CHECK(accepts(rel("succ"), {100000, 100001}));
}

TEST_CASE("adder") {
    CHECK(accepts(rel("add"), {4, 7, 11}));
    CHECK(accepts(rel("add"), {9, 0, 9}));
    CHECK_FALSE(accepts(rel("add"), {1, 1, 3}));
    CHECK(accepts(rel("add"), {12345, 67890, 80235}));
    for (std::uint64_t x = 0; x < 40; ++x)
        for (std::uint64_t y = 0; y < 40; ++y) REQUIRE(accepts(rel("add"), {x, y, x + y}));
}

TEST_CASE("shift") {
    CHECK(accepts(rel("shift"), {4, 7}));
    CHECK(accepts(rel("shift"), {0, 0}));
    CHECK_FALSE(accepts(rel("shift"), {1, 3}));
}

TEST_CASE("phin and phi2n") {
    CHECK(accepts(rel("phin"), {0, 0}));
    CHECK(accepts(rel("phin"), {1, 1}));
    CHECK(accepts(rel("phin"), {2, 3}));
    CHECK_FALSE(accepts(rel("phin"), {2, 4}));
    CHECK(accepts(rel("phi2n"), {1, 2}));
    CHECK(accepts(rel("phi2n"), {10, 26}));
    CHECK(accepts(rel("phi2n"), {0, 0}));
    for (std::uint64_t n = 2000000; n < 2000500; ++n)
        REQUIRE(accepts(rel("phin"), {n, test::floor_alpha_oracle(n)}));
}
