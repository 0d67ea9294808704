#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/parser.hpp"

using namespace zeckit;
using test::accepts;

namespace {

const Registry& reg() { return test::base().registry; }

bool holds(const std::string& s, const Registry& r = reg()) { return eval_sentence(parse(s), r); }

}  // namespace

TEST_CASE("parsing") {
    const Formula odd = parse("?msd_fib Ek n=2*k+1");
    CHECK(odd.kind == Formula::Kind::Exists);
    CHECK(free_variables(odd) == std::set<std::string>{"n"});
    const Formula lem4 = parse("Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y");
    CHECK(lem4.kind == Formula::Kind::Forall);
    CHECK(lem4.vars.size() == 3);
    const Formula f2 = parse("~En,x,y n>=1 & x!=y & $w1(n,x) & $w1(n,y)");
    CHECK(f2.kind == Formula::Kind::Not);
    CHECK(f2.children[0].kind == Formula::Kind::Exists);
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse("Ex x=="), ParseError);
    CHECK_THROWS_AS(parse("?msd_3 x=1"), UnsupportedNumerationError);
    try {
        parse("x = = 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() >= 3);
    }
}

TEST_CASE("tracks are alphabetical") {
    const Dfa d = compile(parse("z=2*n+1"), reg());
    CHECK(d.labels() == std::vector<std::string>{"n", "z"});
    CHECK(accepts(d, {3, 7}));
    CHECK_FALSE(accepts(d, {7, 3}));
}

TEST_CASE("odd numbers") {
    const Dfa odd = compile(parse("Ek n=2*k+1"), reg());
    for (std::uint64_t n = 0; n < 300; ++n) REQUIRE(accepts(odd, {n}, n % 3) == (n % 2 == 1));
}

TEST_CASE("sentences") {
    CHECK(holds("Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y"));
    CHECK(holds("Aa,b,c,d,x ($phin(a,x) & (b=x|b=x+1) & c=a+b & d=b+c) => $shift(c,d)"));
    CHECK_FALSE(holds("An n>=1 => n>=2"));
    CHECK(holds("An n>=0"));
    const Dfa closed = compile(parse("Ex x=x"), reg());
    CHECK(closed.track_count() == 0);
    CHECK_THROWS_AS(holds("x=1"), CompositionError);
}

TEST_CASE("arithmetic terms") {
    CHECK(holds("Ax,y (x<y) <=> (Ed d>=1 & y=x+d)"));
    CHECK(holds("Ax Eq,r x=3*q+r & r<3"));
    CHECK(holds("Ax,z (z=x/3) <=> (Er 3*z+r=x & r<3)"));
    CHECK(holds("Ax,y (x>=y) => (x-y)+y=x"));
    CHECK(holds("An,x $phin(2*n,x) => Ey x=y/1"));
    const Dfa sub = compile(parse("z=x-y"), reg());
    CHECK(accepts(sub, {10, 4, 6}));
    CHECK_FALSE(accepts(sub, {4, 10, 0}));
}

TEST_CASE("defined relations") {
    Registry r = define(reg(), "double1", parse("?msd_fib z=2*n+1"));
    CHECK(holds("$double1(3,7)", r));
    CHECK_FALSE(holds("$double1(3,8)", r));
    CHECK_THROWS(holds("$double1(1,2,3)", r));
    CHECK_THROWS(compile(parse("$nosuch(x)"), r));
}

TEST_CASE("registry collisions") {
    Registry r = reg();
    CHECK_THROWS_WITH_AS(r.add("shift", universal(2)), doctest::Contains("reserved"), RegistryError);
    r.add("shift", reg().at("shift"));  // identical redefinition is allowed
    r.add("mine", universal(1));
    CHECK_THROWS_WITH_AS(r.add("mine", empty_language(1)), doctest::Contains("already defined"), RegistryError);
}

TEST_CASE("constants and equality") {
    CHECK(accepts(constant_automaton(11), {11}, 2));
    CHECK_FALSE(accepts(constant_automaton(11), {12}));
    CHECK(accepts(equality_automaton(), {9, 9}));
    CHECK_FALSE(accepts(equality_automaton(), {9, 8}));
}
