#include <filesystem>

#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/automaton_io.hpp"
#include "zeckit/script.hpp"

using namespace zeckit;

namespace {

std::vector<std::string> run(const std::string& text, Registry& reg, const std::filesystem::path& store = {}) {
    std::vector<std::string> out;
    for (const auto& r : run_commands(parse_script(text), reg, store))
        if (r.value) out.push_back(to_string(r));
    return out;
}

}  // namespace

TEST_CASE("grammar") {
    const auto cmds = parse_script(R"script(
# a comment
def odd "?msd_fib Ek n=2*k+1":
reg shift msd_fib msd_fib "([0,0]|[0,1][1,1]*[1,0])*":
eval fab "?msd_fib Aa,b,c,d,x ($phin(a,x) & (b=x|b=x+1) & c=a+b
   & d=b+c) => $shift(c,d)":
concat c odd all0 :
alphabet d msd_fib $c:
)script");
    REQUIRE(cmds.size() == 5);
    CHECK(cmds[0].kind == Command::Kind::Def);
    CHECK(cmds[1].tracks == 2);
    CHECK(cmds[2].body.find('\n') != std::string::npos);
    CHECK(cmds[3].args == std::vector<std::string>{"odd", "all0"});
    CHECK(cmds[4].args == std::vector<std::string>{"c"});
    CHECK(cmds[2].line == 5);
}

TEST_CASE("grammar errors") {
    CHECK_THROWS_AS(parse_script("def x \"n=1\""), ParseError);
    CHECK_THROWS_AS(parse_script("frob x \"n=1\":"), ParseError);
    CHECK_THROWS_AS(parse_script("reg x msd_2 \"0*\":"), ParseError);
    CHECK_THROWS_AS(parse_script("eval x \"n=1:"), ParseError);
    try {
        parse_script("def a \"n=1\":\nfrob");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("formula errors point into the script") {
    Registry reg = test::base().registry;
    try {
        run("\n\neval bad \"?msd_fib Ax x==1\":", reg);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("lemma script") {
    Registry reg = test::base().registry;
    const auto out = run(R"script(
reg shift msd_fib msd_fib "([0,0]|[0,1][1,1]*[1,0])*":
eval lem4 "?msd_fib Ax,y,z ($shift(x,y) & $shift(y,z)) => z=x+y":
)script",
                         reg);
    CHECK(out == std::vector<std::string>{"lem4: TRUE"});
}

TEST_CASE("collisions name the offender") {
    Registry reg = test::base().registry;
    run("def mine \"?msd_fib n=1\":", reg);
    CHECK_THROWS_WITH(run("def mine \"?msd_fib n=2\":", reg), doctest::Contains("'mine' is already defined"));
    CHECK_THROWS_WITH(run("reg shift msd_fib msd_fib \"([0,0])*\":", reg), doctest::Contains("'shift' is a reserved"));
    run("def mine \"?msd_fib n=1\":", reg);  // same language again is fine
}

TEST_CASE("reg keeps validity but not zero normalization") {
    Registry reg = test::base().registry;
    run("reg even0 msd_fib \"(00)*\":", reg);
    const Dfa& e = reg.at("even0");
    CHECK(e.accepts(TupleWord{0, 0}));
    CHECK_FALSE(e.accepts(TupleWord{0}));
}

TEST_CASE("store") {
    const auto dir = std::filesystem::temp_directory_path() / "zeckit-script-test";
    std::filesystem::remove_all(dir);
    {
        Registry reg = test::base().registry;
        run("def odd \"?msd_fib Ek n=2*k+1\":\nreg all0 msd_fib \"0*\":\nconcat c odd all0:", reg, dir);
    }
    CHECK(std::filesystem::exists(dir / "odd.aut"));
    CHECK(std::filesystem::exists(dir / "c.aut"));
    Registry reg = test::base().registry;
    load_store(dir, reg);
    CHECK(run("eval t \"?msd_fib $odd(7) & ~$odd(8)\":", reg) == std::vector<std::string>{"t: TRUE"});
    std::filesystem::remove_all(dir);
}
