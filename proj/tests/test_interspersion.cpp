#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/interspersion.hpp"

using namespace zeckit;

namespace {

std::string table_file(const std::string& name) {
    std::ifstream in(std::string(ZECKIT_TEST_DATA) + "/" + name + "_10x10.tsv");
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("generalized Fibonacci") {
    CHECK(gen_fib(4, 7, 5) == 29);
    CHECK(gen_fib(1, 1, 10) == 55);
    CHECK(gen_fib(0, 0, 7) == 0);
}

TEST_CASE("second entries") {
    CHECK(second_entry(builtin_array("wythoff"), 2, 4) == 7);
    CHECK(second_entry(builtin_array("stolarsky"), 2, 4) == 6);
    CHECK(second_entry(builtin_array("dual"), 4, 9) == 14);
    CHECK(delta_value(builtin_array("efc"), 2) == 1);
    CHECK(delta_value(builtin_array("esc"), 3) == 1);
    CHECK(delta_value(builtin_array("k100"), 4) == 1);
    CHECK(delta_value(builtin_array("k100"), 5) == 0);
    CHECK_THROWS_AS(delta_value(builtin_array("wythoff"), 1), std::logic_error);
}

TEST_CASE("mex") {
    CHECK(mex({1, 2, 3, 5, 8, 13, 21, 34, 55, 89}) == 4);
    CHECK(mex({}) == 1);
    CHECK(mex({1, 2, 3, 4}) == 5);
}

TEST_CASE("published tables") {
    for (const char* name : {"wythoff", "stolarsky", "dual", "efc"})
        CHECK_MESSAGE(to_tsv(generate(builtin_array(name), 10, 10)) == table_file(name), name);
    CHECK(generate(builtin_array("wythoff"), 10, 10)[9][9] == 1919);
    CHECK(generate(builtin_array("stolarsky"), 10, 10)[7][9] == 1508);
    CHECK(generate(builtin_array("dual"), 10, 10)[8][8] == 1021);
    CHECK(generate(builtin_array("efc"), 10, 10)[9][9] == 2008);
    CHECK(generate(builtin_array("efc"), 10, 1)[9][0] == 26);
}

TEST_CASE("first columns") {
    const auto k = first_column(builtin_array("k100"), 12);
    const std::vector<int> want = {1, 4, 7, 9, 12, 14, 17, 20, 23, 25, 27, 30};
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(k[i] == want[i]);
    const auto d = first_column(builtin_array("dual"), 4);
    CHECK((d[0] == 1 && d[1] == 4 && d[2] == 7 && d[3] == 9));
    CHECK(first_column(builtin_array("wythoff"), 1)[0] == 1);
}

TEST_CASE("every positive integer appears exactly once") {
    for (const auto& spec : builtin_arrays()) {
        const Table t = generate(spec, 400, 12);
        std::set<Natural> seen;
        for (const auto& row : t)
            for (const auto& v : row) CHECK_MESSAGE(seen.insert(v).second, spec.name << " repeats " << v);
        // Anything left out of the corner is above row 1's last shown entry or starts a later row.
        const Natural bound = std::min(t[0].back(), t.back()[0]);
        for (Natural n = 1; n <= bound; ++n) REQUIRE_MESSAGE(seen.count(n), spec.name << " misses " << n);
    }
}

TEST_CASE("wythoff column 1 against the closed form") {
    const auto col = first_column(builtin_array("wythoff"), 2000);
    for (std::uint64_t i = 1; i <= 2000; ++i) REQUIRE(col[i - 1] == test::floor_alpha_oracle(i) + i - 1);
}

TEST_CASE("output formats") {
    const Table t = generate(builtin_array("wythoff"), 2, 3);
    CHECK(to_tsv(t) == "1\t2\t3\n4\t7\t11\n");
    CHECK(to_pretty(t).find("11") != std::string::npos);
    CHECK_THROWS_AS(builtin_array("nope"), std::invalid_argument);
}
