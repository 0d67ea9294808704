#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/zeckendorf.hpp"

using namespace zeckit;

namespace {

// Greedy expansion with explicit Fibonacci numbers 1, 2, 3, 5, ...
std::string greedy(std::uint64_t n) {
    std::vector<std::uint64_t> fib = {1, 2};
    while (fib.back() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    std::string out;
    for (auto it = fib.rbegin(); it != fib.rend(); ++it) {
        if (*it <= n) {
            n -= *it;
            out += '1';
        } else if (!out.empty()) {
            out += '0';
        }
    }
    return out;
}

}  // namespace

TEST_CASE("encode") {
    CHECK(encode(0).to_string() == "");
    CHECK(encode(4).to_string() == "101");
    CHECK(encode(11).to_string() == "10100");
    for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(encode_u64(n).to_string() == greedy(n));
}

TEST_CASE("decode ignores leading zeros") {
    CHECK(decode(ZeckWord::from_string("101")) == 4);
    CHECK(decode(ZeckWord::from_string("0101")) == 4);
    CHECK(decode(ZeckWord::from_string("")) == 0);
    for (std::uint64_t n = 0; n < 5000; ++n) REQUIRE(decode_u64(encode_u64(n).padded(encode_u64(n).size() + 3)) == n);
}

TEST_CASE("big values round-trip") {
    Natural big = fibonacci(300) + fibonacci(150) + 17;
    CHECK(decode(encode(big)) == big);
    CHECK(is_valid(encode(big)));
}

TEST_CASE("validity") {
    CHECK_FALSE(is_valid(ZeckWord::from_string("11")));
    CHECK(is_valid(ZeckWord::from_string("00101")));
    CHECK(is_valid(ZeckWord::from_string("")));
    CHECK_THROWS(ZeckWord::from_string("102"));
}

TEST_CASE("fibonacci indexing") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(10) == 55);
}

TEST_CASE("floor alpha") {
    CHECK(floor_alpha(0) == 0);
    CHECK(floor_alpha(2) == 3);
    CHECK(floor_alpha(9) == 14);
    for (std::uint64_t n = 0; n < 100000; n += 7) REQUIRE(floor_alpha_u64(n) == test::floor_alpha_oracle(n));
    CHECK(is_floor_alpha(9, 14));
    CHECK_FALSE(is_floor_alpha(9, 15));
}

TEST_CASE("floor alpha squared") {
    CHECK(floor_alpha_sq(0) == 0);
    CHECK(floor_alpha_sq(1) == 2);
    CHECK(floor_alpha_sq(10) == 26);
    for (std::uint64_t n = 0; n < 2000; ++n) REQUIRE(floor_alpha_sq(n) == n + test::floor_alpha_oracle(n));
}

TEST_CASE("shift rule: floor(alpha n) from the shifted word") {
    // (n)_F 0 decodes to floor(alpha n) + 1 when the trailing-zero count is even, else floor(alpha n).
    for (std::uint64_t n = 1; n < 3000; ++n) {
        const auto w = encode_u64(n);
        const std::uint64_t shifted = decode_u64(w.shifted());
        const std::uint64_t expect = test::floor_alpha_oracle(n) + (w.trailing_zeros() % 2 == 0 ? 1 : 0);
        REQUIRE(shifted == expect);
    }
}
