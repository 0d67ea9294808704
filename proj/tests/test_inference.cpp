#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "zeckit/automaton_io.hpp"
#include "zeckit/inference.hpp"
#include "zeckit/interspersion.hpp"

using namespace zeckit;
using test::accepts;

namespace {

SampleSet column_samples(const char* array, std::size_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    const auto col = first_column(builtin_array(array), n);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i + 1, col[i].convert_to<std::uint64_t>());
    return SampleSet(pairs);
}

}  // namespace

TEST_CASE("sample sets") {
    SampleSet s({{3, 9}, {1, 1}, {2, 4}, {2, 4}});
    CHECK(s.pairs().size() == 3);
    CHECK(s.complete_upto() == 3);
    CHECK(s.value(2) == 4u);
    CHECK_FALSE(s.value(7).has_value());
    CHECK_THROWS_AS(SampleSet({{1, 1}, {1, 2}}), SampleError);
    CHECK(SampleSet({{2, 4}}).complete_upto() == 0);
}

TEST_CASE("sample files") {
    const auto dir = std::filesystem::temp_directory_path() / "zeckit-inference-test";
    std::filesystem::create_directories(dir);
    const SampleSet s({{1, 1}, {2, 4}, {3, 6}});
    write_samples(dir / "s.txt", s);
    CHECK(read_samples(dir / "s.txt").pairs() == s.pairs());
    std::ofstream(dir / "bad.txt") << "1 2 3\n";
    CHECK_THROWS_AS(read_samples(dir / "bad.txt"), SampleError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("wythoff column 1 guess") {
    const SampleSet s = column_samples("wythoff", 500);
    const Dfa a = guess_dfa(s);
    CHECK(a.live_state_count() == 10);
    CHECK(sound_on_samples(a, s, 2));
    CHECK(to_text(a) == to_text(guess_dfa(s)));
    // beyond the samples
    for (std::uint64_t i = 501; i < 3000; i += 37) CHECK(accepts(a, {i, test::floor_alpha_oracle(i) + i - 1}));
}

TEST_CASE("dual column 1 guess") { CHECK(guess_dfa(column_samples("dual", 1000)).live_state_count() == 11); }

TEST_CASE("efc column 1 guess") {
    // Published size is 33; ours is one smaller because i = 0 maps to 0 alone.
    CHECK(guess_dfa(column_samples("efc", 1000)).live_state_count() == 32);
}

TEST_CASE("guess_function on addition") {
    const Dfa add = guess_function(2, 60, [](std::span<const std::uint64_t> x) { return x[0] + x[1]; });
    CHECK(equivalent(add, test::base().registry.at("add")));
}

TEST_CASE("insufficient data") {
    CHECK_THROWS_AS(guess_dfa(SampleSet{}), SampleError);
}
