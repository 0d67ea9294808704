// Shared test utilities.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "zeckit/automaton.hpp"
#include "zeckit/base_relations.hpp"
#include "zeckit/zeckendorf.hpp"

namespace zeckit::test {

/// Tuple word for the given numbers, msd first, with `pad` extra leading zero tuples.
inline TupleWord tuple_word(std::initializer_list<std::uint64_t> xs, std::size_t pad = 0) {
    std::vector<ZeckWord> words;
    std::size_t len = 0;
    for (auto x : xs) {
        words.push_back(encode_u64(x));
        len = std::max(len, words.back().size());
    }
    len += pad;
    TupleWord out(len);
    for (std::size_t t = 0; t < words.size(); ++t) {
        const auto padded = words[t].padded(len);
        for (std::size_t i = 0; i < len; ++i) out[i] = (out[i] << 1) | padded.digits()[i];
    }
    return out;
}

inline bool accepts(const Dfa& a, std::initializer_list<std::uint64_t> xs, std::size_t pad = 0) {
    return a.accepts(tuple_word(xs, pad));
}

/// Certified once per test binary.
inline const BaseRelations& base() {
    static const BaseRelations b = certify_base_relations();
    return b;
}

// Integer oracle for floor(n * alpha), alpha the golden ratio.
inline std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}
inline std::uint64_t floor_alpha_oracle(std::uint64_t n) { return (n + isqrt(5 * n * n)) / 2; }

}  // namespace zeckit::test
