// Zeckendorf (Fibonacci) numeration and exact golden-ratio floor functions.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeckit {

using Natural = boost::multiprecision::cpp_int;

class RepresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A most-significant-digit-first binary word read in Fibonacci base.
/// May hold any bit pattern; use is_valid() before trusting it as a
/// Zeckendorf representation.
class ZeckWord {
public:
    ZeckWord() = default;
    explicit ZeckWord(std::vector<std::uint8_t> digits);

    /// Parses a string of '0'/'1' characters.
    static ZeckWord from_string(std::string_view bits);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Empty, or starts with a 1.
    bool is_canonical() const { return digits_.empty() || digits_.front() == 1; }
    std::size_t trailing_zeros() const;

    ZeckWord shifted() const;          ///< this word followed by a 0
    ZeckWord padded(std::size_t length) const;  ///< left-padded with zeros
    ZeckWord stripped() const;         ///< leading zeros removed

    std::string to_string() const;

    friend bool operator==(const ZeckWord&, const ZeckWord&) = default;

private:
    std::vector<std::uint8_t> digits_;
};

bool is_valid(std::span<const std::uint8_t> bits);
inline bool is_valid(const ZeckWord& w) { return is_valid(w.digits()); }

/// F_1 = F_2 = 1.
Natural fibonacci(unsigned index);

/// Greedy canonical representation; encode(0) is the empty word.
ZeckWord encode(const Natural& n);
/// Throws RepresentationError on adjacent ones.
Natural decode(const ZeckWord& w);

// Fast paths for values that fit a machine word.
ZeckWord encode_u64(std::uint64_t n);
std::uint64_t decode_u64(const ZeckWord& w);

/// True iff x <= alpha*n < x+1, decided with integer arithmetic only.
bool is_floor_alpha(const Natural& n, const Natural& x);

/// floor(alpha * n) with alpha the golden ratio.
Natural floor_alpha(const Natural& n);
std::uint64_t floor_alpha_u64(std::uint64_t n);

/// floor(alpha^2 * n) = n + floor(alpha * n).
Natural floor_alpha_sq(const Natural& n);

}  // namespace zeckit
