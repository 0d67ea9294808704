#include "zeckit/zeckendorf.hpp"

#include <algorithm>
#include <cmath>

namespace zeckit {

ZeckWord::ZeckWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d > 1) throw RepresentationError("digit out of range");
    }
}

ZeckWord ZeckWord::from_string(std::string_view bits) {
    std::vector<std::uint8_t> digits;
    digits.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') throw RepresentationError("not a binary digit: " + std::string(1, c));
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ZeckWord(std::move(digits));
}

std::size_t ZeckWord::trailing_zeros() const {
    auto it = std::find(digits_.rbegin(), digits_.rend(), std::uint8_t{1});
    return static_cast<std::size_t>(it - digits_.rbegin());
}

ZeckWord ZeckWord::shifted() const {
    ZeckWord out = *this;
    out.digits_.push_back(0);
    return out;
}

ZeckWord ZeckWord::padded(std::size_t length) const {
    if (length <= digits_.size()) return *this;
    ZeckWord out;
    out.digits_.assign(length - digits_.size(), 0);
    out.digits_.insert(out.digits_.end(), digits_.begin(), digits_.end());
    return out;
}

ZeckWord ZeckWord::stripped() const {
    auto first = std::find(digits_.begin(), digits_.end(), std::uint8_t{1});
    ZeckWord out;
    out.digits_.assign(first, digits_.end());
    return out;
}

std::string ZeckWord::to_string() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

bool is_valid(std::span<const std::uint8_t> bits) {
    for (std::size_t i = 1; i < bits.size(); ++i) {
        if (bits[i] == 1 && bits[i - 1] == 1) return false;
    }
    return true;
}

Natural fibonacci(unsigned index) {
    Natural a = 0, b = 1;  // F_0, F_1
    for (unsigned i = 0; i < index; ++i) {
        Natural t = a + b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

ZeckWord encode(const Natural& n) {
    if (n == 0) return {};
    // fibs[k] = F_{k+2}: 1, 2, 3, 5, ...
    std::vector<Natural> fibs{1, 2};
    while (fibs.back() <= n) fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
    fibs.pop_back();
    std::vector<std::uint8_t> digits(fibs.size(), 0);
    Natural rest = n;
    for (std::size_t k = fibs.size(); k-- > 0;) {
        if (fibs[k] <= rest) {
            rest -= fibs[k];
            digits[fibs.size() - 1 - k] = 1;
        }
    }
    return ZeckWord(std::move(digits));
}

Natural decode(const ZeckWord& w) {
    if (!is_valid(w)) throw RepresentationError("adjacent ones in '" + w.to_string() + "'");
    Natural value = 0;
    Natural lo = 1, hi = 2;  // F_2, F_3: weights of the last two positions
    const auto& d = w.digits();
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i]) value += lo;
        Natural next = lo + hi;
        lo = std::move(hi);
        hi = std::move(next);
    }
    return value;
}

ZeckWord encode_u64(std::uint64_t n) {
    if (n == 0) return {};
    std::uint64_t fibs[94];
    int count = 0;
    std::uint64_t a = 1, b = 2;
    while (a <= n) {
        fibs[count++] = a;
        if (b < a) break;  // overflow guard near 2^64
        std::uint64_t t = a + b;
        a = b;
        b = t;
    }
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(count), 0);
    for (int k = count - 1; k >= 0; --k) {
        if (fibs[k] <= n) {
            n -= fibs[k];
            digits[static_cast<std::size_t>(count - 1 - k)] = 1;
        }
    }
    return ZeckWord(std::move(digits));
}

std::uint64_t decode_u64(const ZeckWord& w) {
    if (!is_valid(w)) throw RepresentationError("adjacent ones in '" + w.to_string() + "'");
    std::uint64_t value = 0, lo = 1, hi = 2;
    const auto& d = w.digits();
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i]) value += lo;
        std::uint64_t next = lo + hi;
        lo = hi;
        hi = next;
    }
    return value;
}

namespace {

// x <= alpha*n  <=>  2x - n <= sqrt(5)*n
bool at_most_alpha_times(const Natural& x, const Natural& n) {
    Natural lhs = 2 * x - n;
    if (lhs <= 0) return true;
    return lhs * lhs <= 5 * n * n;
}

}  // namespace

bool is_floor_alpha(const Natural& n, const Natural& x) {
    if (n < 0 || x < 0) return false;
    return at_most_alpha_times(x, n) && !at_most_alpha_times(x + 1, n);
}

Natural floor_alpha(const Natural& n) {
    // floor((n + sqrt(5 n^2)) / 2) == floor((n + isqrt(5 n^2)) / 2)
    Natural x = (n + boost::multiprecision::sqrt(Natural(5 * n * n))) / 2;
    if (!is_floor_alpha(n, x)) throw std::logic_error("floor_alpha: exact test failed");
    return x;
}

std::uint64_t floor_alpha_u64(std::uint64_t n) {
    if (n > (std::uint64_t{1} << 30)) {
        return static_cast<std::uint64_t>(floor_alpha(Natural(n)));
    }
    std::uint64_t sq = 5 * n * n;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(sq)));
    while (r * r > sq) --r;
    while ((r + 1) * (r + 1) <= sq) ++r;
    return (n + r) / 2;
}

Natural floor_alpha_sq(const Natural& n) { return n + floor_alpha(n); }

}  // namespace zeckit
