// Guessing automata for sampled functions.
//
// The learner sees a function only through a finite table. It classifies
// tuple-word prefixes by their membership on all suffixes up to some length
// (a bounded Myhill-Nerode table), restricted to the window of words whose
// inputs all lie in the sampled range, so every table entry is known. The
// suffix length grows until the hypothesis is sound on every sample.
//
// Nothing here is a proof; callers certify the result separately.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zeckit/automaton.hpp"

namespace zeckit {

class InferenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent or malformed sample data.
class SampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (i, value) pairs of a unary function.
class SampleSet {
public:
    SampleSet() = default;
    explicit SampleSet(std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs);

    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs() const { return pairs_; }
    /// Largest i such that every 1 <= i' <= i is present (0 if none).
    std::uint64_t complete_upto() const { return complete_upto_; }
    std::optional<std::uint64_t> value(std::uint64_t i) const;

private:
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;  // sorted by i
    std::uint64_t complete_upto_ = 0;
};

SampleSet read_samples(const std::filesystem::path& path);
void write_samples(const std::filesystem::path& path, const SampleSet& s);

struct GuessOptions {
    std::size_t max_pad = 2;
    std::size_t state_budget = 256;
};

/// 2-track automaton (i, value) for the sampled function. An unsampled
/// i = 0 is taken to map to 0, the convention used for array columns.
Dfa guess_dfa(const SampleSet& samples, const GuessOptions& options = {});

/// Generic form: an automaton over inputs+1 tracks (inputs..., output) for
/// `f`, which must be known on every input tuple with entries <= bound.
Dfa guess_function(int inputs, std::uint64_t bound,
                   const std::function<std::uint64_t(std::span<const std::uint64_t>)>& f,
                   const GuessOptions& options = {});

/// True iff `a` accepts every sample padded with 0..max_pad extra zero
/// tuples and accepts no other output for the same input at those lengths.
bool sound_on_samples(const Dfa& a, const SampleSet& samples, std::size_t max_pad);

}  // namespace zeckit
