#pragma once

// Subword complexity and the run-length conjecture for tau_k^inf(1).

#include "sfs/check.hpp"
#include "sfs/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sfs::complexity {

/// f_1, ..., f_{n_max} of a finite word: the number of distinct factors of
/// each length. Lengths are counted in parallel. Short lengths use packed
/// letters as keys; longer ones use the pair of class ids of two
/// overlapping power-of-two windows, so every count is exact.
std::vector<std::uint64_t> factor_counts(std::span<const Letter> w, unsigned n_max,
                                         Letter alphabet_size);
/// Reference implementation with an ordered set of factor views.
std::vector<std::uint64_t> factor_counts_serial(std::span<const Letter> w, unsigned n_max);

struct ComplexityProfile {
    std::vector<std::uint64_t> f;  // f_1..f_{n_max} at offset n-1
    std::vector<std::int64_t> d;   // d_n = f_{n+1} - f_n at offset n-1
    std::vector<bool> stabilized;  // per f_n
    std::uint64_t prefix_len = 0;

    bool all_stabilized() const;
    /// Number of leading f values that are stabilized.
    std::size_t stable_count() const;
};

/// Counts factors of length n <= n_max in prefixes of length
/// initial_prefix, 2 initial_prefix, ... until all counts agree over two
/// consecutive doublings. If the next prefix would exceed `cap`, returns
/// the last result with the per-n flags of the last comparison.
ComplexityProfile subword_complexity(const MorphicStream &s, unsigned n_max,
                                     std::uint64_t initial_prefix = 4096,
                                     std::uint64_t cap = std::uint64_t{1} << 24);

struct RunLengths {
    /// a_1, a_2, ...: runs of 1's at odd positions, 2's at even ones. a_1
    /// may be 0. The last run may continue beyond the data.
    std::vector<std::uint64_t> a;
    /// 1-based index n of the first d_n outside {1, 2}, if any; runs stop
    /// there.
    std::optional<std::uint64_t> violation;

    /// Runs known to be complete (all but the last).
    std::size_t closed() const { return a.empty() ? 0 : a.size() - 1; }
};

RunLengths run_lengths(std::span<const std::int64_t> d);
/// Runs of the stabilized part of the profile's d.
RunLengths run_lengths(const ComplexityProfile &p);

/// a_1 = k-1, a_2 = k, a_{2n} = a_{2n-1} + a_{2n-2},
/// a_{2n+1} = k a_{2n} + k (-1)^n.
std::vector<std::int64_t> conjectured_runs(unsigned k, std::size_t m);

struct ConjectureReport {
    Status status = Status::Pass;
    std::optional<std::uint64_t> fail_index; // 1-based run index
    std::string detail;
    ComplexityProfile profile;
    RunLengths runs;
    std::vector<std::int64_t> expected;

    CheckResult result() const { return {status, fail_index, detail}; }
};

/// Computes stabilized complexity of tau_k^inf(1), doubling n_max until m
/// closed runs are known, and compares a_1..a_m with the conjectured
/// values. Unstable if the prefix cap is reached first.
ConjectureReport check_conjecture(unsigned k, std::size_t m,
                                  std::uint64_t cap = std::uint64_t{1} << 24);

} // namespace sfs::complexity
