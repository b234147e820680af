#pragma once

// The bijection between binary sequences and sum-free sets.
//
// Indexing: v_n, s_n, mu_n, alpha_n and d_n are 1-based. Every
// vector here stores index n at offset n-1.

#include "sfs/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfs {

enum class Mark : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// Printable alias for Mark values.
inline constexpr std::string_view kMarkAlias = "01*";

/// Immutable snapshot of the construction up to a frontier.
struct SumFreeTrace {
    /// s_1 < s_2 < ... (all members <= frontier).
    std::vector<std::uint64_t> members;
    /// v_1 ... v_frontier.
    std::vector<Mark> v;
    /// Number of input letters read (one per non-star position).
    std::uint64_t consumed = 0;

    std::uint64_t frontier() const noexcept { return v.size(); }
    Mark v_at(std::uint64_t n) const { return v.at(n - 1); }
    /// v as a word over {0,1,2}, 2 standing for '*'.
    Word v_word() const;
    std::string v_string() const;
};

/// Single-writer incremental construction. Positions n = 1, 2, ... are
/// scanned in order; n is a star if it is a realized sum, otherwise the
/// next input letter decides whether n joins the set.
class SumFreeBuilder {
public:
    explicit SumFreeBuilder(MorphicStream input);

    void extend_to(std::uint64_t frontier);
    /// Extends the frontier geometrically until `count` members exist.
    /// Throws LimitError once the frontier would exceed `max_frontier`.
    void extend_until_members(std::size_t count,
                              std::uint64_t max_frontier = std::uint64_t{1} << 32);

    std::uint64_t frontier() const noexcept { return v_.size(); }
    const std::vector<std::uint64_t> &members() const noexcept { return members_; }
    SumFreeTrace snapshot() const;

private:
    Letter next_input();

    MorphicStream input_;
    Word input_cache_;
    std::uint64_t consumed_ = 0;
    std::vector<Mark> v_;
    std::vector<std::uint64_t> members_;
    // sumset_[x] != 0 iff x is a sum of two (not necessarily distinct) members.
    std::vector<std::uint8_t> sumset_;
};

/// theta applied to w, traced up to `frontier` positions.
SumFreeTrace theta_forward(const MorphicStream &w, std::uint64_t frontier);
/// theta applied to w, traced until at least `count` members are known.
SumFreeTrace theta_members(const MorphicStream &w, std::size_t count);

struct SumWitness {
    std::uint64_t x, y, z;
    friend bool operator==(const SumWitness &, const SumWitness &) = default;
};

/// A set prefix that is not sum-free.
class SumFreeViolation : public std::domain_error {
public:
    explicit SumFreeViolation(SumWitness w);
    SumWitness witness;
};

/// Returns a witness x + y = z inside s, or nullopt if s is sum-free.
/// Distinct summands (x < y) are searched before doubled ones (x = y).
/// Throws ParameterError unless s is strictly ascending and positive.
std::optional<SumWitness> check_sumfree(std::span<const std::uint64_t> s);

/// Builds v from the members of s up to `frontier`, deletes the stars and
/// returns the binary word w' with theta(w') = s on that range.
Word theta_inverse(std::span<const std::uint64_t> s, std::uint64_t frontier);

struct GapCounters {
    std::vector<std::uint64_t> mu;    // zeros strictly between s_n and s_{n+1}
    std::vector<std::uint64_t> alpha; // stars strictly between s_n and s_{n+1}
    std::vector<std::uint64_t> d;     // s_{n+1} - s_n
};

/// Counters for every completed gap of the trace (|members| - 1 entries).
GapCounters gap_counters(const SumFreeTrace &trace);

} // namespace sfs
