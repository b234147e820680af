#pragma once

#include "sfs/words.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sfs {

enum class Status { Pass, Fail, Unstable, Error };

std::string_view to_string(Status s) noexcept;

/// Outcome of an exact-equality check. A failure carries the first
/// mismatching index and a human-readable detail (both letters, clause).
struct CheckResult {
    Status status = Status::Pass;
    std::optional<std::uint64_t> fail_index;
    std::string detail;

    static CheckResult pass(std::string detail = {}) {
        return {Status::Pass, std::nullopt, std::move(detail)};
    }
    static CheckResult fail(std::uint64_t index, std::string detail) {
        return {Status::Fail, index, std::move(detail)};
    }
    bool passed() const noexcept { return status == Status::Pass; }
};

/// Compares the first n letters of two words. `index_offset` is added to
/// the reported mismatch index (1 for 1-based sequences).
CheckResult compare_prefix(std::span<const Letter> expected,
                           std::span<const Letter> actual, std::size_t n,
                           std::uint64_t index_offset = 0,
                           std::string_view what = {});

} // namespace sfs
