#include "sfs/check.hpp"

namespace sfs {

std::string_view to_string(Status s) noexcept {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unstable: return "unstable";
    case Status::Error: return "error";
    }
    return "error";
}

CheckResult compare_prefix(std::span<const Letter> expected,
                           std::span<const Letter> actual, std::size_t n,
                           std::uint64_t index_offset, std::string_view what) {
    const std::string label = what.empty() ? std::string() : std::string(what) + ": ";
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= expected.size() || i >= actual.size()) {
            return CheckResult::fail(i + index_offset,
                                     label + "prefix too short at index " +
                                         std::to_string(i + index_offset));
        }
        if (expected[i] != actual[i]) {
            return CheckResult::fail(
                i + index_offset,
                label + "expected " + std::to_string(expected[i]) + ", got " +
                    std::to_string(actual[i]) + " at index " +
                    std::to_string(i + index_offset));
        }
    }
    return CheckResult::pass();
}

} // namespace sfs
