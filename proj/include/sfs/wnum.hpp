#pragma once

// The numeration system with place values W_k(j) = ((k+1)^j - (-1)^j)/(k+2).
//
// A digit word x_r ... x_1 (most significant first) denotes
// sum_j x_j W_k(j). It is a *valid* expansion when every digit is in
// [0, k], x_r != 0, and the word ends with an even number (possibly 0)
// of k's. Every positive integer has exactly one valid expansion.

#include "sfs/check.hpp"
#include "sfs/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sfs::wnum {

using BigInt = boost::multiprecision::cpp_int;

/// A digit word, most significant digit first.
struct WExpansion {
    std::vector<std::uint32_t> digits;

    std::size_t size() const noexcept { return digits.size(); }
    /// Length of the trailing run of zeros.
    std::size_t trailing_zeros() const noexcept;
    /// Comma-separated digits, most significant first.
    std::string to_string() const;
    static WExpansion parse(std::string_view text);

    friend bool operator==(const WExpansion &, const WExpansion &) = default;
};

/// Exact W_k(n), computed by W(n+1) = (k+1) W(n) + (-1)^n from a cached,
/// append-only table shared across threads.
BigInt w_value(unsigned k, unsigned n);

/// W_k(0..n_max) as a vector.
std::vector<BigInt> w_values(unsigned k, unsigned n_max);

/// Largest table of W_k(j) values that fit in 64 bits.
const std::vector<std::uint64_t> &w_table_u64(unsigned k);

/// Checks identities (i)-(vii) for 0 <= n <= n_max. Identity (vii),
/// |tau^n(1)| = W(n+1), expands the word directly for n <= 12 and uses the
/// length recurrence beyond.
CheckResult check_w_identities(unsigned k, unsigned n_max);

/// The valid expansion of n >= 1. Throws ParameterError for n <= 0.
WExpansion encode(unsigned k, const BigInt &n);
WExpansion encode(unsigned k, std::uint64_t n);

/// sum_j x_j W_k(j). Validity is not required. Throws ParameterError for
/// a digit > k.
BigInt decode(unsigned k, const WExpansion &x);

bool is_valid(unsigned k, const WExpansion &x);

/// Number of valid expansions of length exactly r (by a two-state count
/// over the parity of the trailing k-run).
BigInt count_valid(unsigned k, unsigned r);

/// Outcome of enumerating every digit word of length r with a non-zero
/// leading digit.
struct EnumerationReport {
    std::uint64_t valid = 0;      // valid words seen
    std::uint64_t distinct = 0;   // distinct values among them
    std::uint64_t out_of_range = 0; // values outside [W(r), W(r+1))
    friend bool operator==(const EnumerationReport &, const EnumerationReport &) = default;
};

/// Exhaustive enumeration, OpenMP-parallel over leading digit blocks.
/// Values must fit in 64 bits (r <= ~20 for k <= 4).
EnumerationReport enumerate_valid(unsigned k, unsigned r);
/// Single-threaded reference for enumerate_valid.
EnumerationReport enumerate_valid_serial(unsigned k, unsigned r);

/// t_k(n): letter n of tau_k^inf(1), read off the numeration: 2 iff the
/// valid expansion of n+1 ends with an odd number of zeros.
std::uint32_t t_via_numeration(unsigned k, std::uint64_t n);
std::uint32_t t_via_numeration(unsigned k, const BigInt &n);

/// t_k(0), ..., t_k(N-1) through the numeration (OpenMP-parallel).
Word t_prefix_numeration(unsigned k, std::size_t N);

/// b_k(l, n) = [(1 0^{2l-1})^n]_W, by decoding the digit pattern.
BigInt b_value(unsigned k, unsigned l, unsigned n);
/// b_k(l, n) from the geometric-sum closed form.
BigInt b_value_closed_form(unsigned k, unsigned l, unsigned n);
/// c_k(l, r, n) = b(l, n) - b(l, r) - (k+1) W(2l); requires n >= r + 2.
BigInt c_value(unsigned k, unsigned l, unsigned r, unsigned n);

/// Clauses of the construction lemma for 1 <= n' <= n:
///   (i)   b(l,n') = (k+1)^{2l} b(l,n'-1) + n'((k+1)^{2l}-1)/(k+2)
///   (ii)  ((k+1)^{2l}-1)/(k+2) divides b(l,n')
///   (iii) t_k(b(l,n') - 1) = 2
///   (iv)  t_k(c(l,r,n') - 1) = 1 for n' >= r+2, and the valid expansion
///         of c is (1 0^{2l-1})^{n'-r-1} 0 k^{2lr-1} 0^{2l}
/// plus agreement of the two b routes. fail_index is n'.
CheckResult check_construction(unsigned k, unsigned l, unsigned r, unsigned n);

/// Kernel element (t_k(kappa^a n + b))_{n >= 0}.
struct KernelSpec {
    std::uint64_t kappa;
    unsigned a;
    std::uint64_t b;
};

/// First N letters of the kernel element. Throws ParameterError if
/// b >= kappa^a or kappa < 2.
Word kernel_subsequence(unsigned k, const KernelSpec &spec, std::size_t N);

/// Number of pairwise-distinct length-N prefixes among all kernel elements
/// with a <= max_a, base kappa = k + 1.
std::size_t kernel_evidence(unsigned k, unsigned max_a, std::size_t N);
std::size_t kernel_evidence_serial(unsigned k, unsigned max_a, std::size_t N);

/// The sequences (t_k((k+1)^{2c} n - 1))_{n >= 1}, c = 0..c_max, compared
/// pairwise on N terms. Passes iff all are distinct; fail_index encodes the
/// first equal pair as c * 100 + c'.
CheckResult check_kernel_distinct(unsigned k, unsigned c_max, std::size_t N);

} // namespace sfs::wnum
