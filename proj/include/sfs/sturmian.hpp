#pragma once

// Lower mechanical words with exact quadratic-surd slopes, and the checks
// for sum-free sets generated by Sturmian words that begin with 11.

#include "sfs/check.hpp"
#include "sfs/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfs::sturmian {

using BigInt = boost::multiprecision::cpp_int;

/// The input stream does not satisfy t_0 = t_1 = 1 and "no 00".
class HypothesisError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// (p + q sqrt(D)) / r with r > 0. Rationals have q = 0 (D is then
/// irrelevant and stored as 0).
struct QuadSurd {
    BigInt p = 0, q = 0, r = 1, D = 0;

    QuadSurd() = default;
    QuadSurd(BigInt p, BigInt q, BigInt r, BigInt D);
    static QuadSurd rational(BigInt p, BigInt r = 1) { return {std::move(p), 0, std::move(r), 0}; }

    /// "p,q,r,D" or "p,r" (rational).
    static QuadSurd parse(std::string_view text);
    std::string to_string() const;

    bool is_rational() const;
    BigInt floor() const;
    double approx() const;

    friend bool operator==(const QuadSurd &, const QuadSurd &) = default;
};

/// x + y for surds sharing D (or with at least one rational).
QuadSurd add(const QuadSurd &x, const QuadSurd &y);
/// n * x.
QuadSurd scale(const QuadSurd &x, const BigInt &n);
/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt &n);

struct SlopeSpec {
    QuadSurd alpha;
    QuadSurd rho;

    /// Throws ParameterError unless alpha is irrational in (0, 1) and rho is
    /// rational or shares the radicand of alpha.
    void validate() const;
    std::string to_string() const;
};

/// t_n = floor((n+1) alpha + rho) - floor(n alpha + rho), n >= 0, evaluated
/// exactly. Throws ParameterError for an invalid spec (rational alpha, ...).
MorphicStream mechanical_stream(const SlopeSpec &spec);

/// t_0 = t_1 = 1 and no factor 00 among the first N letters. fail_index is
/// 0 or 1 for a bad start, otherwise the position of the first 0 of 00.
CheckResult require_11_no_00(const MorphicStream &s, std::uint64_t N);
CheckResult require_11_no_00(std::span<const Letter> w);

/// Scans rho = j/64, then rho = j/64 + alpha/4096, j = 0..63, for an
/// intercept whose word passes require_11_no_00 on `check_len` letters.
/// Throws LimitError if none does (alpha < 1/2 never works).
SlopeSpec find_intercept(const QuadSurd &alpha, std::uint64_t check_len = 1000);

/// v_n = * iff n is even, for n <= N, and every member is odd. Throws
/// HypothesisError if the stream fails require_11_no_00.
CheckResult check_star_parity(const MorphicStream &s, std::uint64_t N);
CheckResult check_star_parity(const SlopeSpec &spec, std::uint64_t N);

/// On the first N gaps of the generated set:
///   (a) mu_n in {0, 1}
///   (b) phi(mu) is a prefix of t, phi: 0 -> 1, 1 -> 10
///   (c) alpha_n = mu_n + 1
///   (d) d_n = 2 (mu_n + 1)
///   (e) d relabelled 2 -> 0, 4 -> 1 has n + 1 factors of length n,
///       n <= n_max
/// The detail names the clause; fail_index is the term (or length) index.
/// Throws HypothesisError if the stream fails require_11_no_00.
CheckResult check_theorem_D(const MorphicStream &s, std::uint64_t N, unsigned n_max);
CheckResult check_theorem_D(const SlopeSpec &spec, std::uint64_t N, unsigned n_max);

} // namespace sfs::sturmian
