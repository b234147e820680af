#pragma once

// The period-k-folding family and executable checks of its structure
// theorems. Every check is an exact prefix comparison.

#include "sfs/check.hpp"
#include "sfs/words.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sfs::folding {

/// Morphisms and codings attached to one value of k.
///
///   sigma     0 -> 0^k 1,            1 -> 0^{k+1}
///   tau       1 -> 1^{k-1} 2,        2 -> 1^{k-1} 2 1^{k+1}
///   rho0      0 -> 1^{k-1} 2,        1 -> 1^{k+1}
///   rho1      1 -> k+2,              2 -> 2k+4
///   rho2      1 -> k,                2 -> 2k+1
///   sigma_hat 1 -> 1 (1^{k-1} 2)^k 1^k,  2 -> 1 (1^{k-1} 2)^{2k+1} 1^k
///
/// For k = 1 only:
///   tau_rho0 = tau o rho0 (0 -> 211, 1 -> 22)
///   rho3 = rho2 o tau o rho0 (0 -> 311, 1 -> 33)
///   rho4 (0 -> 411, 1 -> 42), rho8 (0 -> 833, 1 -> 86)
struct FoldingFamily {
    explicit FoldingFamily(unsigned k);

    unsigned k;
    Morphism sigma;
    Morphism tau;
    Morphism rho0;
    Morphism rho1;
    Morphism rho2;
    Morphism sigma_hat;
    std::optional<Morphism> tau_rho0;
    std::optional<Morphism> rho3;
    std::optional<Morphism> rho4;
    std::optional<Morphism> rho8;
};

/// p^(k) = sigma_k^inf(0), 0-based.
MorphicStream pkf_stream(unsigned k);
/// tau_k^inf(1), 0-based (t_k(0), t_k(1), ...).
MorphicStream tau_stream(unsigned k);
/// sigma_hat_k^inf(1), 0-based.
MorphicStream complement_stream(unsigned k);

/// The first n letters of m applied to the stream.
Word coded_prefix(const Morphism &m, const MorphicStream &s, std::size_t n);

/// p_{(k+1)n+j} = 0 for j < k and 1 - p_n for j = k, all indices < N.
CheckResult check_gpd(unsigned k, std::uint64_t N);

/// tau^inf(1) = rho0(p^(k)) on N letters; for k = 1 also with tau o rho0.
CheckResult check_projection(unsigned k, std::uint64_t N);

/// Gamma([sigma^n(0)]^j sigma(0)) = [rho2(tau^{n-1}(1))]^j for
/// 1 <= n <= n_max, 1 <= j <= j_max.
CheckResult check_gamma_identity(unsigned k, unsigned n_max, unsigned j_max);

/// mu = rho2(tau^inf(1)) on N terms for the set generated by p^(k).
CheckResult check_lemma_mu(unsigned k, std::uint64_t N);

/// k >= 2: alpha = tau^inf(1). k = 1: alpha with alpha_1 := 4 equals
/// rho4(p^(1)). N terms.
CheckResult check_lemma_alpha(unsigned k, std::uint64_t N);

/// k >= 2: v_n = * iff n = k (mod k+2), n <= N.
/// k = 1: for 14n + j <= N, n >= 1: v_{14n+j} = * iff j in {0,1,3,6,9,12},
/// v_{14n+4} = 0 and 14n+7, 14n+13 are members.
CheckResult check_star_positions(unsigned k, std::uint64_t N);

/// Every pairwise sum of the first `count` members is = k (mod k+2); k >= 2.
CheckResult check_sumset_residue(unsigned k, std::size_t count);

/// d_1 := 8, d_n = s_{n+1} - s_n for the set generated by p^(1); compared
/// with rho8(p^(1)) on N terms.
CheckResult check_theorem_A(std::uint64_t N);

/// (s_{n+1} - s_n) = rho1(tau^inf(1)) on N terms; k >= 2.
CheckResult check_theorem_B(unsigned k, std::uint64_t N);

/// sigma_hat^inf(1) = 1 tau^inf(1) on N letters.
CheckResult check_complement(unsigned k, std::uint64_t N);

/// Partial sums c(n) = s(0) + ... + s(n) of sigma_hat^inf(1), as long as
/// c(n) <= bound.
std::vector<std::uint64_t> membership_sequence(unsigned k, std::uint64_t bound);

/// n in c iff (k+1)n not in c, for 1 <= n <= N.
CheckResult check_membership_property(unsigned k, std::uint64_t N);

} // namespace sfs::folding
