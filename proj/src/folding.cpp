#include "sfs/folding.hpp"

#include "sfs/sumfree.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

namespace sfs::folding {

namespace {

void require_k(unsigned k, unsigned min_k = 1) {
    if (k < min_k) {
        throw ParameterError("k must be >= " + std::to_string(min_k) +
                             ", got " + std::to_string(k));
    }
}

// Concatenation of runs (letter, count) over an alphabet.
Word runs(std::initializer_list<std::pair<Letter, std::size_t>> parts,
          Letter alphabet) {
    Word out({}, alphabet);
    for (auto [a, n] : parts) out.append(Word::run(a, n, alphabet));
    return out;
}

std::vector<Letter> to_letters(const std::vector<std::uint64_t> &v,
                               std::size_t n) {
    std::vector<Letter> out;
    out.reserve(std::min(n, v.size()));
    for (std::size_t i = 0; i < n && i < v.size(); ++i) {
        out.push_back(static_cast<Letter>(v[i]));
    }
    return out;
}

Morphism make_sigma(unsigned k) {
    return Morphism({{0, runs({{0, k}, {1, 1}}, 2)},
                     {1, runs({{0, k + 1}}, 2)}},
                    2);
}

Morphism make_tau(unsigned k) {
    return Morphism({{1, runs({{1, k - 1}, {2, 1}}, 3)},
                     {2, runs({{1, k - 1}, {2, 1}, {1, k + 1}}, 3)}},
                    3);
}

Morphism make_rho0(unsigned k) {
    return Morphism({{0, runs({{1, k - 1}, {2, 1}}, 3)},
                     {1, runs({{1, k + 1}}, 3)}},
                    3);
}

Morphism make_sigma_hat(unsigned k) {
    const Word block = runs({{1, k - 1}, {2, 1}}, 3);
    auto image = [&](std::size_t blocks) {
        Word w = Word::run(1, 1, 3);
        w.append(block.repeated(blocks));
        w.append(Word::run(1, k, 3));
        return w;
    };
    return Morphism({{1, image(k)}, {2, image(2 * k + 1)}}, 3);
}

} // namespace

FoldingFamily::FoldingFamily(unsigned k_)
    : k((require_k(k_), k_)),
      sigma(make_sigma(k)),
      tau(make_tau(k)),
      rho0(make_rho0(k)),
      rho1({{1, Word({k + 2}, 2 * k + 5)}, {2, Word({2 * k + 4}, 2 * k + 5)}},
           2 * k + 5),
      rho2({{1, Word({k}, 2 * k + 2)}, {2, Word({2 * k + 1}, 2 * k + 2)}},
           2 * k + 2),
      sigma_hat(make_sigma_hat(k)) {
    if (k == 1) {
        tau_rho0 = compose(tau, rho0);
        rho3 = compose(rho2, *tau_rho0);
        rho4 = Morphism({{0, Word({4, 1, 1}, 5)}, {1, Word({4, 2}, 5)}}, 5);
        rho8 = Morphism({{0, Word({8, 3, 3}, 9)}, {1, Word({8, 6}, 9)}}, 9);
    }
}

MorphicStream pkf_stream(unsigned k) {
    require_k(k);
    return MorphicStream::fixed_point(make_sigma(k), 0);
}

MorphicStream tau_stream(unsigned k) {
    require_k(k);
    return MorphicStream::fixed_point(make_tau(k), 1);
}

MorphicStream complement_stream(unsigned k) {
    require_k(k);
    return MorphicStream::fixed_point(make_sigma_hat(k), 1);
}

Word coded_prefix(const Morphism &m, const MorphicStream &s, std::size_t n) {
    // Non-erasing, so n source letters always suffice; start smaller.
    std::size_t source = std::max<std::size_t>(1, n / 2);
    while (true) {
        Word out = apply_morphism(m, s.prefix(source));
        if (out.size() >= n || source >= n) {
            out.truncate(n);
            return out;
        }
        source = std::min(n, 2 * source);
    }
}

CheckResult check_gpd(unsigned k, std::uint64_t N) {
    require_k(k);
    const Word p = pkf_stream(k).prefix(N);
    for (std::uint64_t n = 0; (k + 1) * n < N; ++n) {
        for (unsigned j = 0; j <= k; ++j) {
            const std::uint64_t idx = (k + 1) * n + j;
            if (idx >= N) break;
            const Letter want = j < k ? 0 : 1 - p[n];
            if (p[idx] != want) {
                return CheckResult::fail(
                    idx, "p_" + std::to_string(idx) + " = " +
                             std::to_string(p[idx]) + ", recurrence gives " +
                             std::to_string(want));
            }
        }
    }
    return CheckResult::pass();
}

CheckResult check_projection(unsigned k, std::uint64_t N) {
    const FoldingFamily fam(k);
    const MorphicStream p = pkf_stream(k);
    const Word t = tau_stream(k).prefix(N);
    auto r = compare_prefix(t.view(), coded_prefix(fam.rho0, p, N).view(), N, 0,
                            "rho0");
    if (!r.passed() || k != 1) return r;
    return compare_prefix(t.view(), coded_prefix(*fam.tau_rho0, p, N).view(), N,
                          0, "tau o rho0");
}

CheckResult check_gamma_identity(unsigned k, unsigned n_max, unsigned j_max) {
    const FoldingFamily fam(k);
    const Word sigma0 = fam.sigma.image(0);
    Word sigma_n = sigma0;         // sigma^n(0)
    Word tau_prev = Word({1}, 3);  // tau^{n-1}(1)
    for (unsigned n = 1; n <= n_max; ++n) {
        const Word coded = apply_morphism(fam.rho2, tau_prev);
        for (unsigned j = 1; j <= j_max; ++j) {
            Word w = sigma_n.repeated(j);
            w.append(sigma0);
            const Word lhs = gamma(w);
            const Word rhs = coded.repeated(j);
            if (lhs.letters() != rhs.letters()) {
                auto r = compare_prefix(rhs.view(), lhs.view(),
                                        std::max(lhs.size(), rhs.size()));
                return CheckResult::fail(n,
                                         "n=" + std::to_string(n) + " j=" +
                                             std::to_string(j) + ": " + r.detail);
            }
        }
        sigma_n = apply_morphism(fam.sigma, sigma_n);
        tau_prev = apply_morphism(fam.tau, tau_prev);
    }
    return CheckResult::pass();
}

CheckResult check_lemma_mu(unsigned k, std::uint64_t N) {
    const FoldingFamily fam(k);
    const auto trace = theta_members(pkf_stream(k), N + 1);
    const auto g = gap_counters(trace);
    const Word expected = coded_prefix(fam.rho2, tau_stream(k), N);
    return compare_prefix(expected.view(), to_letters(g.mu, N), N, 1, "mu");
}

CheckResult check_lemma_alpha(unsigned k, std::uint64_t N) {
    const FoldingFamily fam(k);
    const auto trace = theta_members(pkf_stream(k), N + 1);
    auto alpha = to_letters(gap_counters(trace).alpha, N);
    if (k >= 2) {
        const Word expected = tau_stream(k).prefix(N);
        return compare_prefix(expected.view(), alpha, N, 1, "alpha");
    }
    alpha[0] = 4;
    const Word expected = coded_prefix(*fam.rho4, pkf_stream(1), N);
    return compare_prefix(expected.view(), alpha, N, 1, "alpha'");
}

CheckResult check_star_positions(unsigned k, std::uint64_t N) {
    require_k(k);
    const auto trace = theta_forward(pkf_stream(k), N);
    if (k >= 2) {
        for (std::uint64_t n = 1; n <= N; ++n) {
            const bool star = trace.v_at(n) == Mark::Star;
            // The first sum is 2 s_1 = 2k + 2, so v_k itself is not a star.
            const bool want = n > k && n % (k + 2) == k;
            if (star != want) {
                return CheckResult::fail(
                    n, "v_" + std::to_string(n) + (star ? " is" : " is not") +
                           " a star");
            }
        }
        return CheckResult::pass();
    }

    constexpr std::uint64_t kPeriod = 14;
    constexpr std::array<bool, kPeriod> kStar = {true,  true,  false, true,  false,
                                                 false, true,  false, false, true,
                                                 false, false, true,  false};
    std::vector<std::uint8_t> member(N + 1, 0);
    for (auto s : trace.members) member[s] = 1;
    for (std::uint64_t n = 1; kPeriod * n <= N; ++n) {
        for (std::uint64_t j = 0; j < kPeriod; ++j) {
            const std::uint64_t idx = kPeriod * n + j;
            if (idx > N) break;
            const bool star = trace.v_at(idx) == Mark::Star;
            if (star != kStar[j]) {
                return CheckResult::fail(
                    idx, "v_" + std::to_string(idx) + " (j=" + std::to_string(j) +
                             ")" + (star ? " is" : " is not") + " a star");
            }
            if (j == 4 && trace.v_at(idx) != Mark::Zero) {
                return CheckResult::fail(idx, "v_" + std::to_string(idx) +
                                                  " should be 0");
            }
            if ((j == 7 || j == 13) && !member[idx]) {
                return CheckResult::fail(idx, std::to_string(idx) +
                                                  " should be a member");
            }
        }
    }
    return CheckResult::pass();
}

CheckResult check_sumset_residue(unsigned k, std::size_t count) {
    require_k(k, 2);
    const auto trace = theta_members(pkf_stream(k), count);
    const auto &s = trace.members;
    const std::size_t n = std::min(count, s.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const std::uint64_t z = s[i] + s[j];
            if (z % (k + 2) != k) {
                return CheckResult::fail(
                    z, std::to_string(s[i]) + " + " + std::to_string(s[j]) +
                           " = " + std::to_string(z) + " is not " +
                           std::to_string(k) + " mod " + std::to_string(k + 2));
            }
        }
    }
    return CheckResult::pass();
}

CheckResult check_theorem_A(std::uint64_t N) {
    const FoldingFamily fam(1);
    const auto trace = theta_members(pkf_stream(1), N + 1);
    auto d = to_letters(gap_counters(trace).d, N);
    d[0] = 8;
    const Word expected = coded_prefix(*fam.rho8, pkf_stream(1), N);
    return compare_prefix(expected.view(), d, N, 1, "d");
}

CheckResult check_theorem_B(unsigned k, std::uint64_t N) {
    require_k(k, 2);
    const FoldingFamily fam(k);
    const auto trace = theta_members(pkf_stream(k), N + 1);
    const auto d = to_letters(gap_counters(trace).d, N);
    const Word expected = coded_prefix(fam.rho1, tau_stream(k), N);
    return compare_prefix(expected.view(), d, N, 1, "d");
}

CheckResult check_complement(unsigned k, std::uint64_t N) {
    require_k(k);
    const Word hat = complement_stream(k).prefix(N);
    Word expected({1}, 3);
    if (N > 0) expected.append(tau_stream(k).prefix(N - 1));
    return compare_prefix(expected.view(), hat.view(), N, 0, "sigma_hat");
}

std::vector<std::uint64_t> membership_sequence(unsigned k, std::uint64_t bound) {
    require_k(k);
    // Every letter is >= 1, so bound + 1 letters reach past the bound.
    const Word s = complement_stream(k).prefix(bound + 1);
    std::vector<std::uint64_t> c;
    std::uint64_t sum = 0;
    for (Letter a : s) {
        sum += a;
        if (sum > bound) break;
        c.push_back(sum);
    }
    return c;
}

CheckResult check_membership_property(unsigned k, std::uint64_t N) {
    const std::uint64_t bound = (k + 1) * N;
    const auto c = membership_sequence(k, bound);
    std::vector<std::uint8_t> in(bound + 1, 0);
    for (auto x : c) in[x] = 1;
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (in[n] == in[(k + 1) * n]) {
            return CheckResult::fail(
                n, std::to_string(n) + (in[n] ? " and " : " and neither ") +
                       std::to_string((k + 1) * n) +
                       (in[n] ? " both belong to c" : " belong to c"));
        }
    }
    return CheckResult::pass();
}

} // namespace sfs::folding
