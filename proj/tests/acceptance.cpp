// Acceptance criteria. One line per criterion; exit status 1 if any fails
// or runs over its time limit.

#include "sfs/complexity.hpp"
#include "sfs/folding.hpp"
#include "sfs/sturmian.hpp"
#include "sfs/sumfree.hpp"
#include "sfs/wnum.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sfs;

namespace {

using u64 = std::uint64_t;

// Collects the first failure message.
struct Verdict {
    std::string why;
    bool ok() const { return why.empty(); }
    void require(bool cond, const std::string &msg) {
        if (ok() && !cond) why = msg;
    }
    void require(const CheckResult &r, const std::string &what) {
        if (ok() && !r.passed()) why = what + ": " + r.detail;
    }
};

std::string list(const std::vector<u64> &v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<u64> head(const std::vector<u64> &v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

Verdict theta_examples() {
    Verdict v;
    const auto ones = theta_members(MorphicStream::periodic(Word({1}, 2)), 8);
    v.require(head(ones.members, 8) == std::vector<u64>{1, 3, 5, 7, 9, 11, 13, 15},
              "theta(111...) = " + list(head(ones.members, 8)));
    const auto alt = theta_members(MorphicStream::periodic(Word({0, 1}, 2)), 4);
    v.require(head(alt.members, 4) == std::vector<u64>{2, 5, 8, 11},
              "theta(0101...) = " + list(head(alt.members, 4)));
    return v;
}

Verdict theta_pkf() {
    Verdict v;
    const auto t = theta_members(folding::pkf_stream(1), 6);
    v.require(head(t.members, 6) == std::vector<u64>{2, 7, 10, 13, 21, 27},
              "theta(p1) = " + list(head(t.members, 6)));
    return v;
}

Verdict theta_round_trip() {
    Verdict v;
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200 && v.ok(); ++trial) {
        std::vector<Letter> seed(20);
        for (auto &a : seed) a = static_cast<Letter>(rng() & 1);
        const Word w(seed, 2);
        const auto stream = MorphicStream::periodic(w);
        const auto trace = theta_forward(stream, 1000);
        const Word back = theta_inverse(trace.members, 1000);
        v.require(back.size() >= 20, "seed " + to_symbols(w) + ": fewer than 20 letters recovered");
        v.require(back == stream.prefix(back.size()), "seed " + to_symbols(w) + " not recovered");
    }
    return v;
}

Verdict theorem_a() {
    Verdict v;
    v.require(folding::check_theorem_A(10000), "d vs rho8");
    const auto g = gap_counters(theta_members(folding::pkf_stream(1), 6));
    std::vector<u64> d = head(g.d, 5);
    d[0] = 8;
    v.require(d == std::vector<u64>{8, 3, 3, 8, 6}, "first terms " + list(d));
    return v;
}

Verdict theorem_b() {
    Verdict v;
    for (unsigned k = 2; k <= 5; ++k) {
        v.require(folding::check_theorem_B(k, 10000), "k=" + std::to_string(k));
        const auto t = theta_members(folding::pkf_stream(k), 2);
        v.require(t.members[0] == k + 1 && t.members[1] == 2 * k + 3,
                  "k=" + std::to_string(k) + " s1,s2 = " + list(head(t.members, 2)));
    }
    return v;
}

Verdict lemmas() {
    Verdict v;
    for (unsigned k = 1; k <= 4; ++k) {
        const auto ks = "k=" + std::to_string(k);
        v.require(folding::check_gamma_identity(k, 8, 3), ks + " gamma identity");
        v.require(folding::check_lemma_mu(k, 1000), ks + " mu");
        v.require(folding::check_lemma_alpha(k, 1000), ks + " alpha");
    }
    return v;
}

Verdict stars() {
    Verdict v;
    for (unsigned k = 1; k <= 5; ++k) {
        v.require(folding::check_star_positions(k, 10000), "k=" + std::to_string(k));
    }
    return v;
}

Verdict numeration() {
    Verdict v;
    auto as_u64 = [](const std::vector<wnum::BigInt> &w) {
        std::vector<u64> out;
        for (const auto &x : w) out.push_back(static_cast<u64>(x));
        return out;
    };
    v.require(as_u64(wnum::w_values(1, 7)) == std::vector<u64>{0, 1, 1, 3, 5, 11, 21, 43}, "W_1 prefix");
    v.require(as_u64(wnum::w_values(2, 5)) == std::vector<u64>{0, 1, 2, 7, 20, 61}, "W_2 prefix");
    for (unsigned k = 1; k <= 4; ++k) {
        v.require(wnum::check_w_identities(k, 30), "identities k=" + std::to_string(k));
    }
    for (unsigned k = 1; k <= 5 && v.ok(); ++k) {
        for (u64 n = 1; n <= 100000; ++n) {
            const auto x = wnum::encode(k, n);
            if (!wnum::is_valid(k, x) || wnum::decode(k, x) != n) {
                v.require(false, "round trip k=" + std::to_string(k) + " n=" + std::to_string(n));
                break;
            }
        }
    }
    for (unsigned k = 1; k <= 4 && v.ok(); ++k) {
        for (unsigned r = 1; r <= 12; ++r) {
            const auto span = wnum::w_value(k, r + 1) - wnum::w_value(k, r);
            const auto rep = wnum::enumerate_valid(k, r);
            v.require(wnum::count_valid(k, r) == span && rep.valid == span &&
                          rep.distinct == rep.valid && rep.out_of_range == 0,
                      "enumeration k=" + std::to_string(k) + " r=" + std::to_string(r));
        }
    }
    return v;
}

Verdict value12() {
    Verdict v;
    for (unsigned k = 1; k <= 5; ++k) {
        const Word t = folding::tau_stream(k).prefix(100000);
        const Word u = wnum::t_prefix_numeration(k, 100000);
        v.require(compare_prefix(t.view(), u.view(), 100000), "k=" + std::to_string(k));
    }
    return v;
}

Verdict construction() {
    Verdict v;
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned l = 1; l <= 4; ++l) {
            for (unsigned r = 1; r <= 6; ++r) {
                v.require(wnum::check_construction(k, l, r, 8),
                          "k=" + std::to_string(k) + " l=" + std::to_string(l) + " r=" + std::to_string(r));
            }
        }
    }
    return v;
}

Verdict kernel() {
    Verdict v;
    for (unsigned k = 1; k <= 3; ++k) {
        v.require(wnum::check_kernel_distinct(k, 2, 100000), "distinct k=" + std::to_string(k));
        std::vector<u64> counts;
        for (unsigned a = 1; a <= 4; ++a) counts.push_back(wnum::kernel_evidence(k, a, 10000));
        for (std::size_t i = 1; i < counts.size(); ++i) {
            v.require(counts[i] > counts[i - 1],
                      "evidence k=" + std::to_string(k) + " not increasing: " + list(counts));
        }
    }
    return v;
}

Verdict complement() {
    Verdict v;
    for (unsigned k = 1; k <= 4; ++k) {
        v.require(folding::check_complement(k, 10000), "k=" + std::to_string(k));
    }
    v.require(to_symbols(folding::complement_stream(1).prefix(6)) == "121122", "k=1 prefix");
    return v;
}

Verdict membership() {
    Verdict v;
    for (unsigned k = 1; k <= 3; ++k) {
        v.require(folding::check_membership_property(k, 10000), "k=" + std::to_string(k));
    }
    return v;
}

Verdict theorem_d() {
    Verdict v;
    int passed = 0;
    for (const char *a : {"-1,1,2,5", "2,-1,1,2", "-1,1,1,3", "-2,1,1,7"}) {
        const auto spec = sturmian::find_intercept(sturmian::QuadSurd::parse(a));
        const auto stream = sturmian::mechanical_stream(spec);
        v.require(sturmian::require_11_no_00(stream, 1000), std::string("hypothesis ") + a);
        v.require(sturmian::check_star_parity(stream, 10000), std::string("star parity ") + a);
        const auto r = sturmian::check_theorem_D(stream, 10000, 50);
        v.require(r, std::string("slope ") + a);
        passed += r.passed();
    }
    v.require(passed >= 3, "fewer than 3 slopes pass");
    return v;
}

Verdict conjecture() {
    Verdict v;
    const auto p = complexity::subword_complexity(folding::tau_stream(3), 400);
    v.require(p.stable_count() >= 16, "k=3 f values not stabilized");
    v.require(head(p.f, 15) == std::vector<u64>{2, 3, 4, 6, 8, 10, 11, 12, 13, 14, 15, 16, 18, 20, 22},
              "k=3 f = " + list(head(p.f, 15)));
    const std::vector<std::int64_t> d(p.d.begin(), p.d.begin() + 12);
    v.require(d == std::vector<std::int64_t>{1, 1, 2, 2, 2, 1, 1, 1, 1, 1, 1, 2}, "k=3 d prefix");

    const auto k3 = complexity::check_conjecture(3, 8);
    v.require(k3.result(), "k=3 recurrences");
    v.require(head(k3.runs.a, 8) == std::vector<u64>{2, 3, 6, 9, 30, 39, 114, 153},
              "k=3 a = " + list(head(k3.runs.a, 8)));
    v.require(k3.profile.all_stabilized(), "k=3 profile not stabilized");
    for (unsigned k : {2u, 4u}) {
        const auto rep = complexity::check_conjecture(k, 6);
        v.require(rep.result(), "k=" + std::to_string(k) + " a = " + list(rep.runs.a));
        v.require(rep.profile.all_stabilized(), "k=" + std::to_string(k) + " not stabilized");
    }
    return v;
}

struct Criterion {
    int id;
    const char *name;
    double limit_s;
    std::function<Verdict()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "theta of 111... and 0101...", 1, theta_examples},
        {2, "theta of the period-doubling word", 1, theta_pkf},
        {3, "theta round trip on 200 random seeds", 10, theta_round_trip},
        {4, "k=1 gaps equal rho8 of sigma, 10^4 terms", 10, theorem_a},
        {5, "k=2..5 gaps equal rho1 of tau, 10^4 terms", 60, theorem_b},
        {6, "gap map identity, mu and alpha lemmas", 30, lemmas},
        {7, "star positions up to 10^4", 30, stars},
        {8, "W-numeration", 60, numeration},
        {9, "value-1-2 equivalence, 10^5 terms", 60, value12},
        {10, "construction lemma", 30, construction},
        {11, "kernel evidence", 120, kernel},
        {12, "complement morphism fixed point", 10, complement},
        {13, "membership property", 10, membership},
        {14, "Sturmian slopes, clauses (a)-(e)", 120, theorem_d},
        {15, "subword complexity conjecture data", 600, conjecture},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v.why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok() && secs > c.limit_s) v.why = "over time limit";
        failures += !v.ok();
        std::printf("%s %2d  %-42s %8.2f s (limit %g s)%s%s\n", v.ok() ? "PASS" : "FAIL", c.id, c.name,
                    secs, c.limit_s, v.ok() ? "" : "  ", v.why.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
