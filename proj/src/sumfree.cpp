#include "sfs/sumfree.hpp"

#include <algorithm>

namespace sfs {

Word SumFreeTrace::v_word() const {
    std::vector<Letter> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(),
                   [](Mark m) { return static_cast<Letter>(m); });
    return Word(std::move(out), 3);
}

std::string SumFreeTrace::v_string() const {
    std::string out(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = kMarkAlias[static_cast<std::size_t>(v[i])];
    }
    return out;
}

SumFreeBuilder::SumFreeBuilder(MorphicStream input)
    : input_(std::move(input)), sumset_(1, 0) {}

Letter SumFreeBuilder::next_input() {
    if (consumed_ >= input_cache_.size()) {
        input_cache_ = input_.prefix(std::max<std::size_t>(64, 2 * input_cache_.size()));
    }
    Letter a = input_cache_[consumed_++];
    if (a > 1) throw DomainError("theta input must be binary");
    return a;
}

void SumFreeBuilder::extend_to(std::uint64_t frontier) {
    const std::uint64_t old = v_.size();
    if (frontier <= old) return;
    sumset_.resize(frontier + 1, 0);

    // Sums of existing members that land in (old, frontier].
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const std::uint64_t s = members_[i];
        if (2 * s > frontier) break;
        const std::uint64_t lo = std::max(s, old + 1 > s ? old + 1 - s : 0);
        auto it = std::lower_bound(members_.begin() + static_cast<std::ptrdiff_t>(i),
                                   members_.end(), lo);
        for (; it != members_.end() && s + *it <= frontier; ++it) {
            sumset_[s + *it] = 1;
        }
    }

    v_.reserve(frontier);
    for (std::uint64_t n = old + 1; n <= frontier; ++n) {
        if (sumset_[n]) {
            v_.push_back(Mark::Star);
            continue;
        }
        if (next_input() == 0) {
            v_.push_back(Mark::Zero);
            continue;
        }
        v_.push_back(Mark::One);
        members_.push_back(n);
        for (std::uint64_t t : members_) {
            if (n + t > frontier) break;
            sumset_[n + t] = 1;
        }
    }
}

void SumFreeBuilder::extend_until_members(std::size_t count,
                                          std::uint64_t max_frontier) {
    while (members_.size() < count) {
        const std::uint64_t next = std::max<std::uint64_t>(64, 2 * frontier());
        if (next > max_frontier) {
            throw LimitError("frontier cap reached with only " +
                             std::to_string(members_.size()) + " members");
        }
        extend_to(next);
    }
}

SumFreeTrace SumFreeBuilder::snapshot() const {
    return SumFreeTrace{members_, v_, consumed_};
}

SumFreeTrace theta_forward(const MorphicStream &w, std::uint64_t frontier) {
    SumFreeBuilder builder(w);
    builder.extend_to(frontier);
    return builder.snapshot();
}

SumFreeTrace theta_members(const MorphicStream &w, std::size_t count) {
    SumFreeBuilder builder(w);
    builder.extend_until_members(count);
    return builder.snapshot();
}

SumFreeViolation::SumFreeViolation(SumWitness w)
    : std::domain_error("not sum-free: " + std::to_string(w.x) + " + " +
                        std::to_string(w.y) + " = " + std::to_string(w.z)),
      witness(w) {}

std::optional<SumWitness> check_sumfree(std::span<const std::uint64_t> s) {
    if (s.empty()) return std::nullopt;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0 || (i > 0 && s[i] <= s[i - 1])) {
            throw ParameterError("set prefix must be positive and strictly ascending");
        }
    }
    const std::uint64_t top = s.back();
    std::vector<std::uint8_t> in(top + 1, 0);
    for (auto x : s) in[x] = 1;

    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const std::uint64_t z = s[i] + s[j];
            if (z > top) break;
            if (in[z]) return SumWitness{s[i], s[j], z};
        }
    }
    for (auto x : s) {
        if (2 * x > top) break;
        if (in[2 * x]) return SumWitness{x, x, 2 * x};
    }
    return std::nullopt;
}

Word theta_inverse(std::span<const std::uint64_t> s, std::uint64_t frontier) {
    auto end = std::upper_bound(s.begin(), s.end(), frontier);
    std::span<const std::uint64_t> prefix(s.begin(), end);
    if (auto w = check_sumfree(prefix)) throw SumFreeViolation(*w);

    std::vector<Mark> v(frontier + 1, Mark::Zero);
    for (auto x : prefix) v[x] = Mark::One;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        for (std::size_t j = i; j < prefix.size(); ++j) {
            const std::uint64_t z = prefix[i] + prefix[j];
            if (z > frontier) break;
            v[z] = Mark::Star;
        }
    }
    std::vector<Letter> out;
    for (std::uint64_t n = 1; n <= frontier; ++n) {
        if (v[n] != Mark::Star) out.push_back(v[n] == Mark::One ? 1 : 0);
    }
    return Word(std::move(out), 2);
}

GapCounters gap_counters(const SumFreeTrace &trace) {
    GapCounters g;
    const auto &s = trace.members;
    if (s.size() < 2) return g;
    g.mu.reserve(s.size() - 1);
    g.alpha.reserve(s.size() - 1);
    g.d.reserve(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        std::uint64_t zeros = 0, stars = 0;
        // v_n lives at offset n-1, so the open interval (s_i, s_{i+1})
        // is offsets [s_i, s_{i+1} - 2].
        for (std::uint64_t off = s[i]; off + 1 < s[i + 1]; ++off) {
            if (trace.v[off] == Mark::Zero) ++zeros;
            else if (trace.v[off] == Mark::Star) ++stars;
        }
        g.mu.push_back(zeros);
        g.alpha.push_back(stars);
        g.d.push_back(s[i + 1] - s[i]);
    }
    return g;
}

} // namespace sfs
