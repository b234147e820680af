#include "sfs/complexity.hpp"

#include "sfs/folding.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sfs::complexity {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Open-addressing map from 64-bit keys to dense ids 0, 1, 2, ... in order
// of first insertion.
class KeyIds {
public:
    explicit KeyIds(std::size_t expected = 64) {
        std::size_t cap = 16;
        while (cap < 2 * expected) cap *= 2;
        keys_.assign(cap, 0);
        ids_.assign(cap, kEmpty);
    }

    std::uint32_t insert(std::uint64_t key) {
        if (2 * (size_ + 1) > keys_.size()) grow();
        return insert_slot(key, static_cast<std::uint32_t>(size_));
    }

    std::size_t size() const noexcept { return size_; }

private:
    static constexpr std::uint32_t kEmpty = 0xffffffffu;

    std::uint32_t insert_slot(std::uint64_t key, std::uint32_t fresh) {
        const std::size_t mask = keys_.size() - 1;
        std::size_t i = mix(key) & mask;
        while (ids_[i] != kEmpty) {
            if (keys_[i] == key) return ids_[i];
            i = (i + 1) & mask;
        }
        keys_[i] = key;
        ids_[i] = fresh;
        ++size_;
        return fresh;
    }

    void grow() {
        std::vector<std::uint64_t> keys(keys_.size() * 2, 0);
        std::vector<std::uint32_t> ids(keys_.size() * 2, kEmpty);
        keys.swap(keys_);
        ids.swap(ids_);
        size_ = 0;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (ids[i] != kEmpty) insert_slot(keys[i], ids[i]);
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> ids_;
    std::size_t size_ = 0;
};

unsigned letter_bits(Letter alphabet_size) {
    return alphabet_size <= 1 ? 1u : static_cast<unsigned>(std::bit_width(alphabet_size - 1));
}

std::uint64_t count_packed(std::span<const Letter> w, unsigned n, unsigned bits) {
    const std::uint64_t mask = n * bits >= 64 ? ~std::uint64_t{0}
                                              : (std::uint64_t{1} << (n * bits)) - 1;
    KeyIds seen;
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        key = ((key << bits) | w[i]) & mask;
        if (i + 1 >= n) seen.insert(key);
    }
    return seen.size();
}

// Class ids of all windows of length 2^j, j = 0..levels-1.
std::vector<std::vector<std::uint32_t>> window_classes(std::span<const Letter> w,
                                                       unsigned levels) {
    std::vector<std::vector<std::uint32_t>> c;
    c.emplace_back(w.begin(), w.end());
    for (unsigned j = 1; j < levels; ++j) {
        const std::size_t half = std::size_t{1} << (j - 1);
        const auto &prev = c.back();
        if (prev.size() <= half) break;
        std::vector<std::uint32_t> next(prev.size() - half);
        KeyIds ids;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] = ids.insert((std::uint64_t{prev[i]} << 32) | prev[i + half]);
        }
        c.push_back(std::move(next));
    }
    return c;
}

} // namespace

std::vector<std::uint64_t> factor_counts(std::span<const Letter> w, unsigned n_max,
                                         Letter alphabet_size) {
    std::vector<std::uint64_t> f(n_max, 0);
    if (w.empty() || n_max == 0) return f;
    const unsigned bits = letter_bits(alphabet_size);
    const unsigned packed_max = 64 / bits;

    std::vector<std::vector<std::uint32_t>> classes;
    if (n_max > packed_max) {
        classes = window_classes(w, static_cast<unsigned>(std::bit_width(n_max)));
    }

#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= static_cast<int>(n_max); ++n) {
        if (static_cast<std::size_t>(n) > w.size()) continue;
        if (static_cast<unsigned>(n) <= packed_max) {
            f[n - 1] = count_packed(w, n, bits);
            continue;
        }
        // A factor of length n is determined by its first and last windows of
        // length P = 2^j <= n, which together cover it.
        const unsigned j = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(n))) - 1;
        const std::size_t P = std::size_t{1} << j;
        const auto &c = classes[j];
        KeyIds seen;
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
            seen.insert((std::uint64_t{c[i]} << 32) | c[i + n - P]);
        }
        f[n - 1] = seen.size();
    }
    return f;
}

std::vector<std::uint64_t> factor_counts_serial(std::span<const Letter> w, unsigned n_max) {
    auto less = [](std::span<const Letter> a, std::span<const Letter> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::vector<std::uint64_t> f(n_max, 0);
    for (unsigned n = 1; n <= n_max && n <= w.size(); ++n) {
        std::set<std::span<const Letter>, decltype(less)> seen(less);
        for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(w.subspan(i, n));
        f[n - 1] = seen.size();
    }
    return f;
}

bool ComplexityProfile::all_stabilized() const {
    return std::all_of(stabilized.begin(), stabilized.end(), [](bool b) { return b; });
}

std::size_t ComplexityProfile::stable_count() const {
    return static_cast<std::size_t>(std::find(stabilized.begin(), stabilized.end(), false) -
                                    stabilized.begin());
}

ComplexityProfile subword_complexity(const MorphicStream &s, unsigned n_max,
                                     std::uint64_t initial_prefix, std::uint64_t cap) {
    if (n_max < 1) throw ParameterError("n_max must be >= 1");
    std::uint64_t len = std::max<std::uint64_t>({initial_prefix, 2 * std::uint64_t{n_max}, 1});
    if (len > cap) throw ParameterError("initial prefix exceeds the cap");

    std::vector<std::vector<std::uint64_t>> history;
    ComplexityProfile p;
    while (true) {
        const Word w = s.prefix(len);
        history.push_back(factor_counts(w.view(), n_max, s.alphabet_size()));
        p.prefix_len = len;
        if (history.size() >= 3) {
            const auto &a = history[history.size() - 3];
            const auto &b = history[history.size() - 2];
            const auto &c = history.back();
            if (a == b && b == c) break;
        }
        if (2 * len > cap) break;
        len *= 2;
    }

    p.f = history.back();
    p.stabilized.assign(n_max, false);
    if (history.size() >= 3) {
        const auto &a = history[history.size() - 3];
        const auto &b = history[history.size() - 2];
        for (unsigned n = 0; n < n_max; ++n) {
            p.stabilized[n] = a[n] == p.f[n] && b[n] == p.f[n];
        }
    }
    for (unsigned n = 1; n < n_max; ++n) {
        p.d.push_back(static_cast<std::int64_t>(p.f[n]) - static_cast<std::int64_t>(p.f[n - 1]));
    }
    return p;
}

RunLengths run_lengths(std::span<const std::int64_t> d) {
    RunLengths out;
    if (d.empty()) return out;
    out.a.push_back(0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] != 1 && d[i] != 2) {
            out.violation = i + 1;
            break;
        }
        // Odd-numbered runs (a_1, a_3, ...) are runs of 1's.
        const std::int64_t current = out.a.size() % 2 == 1 ? 1 : 2;
        if (d[i] == current) {
            ++out.a.back();
        } else {
            out.a.push_back(1);
        }
    }
    return out;
}

RunLengths run_lengths(const ComplexityProfile &p) {
    const std::size_t stable = p.stable_count();
    const std::size_t usable = stable == 0 ? 0 : std::min(p.d.size(), stable - 1);
    return run_lengths(std::span<const std::int64_t>(p.d.data(), usable));
}

std::vector<std::int64_t> conjectured_runs(unsigned k, std::size_t m) {
    std::vector<std::int64_t> a;
    const std::int64_t kk = k;
    for (std::size_t i = 1; i <= m; ++i) {
        if (i == 1) {
            a.push_back(kk - 1);
        } else if (i == 2) {
            a.push_back(kk);
        } else if (i % 2 == 0) {
            a.push_back(a[i - 2] + a[i - 3]);
        } else {
            const std::size_t n = (i - 1) / 2;
            a.push_back(kk * a[i - 2] + (n % 2 == 0 ? kk : -kk));
        }
    }
    return a;
}

ConjectureReport check_conjecture(unsigned k, std::size_t m, std::uint64_t cap) {
    if (m < 2) throw ParameterError("m must be >= 2");
    ConjectureReport rep;
    rep.expected = conjectured_runs(k, m);
    const MorphicStream stream = folding::tau_stream(k);

    unsigned n_max = 32;
    while (true) {
        if (2 * std::uint64_t{n_max} > cap) {
            rep.status = Status::Unstable;
            rep.detail = "prefix cap " + std::to_string(cap) + " is below 2 n_max";
            return rep;
        }
        const std::uint64_t initial = std::min<std::uint64_t>(std::max<std::uint64_t>(4096, 16 * n_max), cap);
        rep.profile = subword_complexity(stream, n_max, initial, cap);
        rep.runs = run_lengths(rep.profile);
        const auto &a = rep.runs.a;

        const std::size_t closed = std::min(rep.runs.closed(), m);
        for (std::size_t i = 0; i < closed; ++i) {
            if (static_cast<std::int64_t>(a[i]) != rep.expected[i]) {
                rep.status = Status::Fail;
                rep.fail_index = i + 1;
                rep.detail = "a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) +
                             ", conjecture gives " + std::to_string(rep.expected[i]);
                return rep;
            }
        }
        if (rep.runs.closed() >= m) {
            rep.status = Status::Pass;
            return rep;
        }
        if (rep.runs.violation) {
            rep.status = Status::Fail;
            rep.fail_index = a.size();
            rep.detail = "d_" + std::to_string(*rep.runs.violation) + " is not 1 or 2";
            return rep;
        }
        if (!a.empty() && static_cast<std::int64_t>(a.back()) > rep.expected[a.size() - 1]) {
            rep.status = Status::Fail;
            rep.fail_index = a.size();
            rep.detail = "a_" + std::to_string(a.size()) + " >= " + std::to_string(a.back()) +
                         ", conjecture gives " + std::to_string(rep.expected[a.size() - 1]);
            return rep;
        }
        if (!rep.profile.all_stabilized()) {
            rep.status = Status::Unstable;
            rep.detail = "prefix cap reached with " + std::to_string(rep.runs.closed()) +
                         " closed runs";
            return rep;
        }
        n_max *= 2;
    }
}

} // namespace sfs::complexity
