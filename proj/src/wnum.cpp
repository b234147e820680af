#include "sfs/wnum.hpp"

#include "sfs/folding.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace sfs::wnum {

namespace {

void require_k(unsigned k) {
    if (k < 1) throw ParameterError("k must be >= 1");
}

BigInt pow_big(unsigned base, unsigned e) {
    return boost::multiprecision::pow(BigInt(base), e);
}

struct BigTables {
    std::mutex mutex;
    std::map<unsigned, std::vector<BigInt>> tables;
};

BigTables &big_tables() {
    static BigTables t;
    return t;
}

// Extends the table for k until it has an index n_max or a value > bound.
std::vector<BigInt> table_until(unsigned k, unsigned n_max, const BigInt *bound) {
    auto &bt = big_tables();
    std::lock_guard lock(bt.mutex);
    auto &w = bt.tables[k];
    if (w.empty()) w.push_back(0);
    auto need_more = [&] {
        if (w.size() <= n_max) return true;
        return bound != nullptr && w.back() <= *bound;
    };
    while (need_more()) {
        const std::size_t n = w.size() - 1;
        BigInt next = BigInt(k + 1) * w.back() + (n % 2 == 0 ? 1 : -1);
        w.push_back(std::move(next));
    }
    return w;
}

template <class Int>
std::size_t place_of(const std::vector<Int> &w, const Int &n) {
    // Largest t >= 1 with W(t) <= n. W is non-decreasing from index 1.
    auto it = std::upper_bound(w.begin() + 1, w.end(), n);
    return static_cast<std::size_t>(it - w.begin()) - 1;
}

// Requires n >= 1 and w.back() > n.
template <class Int>
WExpansion encode_with(unsigned k, Int n, const std::vector<Int> &w) {
    WExpansion out;
    out.digits.assign(place_of(w, n), 0);
    const std::size_t r = out.digits.size();
    auto put = [&](std::size_t pos, std::uint32_t d) { out.digits[r - pos] = d; };
    while (n != 0) {
        const std::size_t t = place_of(w, n);
        const Int &wt = w[t];
        if (n == wt) {
            put(t, 1);
            break;
        }
        // alpha W(t) < n <= (alpha + 1) W(t)
        const Int alpha = (n + wt - 1) / wt - 1;
        const Int m = n - alpha * wt;
        if (m == wt) {
            // n = (alpha + 1) W(t). With alpha + 1 = k + 1 this only happens
            // for even t and n = W(t+1) - 1 = [k^t].
            if (alpha + 1 <= k) {
                put(t, static_cast<std::uint32_t>(alpha + 1));
            } else {
                for (std::size_t p = 1; p <= t; ++p) put(p, k);
            }
            break;
        }
        put(t, static_cast<std::uint32_t>(alpha));
        n = m;
    }
    return out;
}

std::uint32_t letter_from(const WExpansion &x) {
    return x.trailing_zeros() % 2 == 1 ? 2u : 1u;
}

} // namespace

std::size_t WExpansion::trailing_zeros() const noexcept {
    std::size_t z = 0;
    for (auto it = digits.rbegin(); it != digits.rend() && *it == 0; ++it) ++z;
    return z;
}

std::string WExpansion::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(digits[i]);
    }
    return out;
}

WExpansion WExpansion::parse(std::string_view text) {
    WExpansion out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto field = text.substr(0, comma);
        std::uint32_t d = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), d);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ParameterError("bad digit '" + std::string(field) + "'");
        }
        out.digits.push_back(d);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

BigInt w_value(unsigned k, unsigned n) {
    require_k(k);
    return table_until(k, n, nullptr)[n];
}

std::vector<BigInt> w_values(unsigned k, unsigned n_max) {
    require_k(k);
    auto w = table_until(k, n_max, nullptr);
    w.resize(n_max + 1);
    return w;
}

const std::vector<std::uint64_t> &w_table_u64(unsigned k) {
    require_k(k);
    static std::mutex mutex;
    static std::map<unsigned, std::vector<std::uint64_t>> tables;
    std::lock_guard lock(mutex);
    auto [it, inserted] = tables.try_emplace(k);
    if (inserted) {
        auto &w = it->second;
        w.push_back(0);
        constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
        while (true) {
            const std::size_t n = w.size() - 1;
            const unsigned __int128 next =
                static_cast<unsigned __int128>(k + 1) * w.back() + (n % 2 == 0 ? 1 : 0) -
                (n % 2 == 0 ? 0 : 1);
            if (next > kMax) break;
            w.push_back(static_cast<std::uint64_t>(next));
        }
    }
    return it->second;
}

CheckResult check_w_identities(unsigned k, unsigned n_max) {
    require_k(k);
    const auto w = w_values(k, n_max + 2);
    const BigInt kk = k;
    auto fail = [](unsigned n, const std::string &what) {
        return CheckResult::fail(n, "identity " + what + " fails at n=" + std::to_string(n));
    };
    auto sign = [](unsigned e) { return e % 2 == 0 ? BigInt(1) : BigInt(-1); };

    BigInt partial = 0; // sum_{1 <= l <= n} W(l)
    for (unsigned n = 0; n <= n_max; ++n) {
        if (w[n + 1] != (kk + 1) * w[n] + sign(n)) return fail(n, "(i)");
        if (w[n + 2] != kk * w[n + 1] + (kk + 1) * w[n]) return fail(n, "(ii)");
        if (w[n + 1] + w[n] != pow_big(k + 1, n)) return fail(n, "(iii)");
        if (n >= 1) {
            partial += w[n];
            const BigInt want = n % 2 == 1 ? w[n + 1] : w[n + 1] - 1;
            if (kk * partial != want) return fail(n, "(iv)");
        }
        BigInt alt = 0;
        for (unsigned j = 1; j <= n; ++j) alt += sign(j + 1) * pow_big(k + 1, n - j);
        if (w[n] != alt) return fail(n, "(v)");
        if (n >= 1) {
            BigInt inner = 0;
            for (unsigned j = 1; 2 * j <= n - 1; ++j) inner += pow_big(k + 1, n - 2 * j - 1);
            BigInt closed = pow_big(k + 1, n - 1) - kk * inner;
            if (n % 2 == 0) closed -= 1;
            if (w[n] != closed) return fail(n, "(vi)");
        }
    }

    // (vii): |tau^n(1)| = W(n+1).
    constexpr std::size_t kDirectLimit = std::size_t{1} << 24;
    const folding::FoldingFamily fam(k);
    Word word({1}, 3);
    bool direct = true;
    BigInt len1 = 1, len2 = 1; // |tau^n(1)|, |tau^n(2)|
    for (unsigned n = 0; n <= n_max; ++n) {
        if (direct && n <= 12) {
            if (BigInt(word.size()) != w[n + 1]) return fail(n, "(vii)");
        }
        if (len1 != w[n + 1]) return fail(n, "(vii) lengths");
        BigInt next1 = BigInt(k - 1) * len1 + len2;
        BigInt next2 = BigInt(2 * k) * len1 + len2;
        len1 = std::move(next1);
        len2 = std::move(next2);
        if (direct && n < 12 && len1 <= kDirectLimit) {
            word = apply_morphism(fam.tau, word);
        } else {
            direct = false;
        }
    }
    return CheckResult::pass();
}

WExpansion encode(unsigned k, const BigInt &n) {
    require_k(k);
    if (n <= 0) throw ParameterError("encode needs n >= 1");
    const auto &small = w_table_u64(k);
    if (n < small.back()) return encode_with<std::uint64_t>(k, static_cast<std::uint64_t>(n), small);
    return encode_with<BigInt>(k, n, table_until(k, 0, &n));
}

WExpansion encode(unsigned k, std::uint64_t n) {
    require_k(k);
    if (n == 0) throw ParameterError("encode needs n >= 1");
    const auto &small = w_table_u64(k);
    if (n < small.back()) return encode_with<std::uint64_t>(k, n, small);
    return encode(k, BigInt(n));
}

BigInt decode(unsigned k, const WExpansion &x) {
    require_k(k);
    const auto w = w_values(k, static_cast<unsigned>(x.size()));
    BigInt value = 0;
    const std::size_t r = x.size();
    for (std::size_t i = 0; i < r; ++i) {
        const std::uint32_t d = x.digits[i];
        if (d > k) {
            throw ParameterError("digit " + std::to_string(d) + " exceeds k=" + std::to_string(k));
        }
        if (d) value += BigInt(d) * w[r - i];
    }
    return value;
}

bool is_valid(unsigned k, const WExpansion &x) {
    if (x.digits.empty() || x.digits.front() == 0) return false;
    for (auto d : x.digits) {
        if (d > k) return false;
    }
    std::size_t run = 0;
    for (auto it = x.digits.rbegin(); it != x.digits.rend() && *it == k; ++it) ++run;
    return run % 2 == 0;
}

BigInt count_valid(unsigned k, unsigned r) {
    require_k(k);
    if (r < 1) throw ParameterError("count_valid needs r >= 1");
    // Words ending in an even / odd run of k's.
    BigInt even = k - 1, odd = 1;
    for (unsigned i = 1; i < r; ++i) {
        BigInt next_even = BigInt(k) * (even + odd) + odd;
        odd = std::move(even);
        even = std::move(next_even);
    }
    return even;
}

namespace {

// Enumerates every word of length r whose top `fixed` digits are given by
// `block` (mixed radix, leading digit in [1, k]) and reports each valid
// value to `visit`.
template <class Visit>
void enumerate_block(unsigned k, unsigned r, unsigned fixed, std::uint64_t block,
                     const std::vector<std::uint64_t> &w, Visit &&visit) {
    std::vector<std::uint32_t> x(r, 0); // x[i] = x_{i+1}
    std::uint64_t value = 0;
    for (unsigned p = r; p > r - fixed; --p) {
        std::uint32_t d;
        if (p == r) {
            d = static_cast<std::uint32_t>(block % k) + 1;
            block /= k;
        } else {
            d = static_cast<std::uint32_t>(block % (k + 1));
            block /= (k + 1);
        }
        x[p - 1] = d;
        value += d * w[p];
    }
    const unsigned free = r - fixed;
    while (true) {
        unsigned run = 0;
        while (run < r && x[run] == k) ++run;
        if (run % 2 == 0) visit(value);

        unsigned i = 0;
        while (i < free && x[i] == k) {
            value -= static_cast<std::uint64_t>(k) * w[i + 1];
            x[i] = 0;
            ++i;
        }
        if (i == free) break;
        ++x[i];
        value += w[i + 1];
    }
}

struct EnumerationPlan {
    unsigned fixed;
    std::uint64_t blocks;
    std::uint64_t lo, hi; // [W(r), W(r+1))
};

EnumerationPlan plan_enumeration(unsigned k, unsigned r, const std::vector<std::uint64_t> &w) {
    require_k(k);
    if (r < 1) throw ParameterError("enumeration needs r >= 1");
    if (r + 1 >= w.size()) throw ParameterError("W(r+1) does not fit in 64 bits");
    EnumerationPlan plan{1, k, w[r], w[r + 1]};
    while (plan.fixed < r && plan.blocks < 256) {
        ++plan.fixed;
        plan.blocks *= (k + 1);
    }
    return plan;
}

} // namespace

EnumerationReport enumerate_valid(unsigned k, unsigned r) {
    const auto &w = w_table_u64(k);
    const auto plan = plan_enumeration(k, r, w);
    const std::uint64_t range = plan.hi - plan.lo;
    const std::size_t words = static_cast<std::size_t>(range / 64 + 1);
    auto seen = std::make_unique<std::atomic<std::uint64_t>[]>(words);
    for (std::size_t i = 0; i < words; ++i) seen[i].store(0, std::memory_order_relaxed);

    std::uint64_t valid = 0, distinct = 0, out_of_range = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : valid, distinct, out_of_range)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(plan.blocks); ++b) {
        enumerate_block(k, r, plan.fixed, static_cast<std::uint64_t>(b), w,
                        [&](std::uint64_t v) {
                            ++valid;
                            if (v < plan.lo || v >= plan.hi) {
                                ++out_of_range;
                                return;
                            }
                            const std::uint64_t idx = v - plan.lo;
                            const std::uint64_t bit = std::uint64_t{1} << (idx % 64);
                            const auto prev = seen[idx / 64].fetch_or(bit, std::memory_order_relaxed);
                            if (!(prev & bit)) ++distinct;
                        });
    }
    return {valid, distinct, out_of_range};
}

EnumerationReport enumerate_valid_serial(unsigned k, unsigned r) {
    const auto &w = w_table_u64(k);
    const auto plan = plan_enumeration(k, r, w);
    std::vector<bool> seen(plan.hi - plan.lo, false);
    EnumerationReport rep;
    for (std::uint64_t b = 0; b < plan.blocks; ++b) {
        enumerate_block(k, r, plan.fixed, b, w, [&](std::uint64_t v) {
            ++rep.valid;
            if (v < plan.lo || v >= plan.hi) {
                ++rep.out_of_range;
                return;
            }
            if (!seen[v - plan.lo]) {
                seen[v - plan.lo] = true;
                ++rep.distinct;
            }
        });
    }
    return rep;
}

std::uint32_t t_via_numeration(unsigned k, std::uint64_t n) {
    if (n == std::numeric_limits<std::uint64_t>::max()) {
        return t_via_numeration(k, BigInt(n));
    }
    return letter_from(encode(k, n + 1));
}

std::uint32_t t_via_numeration(unsigned k, const BigInt &n) {
    if (n < 0) throw ParameterError("t_k needs n >= 0");
    return letter_from(encode(k, BigInt(n + 1)));
}

Word t_prefix_numeration(unsigned k, std::size_t N) {
    require_k(k);
    w_table_u64(k); // build outside the parallel region
    std::vector<Letter> out(N);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(N); ++i) {
        out[static_cast<std::size_t>(i)] = t_via_numeration(k, static_cast<std::uint64_t>(i));
    }
    return Word(std::move(out), 3);
}

BigInt b_value(unsigned k, unsigned l, unsigned n) {
    if (l < 1) throw ParameterError("b_k(l, n) needs l >= 1");
    WExpansion x;
    for (unsigned i = 0; i < n; ++i) {
        x.digits.push_back(1);
        x.digits.insert(x.digits.end(), 2 * l - 1, 0);
    }
    return decode(k, x);
}

BigInt b_value_closed_form(unsigned k, unsigned l, unsigned n) {
    require_k(k);
    if (l < 1) throw ParameterError("b_k(l, n) needs l >= 1");
    const BigInt p = pow_big(k + 1, 2 * l);
    const BigInt geometric = (boost::multiprecision::pow(p, n + 1) - p) / (p - 1);
    const BigInt numer = geometric - n;
    if (numer % (k + 2) != 0) throw std::logic_error("closed form of b is not integral");
    return numer / (k + 2);
}

BigInt c_value(unsigned k, unsigned l, unsigned r, unsigned n) {
    if (r < 1) throw ParameterError("c_k(l, r, n) needs r >= 1");
    if (n < r + 2) throw ParameterError("c_k(l, r, n) needs n >= r + 2");
    return b_value(k, l, n) - b_value(k, l, r) - BigInt(k + 1) * w_value(k, 2 * l);
}

CheckResult check_construction(unsigned k, unsigned l, unsigned r, unsigned n) {
    require_k(k);
    if (l < 1 || r < 1) throw ParameterError("construction check needs l, r >= 1");
    const BigInt p = pow_big(k + 1, 2 * l);
    const BigInt step = (p - 1) / (k + 2);
    auto fail = [&](unsigned m, const std::string &clause) {
        return CheckResult::fail(m, "clause " + clause + " fails for k=" + std::to_string(k) +
                                        " l=" + std::to_string(l) + " r=" + std::to_string(r) +
                                        " n=" + std::to_string(m));
    };

    BigInt previous = 0;
    for (unsigned m = 1; m <= n; ++m) {
        const BigInt b = b_value(k, l, m);
        if (b != b_value_closed_form(k, l, m)) return fail(m, "b routes");
        if (b != p * previous + BigInt(m) * step) return fail(m, "(i)");
        if (b % step != 0) return fail(m, "(ii)");
        if (t_via_numeration(k, BigInt(b - 1)) != 2) return fail(m, "(iii)");
        previous = b;

        if (m < r + 2) continue;
        const BigInt c = c_value(k, l, r, m);
        if (t_via_numeration(k, BigInt(c - 1)) != 1) return fail(m, "(iv)");
        WExpansion want;
        for (unsigned i = 0; i < m - r - 1; ++i) {
            want.digits.push_back(1);
            want.digits.insert(want.digits.end(), 2 * l - 1, 0);
        }
        want.digits.push_back(0);
        want.digits.insert(want.digits.end(), 2 * l * r - 1, k);
        want.digits.insert(want.digits.end(), 2 * l, 0);
        const WExpansion got = encode(k, c);
        if (got != want) return fail(m, "(iv) expansion");
        const auto zeros = got.trailing_zeros();
        if (zeros == 0 || zeros % 2 != 0) return fail(m, "(iv) trailing zeros");
    }
    return CheckResult::pass();
}

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base) {
            throw ParameterError("kernel modulus overflows 64 bits");
        }
        out *= base;
    }
    return out;
}

std::vector<std::uint8_t> kernel_letters(unsigned k, std::uint64_t mult, std::uint64_t b,
                                         std::size_t N) {
    std::vector<std::uint8_t> out(N);
    for (std::size_t n = 0; n < N; ++n) {
        out[n] = static_cast<std::uint8_t>(t_via_numeration(k, mult * n + b));
    }
    return out;
}

struct KernelElement {
    std::uint64_t mult, b;
};

std::vector<KernelElement> kernel_elements(unsigned k, unsigned max_a) {
    std::vector<KernelElement> out;
    for (unsigned a = 0; a <= max_a; ++a) {
        const std::uint64_t mult = checked_power(k + 1, a);
        for (std::uint64_t b = 0; b < mult; ++b) out.push_back({mult, b});
    }
    return out;
}

} // namespace

Word kernel_subsequence(unsigned k, const KernelSpec &spec, std::size_t N) {
    require_k(k);
    if (spec.kappa < 2) throw ParameterError("kernel base must be >= 2");
    const std::uint64_t mult = checked_power(spec.kappa, spec.a);
    if (spec.b >= mult) throw ParameterError("kernel residue must be < kappa^a");
    w_table_u64(k);
    std::vector<Letter> out(N);
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(N); ++n) {
        out[static_cast<std::size_t>(n)] =
            t_via_numeration(k, mult * static_cast<std::uint64_t>(n) + spec.b);
    }
    return Word(std::move(out), 3);
}

std::size_t kernel_evidence(unsigned k, unsigned max_a, std::size_t N) {
    require_k(k);
    w_table_u64(k);
    const auto elements = kernel_elements(k, max_a);
    std::vector<std::vector<std::uint8_t>> seqs(elements.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(elements.size()); ++i) {
        const auto &e = elements[static_cast<std::size_t>(i)];
        seqs[static_cast<std::size_t>(i)] = kernel_letters(k, e.mult, e.b, N);
    }
    std::sort(seqs.begin(), seqs.end());
    return static_cast<std::size_t>(std::unique(seqs.begin(), seqs.end()) - seqs.begin());
}

std::size_t kernel_evidence_serial(unsigned k, unsigned max_a, std::size_t N) {
    require_k(k);
    std::set<std::vector<std::uint8_t>> distinct;
    for (const auto &e : kernel_elements(k, max_a)) {
        distinct.insert(kernel_letters(k, e.mult, e.b, N));
    }
    return distinct.size();
}

CheckResult check_kernel_distinct(unsigned k, unsigned c_max, std::size_t N) {
    require_k(k);
    std::vector<Word> seqs;
    for (unsigned c = 0; c <= c_max; ++c) {
        const std::uint64_t mult = checked_power(k + 1, 2 * c);
        seqs.push_back(kernel_subsequence(k, {k + 1, 2 * c, mult - 1}, N));
    }
    for (unsigned c = 0; c <= c_max; ++c) {
        for (unsigned c2 = c + 1; c2 <= c_max; ++c2) {
            if (seqs[c] == seqs[c2]) {
                return CheckResult::fail(c * 100 + c2,
                                         "kernel elements c=" + std::to_string(c) + " and c=" +
                                             std::to_string(c2) + " agree on " +
                                             std::to_string(N) + " terms");
            }
        }
    }
    return CheckResult::pass();
}

} // namespace sfs::wnum
