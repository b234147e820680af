#include "sfs/sturmian.hpp"

#include "sfs/complexity.hpp"
#include "sfs/sumfree.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace sfs::sturmian {

namespace {

BigInt parse_big(std::string_view field) {
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::string_view digits = field;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParameterError("bad integer '" + std::string(field) + "'");
    }
    if (field.front() == '+') field.remove_prefix(1);
    return BigInt(std::string(field));
}

bool is_square(const BigInt &n) {
    if (n < 0) return false;
    const BigInt s = isqrt(n);
    return s * s == n;
}

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt &a, const BigInt &b) {
    BigInt q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

// floor(q sqrt(D)).
BigInt floor_q_sqrt(const BigInt &q, const BigInt &D) {
    if (q == 0 || D == 0) return 0;
    const BigInt sq = q * q * D;
    const BigInt s = isqrt(sq);
    if (q > 0) return s;
    return s * s == sq ? BigInt(-s) : BigInt(-s - 1);
}

} // namespace

BigInt isqrt(const BigInt &n) {
    if (n < 0) throw ParameterError("isqrt of a negative number");
    return boost::multiprecision::sqrt(n);
}

QuadSurd::QuadSurd(BigInt p_, BigInt q_, BigInt r_, BigInt D_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)), D(std::move(D_)) {
    if (r == 0) throw ParameterError("surd denominator is 0");
    if (D < 0) throw ParameterError("surd radicand is negative");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    if (q == 0 || D == 0) {
        q = 0;
        D = 0;
    } else if (is_square(D)) {
        // sqrt(D) is an integer: fold it into p.
        p += q * isqrt(D);
        q = 0;
        D = 0;
    }
}

QuadSurd QuadSurd::parse(std::string_view text) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = text.find(',');
        fields.push_back(text.substr(0, comma));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (fields.size() == 2) return rational(parse_big(fields[0]), parse_big(fields[1]));
    if (fields.size() != 4) {
        throw ParameterError("expected \"p,q,r,D\" or \"p,r\", got '" + std::string(text) + "'");
    }
    return {parse_big(fields[0]), parse_big(fields[1]), parse_big(fields[2]), parse_big(fields[3])};
}

std::string QuadSurd::to_string() const {
    std::ostringstream os;
    os << p << ',' << q << ',' << r << ',' << D;
    return os.str();
}

bool QuadSurd::is_rational() const { return q == 0; }

BigInt QuadSurd::floor() const { return floor_div(p + floor_q_sqrt(q, D), r); }

double QuadSurd::approx() const {
    return (p.convert_to<double>() + q.convert_to<double>() * std::sqrt(D.convert_to<double>())) /
           r.convert_to<double>();
}

QuadSurd add(const QuadSurd &x, const QuadSurd &y) {
    if (!x.is_rational() && !y.is_rational() && x.D != y.D) {
        throw ParameterError("cannot add surds with different radicands");
    }
    const BigInt D = x.is_rational() ? y.D : x.D;
    return {x.p * y.r + y.p * x.r, x.q * y.r + y.q * x.r, x.r * y.r, D};
}

QuadSurd scale(const QuadSurd &x, const BigInt &n) { return {x.p * n, x.q * n, x.r, x.D}; }

void SlopeSpec::validate() const {
    if (alpha.is_rational()) throw ParameterError("slope must be irrational");
    if (alpha.floor() != 0) throw ParameterError("slope must lie in (0, 1)");
    if (!rho.is_rational() && rho.D != alpha.D) {
        throw ParameterError("intercept must be rational or share the slope's radicand");
    }
}

std::string SlopeSpec::to_string() const { return alpha.to_string() + ";" + rho.to_string(); }

MorphicStream mechanical_stream(const SlopeSpec &spec) {
    spec.validate();
    // n alpha + rho = (n A + B + (n C + E) sqrt(D)) / R over a common R.
    const QuadSurd a = spec.alpha, b = spec.rho;
    const BigInt R = a.r * b.r;
    const BigInt A = a.p * b.r, B = b.p * a.r, C = a.q * b.r, E = b.q * a.r;
    const BigInt D = a.D;
    auto floor_at = [=](std::uint64_t n) {
        const BigInt nn = n;
        return floor_div(nn * A + B + floor_q_sqrt(nn * C + E, D), R);
    };
    return MorphicStream::from_generator(
        [floor_at](std::uint64_t n) {
            return static_cast<Letter>(floor_at(n + 1) - floor_at(n));
        },
        2);
}

CheckResult require_11_no_00(std::span<const Letter> w) {
    if (w.size() >= 1 && w[0] != 1) return CheckResult::fail(0, "t_0 is not 1");
    if (w.size() >= 2 && w[1] != 1) return CheckResult::fail(1, "t_1 is not 1");
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == 0 && w[i + 1] == 0) {
            return CheckResult::fail(i, "factor 00 at index " + std::to_string(i));
        }
    }
    return CheckResult::pass();
}

CheckResult require_11_no_00(const MorphicStream &s, std::uint64_t N) {
    return require_11_no_00(s.prefix(N).view());
}

SlopeSpec find_intercept(const QuadSurd &alpha, std::uint64_t check_len) {
    const QuadSurd nudge(alpha.p, alpha.q, alpha.r * 4096, alpha.D);
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < 64; ++j) {
            QuadSurd rho = QuadSurd::rational(j, 64);
            if (pass == 1) rho = add(rho, nudge);
            SlopeSpec spec{alpha, rho};
            spec.validate();
            if (require_11_no_00(mechanical_stream(spec), check_len).passed()) return spec;
        }
    }
    throw LimitError("no intercept gives a word starting with 11 and avoiding 00");
}

namespace {

void require_hypothesis(const MorphicStream &s, std::uint64_t letters) {
    const auto r = require_11_no_00(s, std::max<std::uint64_t>(letters, 2));
    if (!r.passed()) throw HypothesisError("stream violates the 11 / no-00 hypothesis: " + r.detail);
}

} // namespace

CheckResult check_star_parity(const MorphicStream &s, std::uint64_t N) {
    const auto trace = theta_forward(s, N);
    require_hypothesis(s, trace.consumed + 1);
    for (std::uint64_t n = 1; n <= trace.frontier(); ++n) {
        const bool star = trace.v_at(n) == Mark::Star;
        if (star != (n % 2 == 0)) {
            return CheckResult::fail(n, "v_" + std::to_string(n) + (star ? " is" : " is not") +
                                            " a star");
        }
    }
    for (auto x : trace.members) {
        if (x % 2 == 0) return CheckResult::fail(x, "member " + std::to_string(x) + " is even");
    }
    return CheckResult::pass();
}

CheckResult check_star_parity(const SlopeSpec &spec, std::uint64_t N) {
    return check_star_parity(mechanical_stream(spec), N);
}

CheckResult check_theorem_D(const MorphicStream &s, std::uint64_t N, unsigned n_max) {
    const auto trace = theta_members(s, N + 1);
    require_hypothesis(s, trace.consumed + 1);
    const auto g = gap_counters(trace);
    if (g.mu.size() < N) return CheckResult::fail(g.mu.size() + 1, "too few gaps");

    auto fail = [](std::uint64_t n, char clause, const std::string &what) {
        return CheckResult::fail(n, std::string("clause (") + clause + ") at n=" +
                                        std::to_string(n) + ": " + what);
    };
    for (std::uint64_t i = 0; i < N; ++i) {
        if (g.mu[i] > 1) return fail(i + 1, 'a', "mu = " + std::to_string(g.mu[i]));
    }

    std::vector<Letter> phi;
    for (std::uint64_t i = 0; i < N; ++i) {
        phi.push_back(1);
        if (g.mu[i] == 1) phi.push_back(0);
    }
    const Word t = s.prefix(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] != t[i]) return fail(i, 'b', "phi(mu) differs from t at letter " + std::to_string(i));
    }

    std::vector<Letter> relabelled;
    for (std::uint64_t i = 0; i < N; ++i) {
        if (g.alpha[i] != g.mu[i] + 1) return fail(i + 1, 'c', "alpha = " + std::to_string(g.alpha[i]));
        if (g.d[i] != 2 * (g.mu[i] + 1)) return fail(i + 1, 'd', "d = " + std::to_string(g.d[i]));
        relabelled.push_back(g.d[i] == 4 ? 1 : 0);
    }

    const auto f = complexity::factor_counts(relabelled, n_max, 2);
    for (unsigned n = 1; n <= n_max; ++n) {
        if (f[n - 1] != n + 1) {
            return fail(n, 'e', std::to_string(f[n - 1]) + " factors of length " + std::to_string(n));
        }
    }
    return CheckResult::pass();
}

CheckResult check_theorem_D(const SlopeSpec &spec, std::uint64_t N, unsigned n_max) {
    return check_theorem_D(mechanical_stream(spec), N, n_max);
}

} // namespace sfs::sturmian
