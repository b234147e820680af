#include "gen.hpp"

#include "sfs/complexity.hpp"
#include "sfs/sturmian.hpp"
#include "sfs/sumfree.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <doctest.h>

using namespace sfs;
using namespace sfs::sturmian;

namespace {

using Dec = boost::multiprecision::cpp_dec_float_100;

Dec to_dec(const QuadSurd &x) {
    return (Dec(x.p) + Dec(x.q) * boost::multiprecision::sqrt(Dec(x.D))) / Dec(x.r);
}

// floor(n alpha + rho) in 100-digit arithmetic; refuses values within
// 1e-60 of an integer, where the sandwich would not be certified.
std::int64_t decimal_floor(const Dec &alpha, const Dec &rho, std::uint64_t n) {
    const Dec v = Dec(n) * alpha + rho;
    const Dec f = boost::multiprecision::floor(v);
    const Dec gap = v - f;
    REQUIRE((gap > Dec("1e-60") && gap < 1 - Dec("1e-60")));
    return f.convert_to<std::int64_t>();
}

const QuadSurd kGolden = QuadSurd::parse("-1,1,2,5");

} // namespace

TEST_CASE("surd parsing and floors") {
    CHECK(kGolden.floor() == 0);
    CHECK(QuadSurd::parse("1,1,1,2").floor() == 2);
    CHECK(QuadSurd::parse("0,-1,1,2").floor() == -2);
    CHECK(QuadSurd::parse("-7,0,2,0").floor() == -4);
    CHECK(QuadSurd::parse("3,4").is_rational());
    CHECK(QuadSurd::parse("1,1,1,4") == QuadSurd::rational(3));
    CHECK(QuadSurd::parse("-1,1,-2,5") == QuadSurd(1, -1, 2, 5));
    CHECK_THROWS_AS(QuadSurd::parse("1,2,3"), ParameterError);
    CHECK_THROWS_AS(QuadSurd::parse("1,1,0,5"), ParameterError);
    CHECK_THROWS_AS(QuadSurd::parse("a,1,1,5"), ParameterError);
    CHECK(kGolden.to_string() == "-1,1,2,5");
}

TEST_CASE("property: surd floor agrees with a decimal sandwich") {
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t p = static_cast<std::int64_t>(testgen::uniform(0, 2000)) - 1000;
        const std::int64_t q = static_cast<std::int64_t>(testgen::uniform(0, 2000)) - 1000;
        const std::int64_t r = static_cast<std::int64_t>(testgen::uniform(1, 500));
        const std::int64_t D = static_cast<std::int64_t>(testgen::uniform(2, 999));
        const QuadSurd x(p, q, r, D);
        const Dec v = to_dec(x);
        const Dec f = boost::multiprecision::floor(v);
        if (v - f < Dec("1e-60")) continue; // exact integers are checked separately
        CHECK(x.floor() == BigInt(f.convert_to<std::int64_t>()));
    }
}

TEST_CASE("mechanical words match the decimal oracle") {
    for (const char *a : {"-1,1,2,5", "2,-1,1,2", "-1,1,1,3", "-2,1,1,7", "0,1,3,2"}) {
        const QuadSurd alpha = QuadSurd::parse(a);
        for (const auto &rho : {QuadSurd::rational(0), QuadSurd::rational(17, 64),
                                add(QuadSurd::rational(3, 64), QuadSurd(alpha.p, alpha.q, alpha.r * 4096, alpha.D))}) {
            const SlopeSpec spec{alpha, rho};
            const Word t = mechanical_stream(spec).prefix(3000);
            const Dec da = to_dec(alpha), dr = to_dec(rho);
            // floor(rho) is exact for a rational intercept.
            std::int64_t prev = rho.floor().convert_to<std::int64_t>();
            for (std::uint64_t n = 0; n < 3000; ++n) {
                const std::int64_t next = decimal_floor(da, dr, n + 1);
                CHECK(t[n] == next - prev);
                prev = next;
            }
        }
    }
}

TEST_CASE("golden slope with zero intercept") {
    const Word t = mechanical_stream({kGolden, QuadSurd::rational(0)}).prefix(6);
    CHECK(to_symbols(t) == "010110");
    CHECK(to_symbols(t.slice(1, 5)) == "10110");
}

TEST_CASE("slope validation") {
    CHECK_THROWS_AS(mechanical_stream({QuadSurd::rational(1, 2), QuadSurd::rational(0)}), ParameterError);
    CHECK_THROWS_AS(mechanical_stream({QuadSurd::parse("1,1,1,2"), QuadSurd::rational(0)}), ParameterError);
    CHECK_THROWS_AS(mechanical_stream({kGolden, QuadSurd::parse("0,1,9,2")}), ParameterError);
    CHECK_NOTHROW(mechanical_stream({kGolden, QuadSurd::parse("0,1,9,5")}));
}

TEST_CASE("property: the frequency of ones approaches the slope") {
    for (const char *a : {"-1,1,2,5", "2,-1,1,2", "0,1,3,2", "-2,1,1,7"}) {
        const QuadSurd alpha = QuadSurd::parse(a);
        const Word t = mechanical_stream({alpha, QuadSurd::rational(5, 64)}).prefix(20000);
        for (std::size_t n : {100u, 1000u, 20000u}) {
            std::size_t ones = 0;
            for (std::size_t i = 0; i < n; ++i) ones += t[i];
            CHECK(std::abs(static_cast<double>(ones) - n * alpha.approx()) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("require_11_no_00") {
    CHECK(require_11_no_00(Word({1, 1, 0, 1}, 2).view()).passed());
    CHECK(require_11_no_00(Word({1, 0, 1}, 2).view()).fail_index == 1);
    CHECK(require_11_no_00(Word({0, 1, 1}, 2).view()).fail_index == 0);
    CHECK(require_11_no_00(Word({1, 1, 0, 1, 0, 0, 1}, 2).view()).fail_index == 4);
}

TEST_CASE("intercept search") {
    for (const char *a : {"-1,1,2,5", "2,-1,1,2", "-1,1,1,3"}) {
        const auto spec = find_intercept(QuadSurd::parse(a));
        const Word t = mechanical_stream(spec).prefix(3);
        CHECK(to_symbols(t) == "110");
    }
    // Slopes below 1/2 always contain 00.
    CHECK_THROWS_AS(find_intercept(QuadSurd::parse("-1,1,1,2")), LimitError);
}

TEST_CASE("star parity and the difference-sequence clauses") {
    for (const char *a : {"-1,1,2,5", "2,-1,1,2", "-1,1,1,3", "-2,1,1,7"}) {
        const auto spec = find_intercept(QuadSurd::parse(a));
        const auto trace = theta_forward(mechanical_stream(spec), 200);
        CHECK(trace.v_at(1) == Mark::One);
        CHECK(trace.v_at(2) == Mark::Star);
        CHECK(check_star_parity(spec, 5000).passed());
        CHECK(check_theorem_D(spec, 5000, 40).passed());
    }
    const auto bad = MorphicStream::periodic(Word({1, 0, 1}, 2));
    CHECK_THROWS_AS(check_star_parity(bad, 100), HypothesisError);
    CHECK_THROWS_AS(check_theorem_D(bad, 100, 10), HypothesisError);
}

TEST_CASE("clause (e) detects a periodic word") {
    // 110 repeated passes the hypothesis but its d word is periodic.
    const auto periodic = MorphicStream::periodic(Word({1, 1, 0}, 2));
    const auto r = check_theorem_D(periodic, 500, 10);
    CHECK(r.status == Status::Fail);
    CHECK(r.detail.find("clause (e)") != std::string::npos);
}
