#include "gen.hpp"

#include "sfs/folding.hpp"
#include "sfs/sumfree.hpp"

#include <doctest.h>

#include <set>

using namespace sfs;

namespace {

// Direct transcription of the greedy rule over an explicit set.
std::vector<std::uint64_t> brute_theta(const Word &w, std::uint64_t frontier) {
    std::set<std::uint64_t> s;
    std::size_t next = 0;
    for (std::uint64_t n = 1; n <= frontier; ++n) {
        bool is_sum = false;
        for (auto x : s) {
            if (x >= n) break;
            if (s.count(n - x)) {
                is_sum = true;
                break;
            }
        }
        if (is_sum) continue;
        if (next >= w.size()) break;
        if (w[next++] == 1) s.insert(n);
    }
    return {s.begin(), s.end()};
}

std::vector<std::uint64_t> prefix(const std::vector<std::uint64_t> &v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

} // namespace

TEST_CASE("theta of the constant and alternating sequences") {
    const auto ones = theta_members(MorphicStream::periodic(Word({1}, 2)), 8);
    CHECK(prefix(ones.members, 8) == std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13, 15});
    const auto alt = theta_members(MorphicStream::periodic(Word({0, 1}, 2)), 4);
    CHECK(prefix(alt.members, 4) == std::vector<std::uint64_t>{2, 5, 8, 11});
}

TEST_CASE("theta of the period-doubling sequence") {
    const auto trace = theta_forward(folding::pkf_stream(1), 38);
    CHECK(trace.members == std::vector<std::uint64_t>{2, 7, 10, 13, 21, 27, 35, 38});
    CHECK(trace.v_string().substr(0, 13) == "010*0010*10*1");
    CHECK(trace.v_at(4) == Mark::Star);
    CHECK(trace.v_word()[3] == 2);

    const auto g = gap_counters(theta_members(folding::pkf_stream(1), 9));
    CHECK(prefix(g.mu, 5) == std::vector<std::uint64_t>{3, 1, 1, 3, 3});
    CHECK(prefix(g.alpha, 5) == std::vector<std::uint64_t>{1, 1, 1, 4, 2});
    CHECK(prefix(g.d, 8) == std::vector<std::uint64_t>{5, 3, 3, 8, 6, 8, 3, 3});
}

TEST_CASE("theta of p^(2)") {
    const auto trace = theta_members(folding::pkf_stream(2), 8);
    CHECK(trace.v_string().substr(0, 15) == "00100*100*000*1");
    CHECK(trace.members[0] == 3);
    CHECK(trace.members[1] == 7);
    const auto g = gap_counters(trace);
    CHECK(prefix(g.mu, 7) == std::vector<std::uint64_t>{2, 5, 2, 5, 2, 2, 2});
    CHECK(prefix(g.alpha, 7) == std::vector<std::uint64_t>{1, 2, 1, 2, 1, 1, 1});
    CHECK(prefix(g.d, 7) == std::vector<std::uint64_t>{4, 8, 4, 8, 4, 4, 4});
}

TEST_CASE("incremental builder matches the brute-force oracle") {
    for (int trial = 0; trial < 60; ++trial) {
        const Word seed = testgen::nonempty_word(25, 2);
        const auto stream = MorphicStream::periodic(seed);
        const std::uint64_t frontier = testgen::uniform(1, 400);
        const auto trace = theta_forward(stream, frontier);
        CHECK(trace.members == brute_theta(stream.prefix(frontier), frontier));

        // Growing in several steps gives the same snapshot.
        SumFreeBuilder b(stream);
        b.extend_to(frontier / 3);
        b.extend_to(frontier / 2);
        b.extend_to(frontier);
        CHECK(b.snapshot().members == trace.members);
        CHECK(b.snapshot().v == trace.v);
    }
}

TEST_CASE("property: theta output is sum-free and gap counters add up") {
    for (int trial = 0; trial < 40; ++trial) {
        const auto stream = MorphicStream::periodic(testgen::nonempty_word(20, 2));
        const auto trace = theta_forward(stream, 600);
        CHECK_FALSE(check_sumfree(trace.members).has_value());
        const auto g = gap_counters(trace);
        for (std::size_t i = 0; i < g.d.size(); ++i) {
            CHECK(g.d[i] == g.mu[i] + g.alpha[i] + 1);
        }
        // Every non-star position consumes one letter.
        std::uint64_t stars = 0;
        for (auto m : trace.v) stars += m == Mark::Star;
        CHECK(trace.consumed == trace.frontier() - stars);
    }
}

TEST_CASE("property: theta_inverse inverts theta_forward") {
    for (int trial = 0; trial < 100; ++trial) {
        const Word seed = testgen::word(20, 2);
        const auto stream = MorphicStream::periodic(seed);
        const auto trace = theta_forward(stream, 1000);
        const Word back = theta_inverse(trace.members, 1000);
        CHECK(back.size() == trace.consumed);
        CHECK(back == stream.prefix(back.size()));
    }
}

TEST_CASE("check_sumfree and theta_inverse errors") {
    const std::vector<std::uint64_t> bad{1, 2, 3};
    auto w = check_sumfree(bad);
    REQUIRE(w.has_value());
    CHECK(*w == SumWitness{1, 2, 3});
    CHECK(check_sumfree(std::vector<std::uint64_t>{1, 2})->z == 2);
    CHECK_FALSE(check_sumfree(std::vector<std::uint64_t>{1, 3, 5}).has_value());
    CHECK_THROWS_AS(check_sumfree(std::vector<std::uint64_t>{3, 1}), ParameterError);
    CHECK_THROWS_AS(check_sumfree(std::vector<std::uint64_t>{0, 1}), ParameterError);
    CHECK_THROWS_AS(theta_inverse(bad, 10), SumFreeViolation);
    try {
        theta_inverse(std::vector<std::uint64_t>{2, 5, 7}, 10);
        FAIL("expected a violation");
    } catch (const SumFreeViolation &e) {
        CHECK(e.witness == SumWitness{2, 5, 7});
    }
}

TEST_CASE("theta rejects non-binary input and honours the member cap") {
    CHECK_THROWS_AS(theta_forward(MorphicStream::periodic(Word({2}, 3)), 5), DomainError);
    SumFreeBuilder b(MorphicStream::periodic(Word({0}, 2)));
    CHECK_THROWS_AS(b.extend_until_members(1, 1000), LimitError);
    CHECK(gap_counters(theta_forward(MorphicStream::periodic(Word({0}, 2)), 50)).d.empty());
}
