#include "gen.hpp"

#include "sfs/folding.hpp"
#include "sfs/words.hpp"

#include <doctest.h>

#include <thread>

using namespace sfs;

namespace {

Morphism sigma1() { return Morphism({{0, Word({0, 1}, 2)}, {1, Word({0, 0}, 2)}}, 2); }

} // namespace

TEST_CASE("word letters are checked against the alphabet") {
    CHECK_THROWS_AS(Word({0, 2}, 2), DomainError);
    Word w({0, 1}, 2);
    CHECK_THROWS_AS(w.push_back(3), DomainError);
    w.append(Word({1, 1}, 2));
    CHECK(to_symbols(w) == "0111");
    CHECK(w.slice(1, 2) == Word({1, 1}, 2));
    CHECK(Word::run(1, 3, 2).repeated(2).size() == 6);
}

TEST_CASE("morphism application and iteration") {
    const auto s = sigma1();
    CHECK(to_symbols(apply_morphism(s, Word({0, 1}, 2))) == "0100");
    CHECK(to_symbols(iterate(s, Word({0}, 2), 3)) == "01000101");
    CHECK(s.prolongable(0));
    CHECK_FALSE(s.prolongable(1));
    CHECK_THROWS_AS(Morphism({{0, Word({}, 2)}}, 2), ParameterError);
    CHECK_THROWS_AS(Morphism({{0, Word({0}, 2)}, {0, Word({1}, 2)}}, 2), ParameterError);
}

TEST_CASE("letters outside the domain are rejected") {
    const folding::FoldingFamily fam(2);
    CHECK_THROWS_AS(fam.tau.image(0), DomainError);
    CHECK_THROWS_AS(apply_morphism(fam.tau, Word({0, 1}, 3)), DomainError);
    CHECK(fam.tau.domain() == std::vector<Letter>{1, 2});
}

TEST_CASE("composition agrees with applying twice") {
    const folding::FoldingFamily fam(1);
    const auto c = compose(fam.tau, fam.rho0);
    CHECK(to_symbols(c.image(0)) == "211");
    CHECK(to_symbols(c.image(1)) == "22");
    for (int trial = 0; trial < 50; ++trial) {
        const Word w = testgen::nonempty_word(30, 2);
        CHECK(apply_morphism(c, w) == apply_morphism(fam.tau, apply_morphism(fam.rho0, w)));
    }
}

TEST_CASE("gap map") {
    CHECK(to_integer_list(gamma(Word({1, 0, 0, 1, 1, 0, 1}, 2))) == "2,0,1");
    CHECK(to_integer_list(gamma(Word({0, 1, 0, 0, 0, 1, 0}, 2))) == "3");
    CHECK_THROWS_AS(gamma(Word({0, 1, 0}, 2)), DomainError);
}

TEST_CASE("fixed points") {
    CHECK(to_symbols(fixed_point(sigma1(), 0).prefix(8)) == "01000101");

    // tau_1 is not prolongable on 1; the limit comes from 2 = tau_1(1).
    const folding::FoldingFamily fam(1);
    CHECK(to_symbols(MorphicStream::fixed_point(fam.tau, 1).prefix(8)) == "21122211");

    const Morphism swap({{0, Word({1}, 2)}, {1, Word({0}, 2)}}, 2);
    CHECK_THROWS_AS(MorphicStream::fixed_point(swap, 0), LimitError);
}

TEST_CASE("property: a fixed point is invariant under its morphism") {
    for (unsigned k = 1; k <= 5; ++k) {
        const folding::FoldingFamily fam(k);
        for (const auto *m : {&fam.sigma, &fam.tau, &fam.sigma_hat}) {
            const Letter seed = m == &fam.sigma ? 0 : 1;
            const auto s = MorphicStream::fixed_point(*m, seed);
            const Word p = s.prefix(500);
            const Word image = apply_morphism(*m, p);
            CHECK(image.slice(0, 500) == p);
        }
    }
}

TEST_CASE("stream prefixes are consistent under concurrent reads") {
    const auto s = folding::tau_stream(3);
    const Word reference = folding::tau_stream(3).prefix(20000);
    std::vector<std::thread> threads;
    std::vector<int> ok(4, 0);
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            bool good = true;
            for (std::size_t n = 100; n <= 20000; n += 997 * (t + 1)) {
                good = good && s.prefix(n) == reference.slice(0, n);
                good = good && s.at(n - 1) == reference[n - 1];
            }
            ok[t] = good;
        });
    }
    for (auto &th : threads) th.join();
    CHECK(ok == std::vector<int>(4, 1));
}

TEST_CASE("periodic and generator streams") {
    const auto p = MorphicStream::periodic(Word({0, 1}, 2), IndexBase::One);
    CHECK(to_symbols(p.prefix(5)) == "01010");
    CHECK(p.index_base() == IndexBase::One);
    CHECK_THROWS_AS(MorphicStream::periodic(Word({}, 2)), ParameterError);
    const auto g = MorphicStream::from_generator([](std::uint64_t i) { return Letter(i % 3); }, 2);
    CHECK_THROWS_AS(g.prefix(3), DomainError);
}

TEST_CASE("serialization round trips") {
    for (int trial = 0; trial < 100; ++trial) {
        const Word w = testgen::nonempty_word(40, 3);
        CHECK(parse_symbols(to_symbols(w), "012") == w);
        CHECK(parse_integer_list(to_integer_list(w)) == w);
    }
    CHECK(to_symbols(Word({0, 2, 1}, 3), "01*") == "0*1");
    CHECK_THROWS_AS(parse_symbols("01x"), DomainError);
    CHECK_THROWS_AS(parse_integer_list("1,,2"), DomainError);
    CHECK(to_index_csv(Word({1, 0}, 2).view(), IndexBase::One) == "index,letter\n1,1\n2,0\n");
}
