#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onerel/sampling.hpp"
#include "onerel/word.hpp"

using namespace onerel;

TEST_CASE("parse compact and indexed forms") {
    Word w = parse_word("abAB", 2);
    CHECK(w.size() == 4);
    CHECK(w[0].gen() == 1);
    CHECK(w[0].sign() == 1);
    CHECK(w[2].gen() == 1);
    CHECK(w[2].sign() == -1);

    Word v = parse_word("x1 X2 x1", 2);
    CHECK(format_word(v) == "aBa");

    CHECK_THROWS_AS(parse_word("abc", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a$b", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x1 a2", 2), std::invalid_argument);  // mixed formats
    CHECK_THROWS_AS(parse_word("x0", 2), std::invalid_argument);

    // inferred rank
    CHECK(parse_word("abc").rank() == 3);
    CHECK(parse_word("x7 x2").rank() == 7);
    CHECK(parse_word("").rank() == 1);
}

TEST_CASE("free reduction") {
    CHECK(format_word(free_reduce(parse_word("aA", 2))) == "");
    CHECK(format_word(free_reduce(parse_word("abBA", 2))) == "");
    CHECK(format_word(free_reduce(parse_word("aab", 2))) == "aab");
    CHECK(format_word(free_reduce(parse_word("abBcCA", 3))) == "");
}

TEST_CASE("cyclic reduction with conjugator identity") {
    auto r = cyclic_reduce(parse_word("baB", 2));
    CHECK(format_word(r.core) == "a");
    CHECK(format_word(r.conjugator) == "b");

    auto r2 = cyclic_reduce(parse_word("ab", 2));
    CHECK(format_word(r2.core) == "ab");
    CHECK(r2.conjugator.empty());

    auto r3 = cyclic_reduce(parse_word("Abba", 2));
    CHECK(r3.core.is_cyclically_reduced());
    Word recon = free_reduce(r3.conjugator.concat(r3.core).concat(r3.conjugator.inverse()));
    CHECK(recon == free_reduce(parse_word("Abba", 2)));
}

TEST_CASE("exponent sums") {
    Word w = parse_word("BabAA", 2);
    CHECK(exponent_sum(w, Generator(1)) == -1);
    CHECK(exponent_sum(w, Generator(2)) == 0);
    CHECK(exponent_sum(parse_word("abAB", 2), Generator(1)) == 0);
    CHECK(exponent_sum(parse_word("aab", 2), Generator(1)) == 2);
}

TEST_CASE("reduction properties on random raw words") {
    SeededRng rng(7, 0);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 1 + static_cast<int>(rng.below(3));
        int n = static_cast<int>(rng.below(40));
        Word raw = sample_raw_word(n, k, rng);
        Word red = free_reduce(raw);
        CHECK(red.is_reduced());
        CHECK(red.size() <= raw.size());
        CHECK(free_reduce(red) == red);  // idempotent
        for (int g = 1; g <= k; ++g)
            CHECK(exponent_sum(red, Generator(g)) == exponent_sum(raw, Generator(g)));

        auto cyc = cyclic_reduce(raw);
        CHECK(cyc.core.is_cyclically_reduced());
        Word recon = free_reduce(cyc.conjugator.concat(cyc.core).concat(cyc.conjugator.inverse()));
        CHECK(recon == red);
        if (!cyc.core.empty()) {
            // exponent sums invariant under cyclic permutation of the core
            Word rot = cyc.core.rotated(1 + rng.below(std::max<std::uint64_t>(1, cyc.core.size())));
            for (int g = 1; g <= k; ++g)
                CHECK(exponent_sum(rot, Generator(g)) == exponent_sum(cyc.core, Generator(g)));
        }
    }
}

TEST_CASE("format round trip") {
    SeededRng rng(11, 0);
    for (int trial = 0; trial < 100; ++trial) {
        Word raw = sample_raw_word(static_cast<int>(rng.below(30)), 3, rng);
        CHECK(parse_word(format_word(raw), 3) == raw);
    }
    // indexed format beyond the compact cap
    Word big({Letter(Generator(27), 1), Letter(Generator(3), -1)}, 30);
    CHECK(format_word(big) == "x27 X3");
    CHECK(parse_word(format_word(big), 30) == big);
}
