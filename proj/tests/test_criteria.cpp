#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onerel/criteria.hpp"
#include "onerel/sampling.hpp"
#include "oracles.hpp"

using namespace onerel;

TEST_CASE("rank-2 criterion, hand examples") {
    CHECK(brown_criterion(parse_word("BabAA", 2)).kind == VerdictKind::AscendingHNN);
    CHECK(brown_criterion(parse_word("abAB", 2)).kind == VerdictKind::NotApplicable);
    CHECK(brown_criterion(parse_word("aab", 2)).kind == VerdictKind::AscendingHNN);
    // torsion: a^2 is not an ascending HNN relator
    CHECK(brown_criterion(parse_word("aa", 2)).kind == VerdictKind::NotAscending);
    // trivial relator after reduction
    CHECK(brown_criterion(parse_word("aA", 2)).kind == VerdictKind::NotApplicable);
    // BS(2,1): both endpoints of the top line identify cyclically
    CHECK(brown_criterion(parse_word("BaabA", 2)).kind == VerdictKind::AscendingHNN);

    CHECK_THROWS_AS(brown_criterion(parse_word("", 2)), std::invalid_argument);
    CHECK_THROWS_AS(brown_criterion(parse_word("abc", 3)), std::invalid_argument);
}

TEST_CASE("rank-2 criterion certificates revalidate") {
    SeededRng rng(401, 0);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = sample_word(Model::CR, 2 + static_cast<int>(rng.below(30)), 2, rng);
        Verdict v = brown_criterion(w);
        CHECK(verify_verdict(v));
        if (v.kind == VerdictKind::AscendingHNN) CHECK(v.brown.has_value());
    }
}

TEST_CASE("rank-2 criterion agrees with the line enumeration oracle") {
    for (int n = 1; n <= 6; ++n) {
        oracles::enumerate_reduced(n, 2, [&](const Word& w) {
            Verdict v = brown_criterion(w);
            bool mine = v.kind == VerdictKind::AscendingHNN;
            CHECK(mine == oracles::brown_line_enumeration(w));
        }, true);
    }
}

TEST_CASE("rank-2 verdict invariant under rotation and inversion") {
    SeededRng rng(409, 0);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = sample_word(Model::CR, 2 + static_cast<int>(rng.below(16)), 2, rng);
        VerdictKind base = brown_criterion(w).kind;
        Word rot = w.rotated(rng.below(w.size()));
        CHECK(brown_criterion(rot).kind == base);
        CHECK(brown_criterion(w.inverse()).kind == base);
    }
}

TEST_CASE("embeddable criterion examples") {
    Verdict v = embeddable_criterion(parse_word("abc", 3));
    CHECK(v.kind == VerdictKind::Embeddable);
    CHECK(v.touching.has_value());
    CHECK(verify_verdict(v));

    CHECK(embeddable_criterion(parse_word("abAB", 2)).kind == VerdictKind::NotApplicable);
    CHECK_THROWS_AS(embeddable_criterion(parse_word("", 3)), std::invalid_argument);
}

TEST_CASE("embeddable verdict invariant under relabeling") {
    SeededRng rng(419, 0);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = sample_word(Model::CR, 4 + static_cast<int>(rng.below(20)), 3, rng);
        // rotate generator names 1 -> 2 -> 3 -> 1
        std::vector<Letter> letters;
        for (Letter l : w.letters())
            letters.push_back(Letter(Generator(l.gen() % 3 + 1), l.sign()));
        Word relabeled(letters, 3);
        CHECK(embeddable_criterion(w).kind == embeddable_criterion(relabeled).kind);
    }
}

TEST_CASE("rank-2 cross consistency: full-walk touching certificates imply ascending") {
    SeededRng rng(421, 0);
    int compared = 0, discrepancies = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Word w = sample_word(Model::CR, 2 + static_cast<int>(rng.below(24)), 2, rng);
        Verdict emb = embeddable_criterion(w);
        if (emb.kind != VerdictKind::Embeddable) continue;
        const auto& cert = *emb.touching;
        // does the certified line support the whole walk, and is the
        // certified element simple in the whole-walk sense?
        Walk walk = trace_walk(emb.core);
        BigInt best = 0;
        bool first = true;
        std::vector<std::size_t> attaining;
        for (std::size_t i = 0; i <= walk.length(); ++i) {
            BigInt val = 0;
            for (int a = 0; a < 2; ++a) val += cert.normal[static_cast<std::size_t>(a)] * walk.coord(i, a);
            if (first || val > best) {
                best = val;
                first = false;
            }
        }
        if (best != cert.support_value) continue;  // supports w_t only, not the whole walk
        std::size_t visits = 0, edges_on = 0;
        const std::size_t n = walk.length();
        std::vector<BigInt> vals(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            vals[i] = 0;
            for (int a = 0; a < 2; ++a) vals[i] += cert.normal[static_cast<std::size_t>(a)] * walk.coord(i, a);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (vals[i] == best) ++visits;
            if (vals[i] == best && vals[i + 1] == best) ++edges_on;
        }
        bool whole_walk_simple = (edges_on == 0 && visits == 1) || (edges_on == 1 && visits == 2);
        if (!whole_walk_simple) continue;
        ++compared;
        if (brown_criterion(w).kind != VerdictKind::AscendingHNN) ++discrepancies;
    }
    INFO("compared " << compared << " words");
    CHECK(compared > 30);
    CHECK(discrepancies == 0);
}
