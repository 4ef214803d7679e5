#include <doctest.h>

#include <random>
#include <stdexcept>

#include "slink/braid.hpp"

using namespace slink;

TEST_CASE("parse examples") {
    BraidWord b = parse_braid("B2: 1 1 1");
    CHECK(b.strands == 2);
    CHECK(b.letters == std::vector<int>{1, 1, 1});

    BraidWord id = parse_braid("B1:");
    CHECK(id.strands == 1);
    CHECK(id.letters.empty());

    BraidWord c = parse_braid("B3: 1 -2");
    CHECK(c.strands == 3);
    CHECK(c.letters == std::vector<int>{1, -2});
}

TEST_CASE("parse errors name the offending token") {
    CHECK_THROWS_WITH_AS(parse_braid("B2: 2"), doctest::Contains("2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("B2: x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("2: 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("B0:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("B2: 0"), std::invalid_argument);
}

TEST_CASE("print/parse round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BraidWord b;
        b.strands = 1 + static_cast<int>(rng() % 4);
        int len = static_cast<int>(rng() % 7);
        for (int i = 0; i < len && b.strands > 1; ++i) {
            int k = 1 + static_cast<int>(rng() % (b.strands - 1));
            b.letters.push_back((rng() & 1) ? k : -k);
        }
        CHECK(parse_braid(print_braid(b)) == b);
    }
}

TEST_CASE("closure writhe") {
    CHECK(closure(parse_braid("B2: 1 1 1")).writhe == 3);
    CHECK(closure(parse_braid("B1:")).writhe == 0);
    CHECK(closure(parse_braid("B2: 1 -1")).writhe == 0);
    LinkDiagram d = closure(parse_braid("B3: 1 -2"));
    REQUIRE(d.crossings.size() == 2);
    CHECK(d.crossings[0].sign == 1);
    CHECK(d.crossings[1].sign == -1);
    CHECK(d.crossings[1].col == 2);
}

TEST_CASE("markov variants") {
    auto contains = [](const std::vector<BraidWord>& vs, const BraidWord& w) {
        for (const auto& v : vs)
            if (v == w) return true;
        return false;
    };

    auto v_id = markov_variants(parse_braid("B1:"));
    CHECK(contains(v_id, parse_braid("B2: 1")));
    CHECK(contains(v_id, parse_braid("B2: -1")));

    auto v_tref = markov_variants(parse_braid("B2: 1 1 1"));
    CHECK(contains(v_tref, parse_braid("B2: 1 1 1")));  // rotation fixed point

    auto v_kink = markov_variants(parse_braid("B2: 1"));
    CHECK(contains(v_kink, parse_braid("B2: -1 1 1")));  // conjugate by the inverse generator

    // writhe behavior across the variants
    int w = closure(parse_braid("B2: 1 1 1")).writhe;
    for (const auto& v : v_tref) {
        int wv = closure(v).writhe;
        if (v.strands == 2)
            CHECK(wv == w);
        else
            CHECK(std::abs(wv - w) == 1);
    }
}

TEST_CASE("braid relation variants") {
    auto vs = braid_relation_variants(parse_braid("B3: 1 2 1"));
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == parse_braid("B3: 2 1 2"));
    CHECK(braid_relation_variants(parse_braid("B3: -1 -2 -1"))[0] ==
          parse_braid("B3: -2 -1 -2"));
    CHECK(braid_relation_variants(parse_braid("B2: 1 1 1")).empty());
}

TEST_CASE("orientation reversal and mirror words") {
    CHECK(orientation_reversed(parse_braid("B3: 1 -2")) == parse_braid("B3: -1 2"));
    CHECK(mirror_word(parse_braid("B2: 1 1 1")) == parse_braid("B2: -1 -1 -1"));
    CHECK(mirror_word(parse_braid("B3: 1 -2")) == parse_braid("B3: 2 -1"));
}
