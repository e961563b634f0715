#include <doctest.h>

#include "ringlab/ideal.hpp"
#include "ringlab/parse.hpp"
#include "support/oracles.hpp"

using namespace ringlab;

TEST_CASE("membership worked examples") {
    RingPtr z6 = parse_ring_spec("Z/6");
    auto sol = in_ideal(from_integer(z6, 2), {from_integer(z6, 4)});
    REQUIRE(sol.has_value());
    CHECK(mul((*sol)[0], from_integer(z6, 4)) == from_integer(z6, 2));
    // the exhaustive baseline finds c = 2 first
    auto flat = in_ideal(from_integer(z6, 2), {from_integer(z6, 4)}, {},
                         MembershipStrategy::exhaustive);
    REQUIRE(flat.has_value());
    CHECK((*flat)[0] == from_integer(z6, 2));

    RingPtr z4 = parse_ring_spec("Z/4");
    CHECK(!in_ideal(from_integer(z4, 2), {zero(z4)}).has_value());

    RingPtr f2x = parse_ring_spec("Q(Z/2,[0,0,1])");
    Element x = parse_element("z", f2x);
    CHECK(!in_ideal(x, {mul(x, x)}).has_value()); // x outside (x^2) = (0)
}

TEST_CASE("the empty generator list is the zero ideal") {
    RingPtr z6 = parse_ring_spec("Z/6");
    auto sol = in_ideal(zero(z6), {});
    REQUIRE(sol.has_value());
    CHECK(sol->empty());
    CHECK(!in_ideal(one(z6), {}).has_value());
}

TEST_CASE("strategies agree on solvability and produce verified witnesses") {
    std::mt19937_64 rng(23);
    int solvable = 0, unsolvable = 0;
    for (int round = 0; round < 120; ++round) {
        RingPtr R = oracle::random_ring(rng, 48);
        std::size_t k = 1 + rng() % 2;
        std::vector<Element> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(oracle::random_element(rng, R));
        Element f = oracle::random_element(rng, R);

        auto reference = oracle::in_ideal_bruteforce(f, gens);
        for (auto strategy : {MembershipStrategy::automatic, MembershipStrategy::exhaustive,
                              MembershipStrategy::additive}) {
            auto sol = in_ideal(f, gens, {}, strategy);
            CHECK(sol.has_value() == reference.has_value());
            if (sol) {
                Element acc = zero(R);
                for (std::size_t i = 0; i < k; ++i) acc = add(acc, mul((*sol)[i], gens[i]));
                CHECK(acc == f);
            }
        }
        (reference ? solvable : unsolvable)++;
    }
    // the random mix must exercise both outcomes
    CHECK(solvable > 10);
    CHECK(unsolvable > 10);
}

TEST_CASE("membership respects the tuple budget") {
    RingPtr z17 = parse_ring_spec("Z/17");
    std::vector<Element> gens(7, from_integer(z17, 3));
    SearchBudget tiny{65536, 1 << 16}; // 17^7 > 2^16
    CHECK_THROWS_AS(in_ideal(one(z17), gens, tiny, MembershipStrategy::exhaustive),
                    budget_error);
}

TEST_CASE("membership across a product splits componentwise") {
    RingPtr p = parse_ring_spec("P(Z/4,Z/9)");
    Element f = parse_element("(2,3)", p);
    Element g = parse_element("(2,3)", p);
    auto sol = in_ideal(f, {g});
    REQUIRE(sol.has_value());
    CHECK(mul((*sol)[0], g) == f);
    // (2,0) cannot be hit: 3 | second coordinate of every multiple of (2,3)
    CHECK(in_ideal(parse_element("(2,1)", p), {g}).has_value() == false);
}
