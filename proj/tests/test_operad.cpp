#include <random>

#include "support.hpp"
#include "shrubs/testing/oracles.hpp"

using namespace shrubs;
using test_support::code_of;

TEST_CASE("partial composition on small cases", "[operad]")
{
    const Shrub c12 = generator_c(1, 2);
    const Shrub d34 = generator_d(3, 4);
    const Shrub p = compose(c12, Label(1), d34);
    CHECK(p.labels() == iota_labels(3, 2));
    CHECK(p.height(Label(2)) == 0);
    CHECK(p.height(Label(3)) == 0);
    CHECK(p.height(Label(4)) == 1);
    CHECK(p.edge_count() == 1);

    CHECK(compose(c12, Label(2), Shrub::trivial(Label(5))) == generator_c(1, 5));
    CHECK(compose(Shrub::trivial(Label(1)), Label(1), d34) == d34);
}

TEST_CASE("union and grafting are compositions into the generators", "[operad]")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Shrub p = testing::random_shrub(rng, iota_labels(3, 1));
        const Shrub q = testing::random_shrub(rng, iota_labels(3, 4));
        const Label x("x"), y("y");
        CHECK(disjoint_union(p, q) == compose(compose(generator_c(x, y), x, p), y, q));
        CHECK(graft(p, q) == compose(compose(generator_d(x, y), x, p), y, q));
        CHECK(disjoint_union(p, q) == disjoint_union(q, p));
        const Shrub g = graft(p, q);
        for (const auto& l : q.labels())
            CHECK(g.height(l) == q.height(l) + 1);
    }
}

TEST_CASE("composition errors", "[operad]")
{
    CHECK(code_of([] { compose(generator_c(1, 2), Label(3), Shrub::trivial(Label(4))); }) == errc::unknown_label);
    CHECK(code_of([] { compose(generator_c(1, 2), Label(1), generator_c(2, 3)); }) == errc::label_clash);
    CHECK(code_of([] { disjoint_union(generator_c(1, 2), Shrub::trivial(Label(2))); }) == errc::label_clash);
}

TEST_CASE("generator relations", "[operad]")
{
    const Label s("*");
    const Shrub a = compose(generator_d(s, 1), s, generator_d(3, 2));
    const Shrub b = compose(generator_d(s, 2), s, generator_d(3, 1));
    const Shrub c = compose(generator_d(3, s), s, generator_c(1, 2));
    CHECK(a == b);
    CHECK(b == c);
    CHECK(compose(generator_c(s, 1), s, generator_c(2, 3)) == compose(generator_c(s, 2), s, generator_c(3, 1)));
}

TEST_CASE("decompose and evaluate are inverse", "[operad]")
{
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n))
            CHECK(evaluate(decompose(p)) == p);
    const auto w = decompose(generator_d(1, 2));
    CHECK_FALSE(w.is_leaf());
    CHECK(w.gen == GenWord::Gen::D);
}

TEST_CASE("malformed words are rejected", "[operad]")
{
    CHECK(code_of([] { genword_from_json(parse_json(R"({"gen":"X","slot":1,"args":[1,2]})")); }) == errc::malformed_word);
    CHECK(code_of([] { genword_from_json(parse_json(R"({"gen":"C","slot":1,"args":[1]})")); }) == errc::malformed_word);
    const auto w = genword_from_json(parse_json(R"({"gen":"C","slot":"s","args":[1,1]})"));
    CHECK(code_of([&] { evaluate(w); }) == errc::malformed_word);
}
