#include <random>

#include "support.hpp"
#include "shrubs/testing/oracles.hpp"

using namespace shrubs;
using test_support::code_of;
using test_support::shrub;

TEST_CASE("components of a fraction", "[reconstruction]")
{
    CHECK(fraction_components(parse_fraction("1/((u1)(u2))")) == std::vector<LabelSet>{{Label(1)}, {Label(2)}});
    CHECK(fraction_components(parse_fraction("1/((u1)(u1+u2))")) == std::vector<LabelSet>{iota_labels(2)});
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            std::vector<LabelSet> expected;
            for (const auto& c : connected_components(p))
                expected.push_back(c.labels());
            std::sort(expected.begin(), expected.end());
            auto got = fraction_components(kappa(p));
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
        }
}

TEST_CASE("heights from a fraction", "[reconstruction]")
{
    CHECK(recover_heights(parse_fraction("1/((u1)(u1+u2))"), iota_labels(2)) == HeightMap{{Label(1), 1}, {Label(2), 0}});
    CHECK(recover_heights(parse_fraction("1/((u1)(u2))"), iota_labels(2)) == HeightMap{{Label(1), 0}, {Label(2), 0}});
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n))
            CHECK(recover_heights(kappa(p), p.labels()) == p.height_map());
}

TEST_CASE("reconstruction of small fractions", "[reconstruction]")
{
    CHECK(reconstruct(parse_fraction("1/(u1)")) == Shrub::trivial(Label(1)));
    CHECK(reconstruct(parse_fraction("1/((u1)(u1+u2))")) == generator_d(2, 1));
    CHECK(reconstruct(parse_fraction("1/((u1)(u2))")) == generator_c(1, 2));
    const auto all = enumerate_shrubs_bruteforce(4);
    for (const auto& p : all) {
        CHECK(reconstruct(kappa(p)) == p);
        CHECK(testing::reconstruct_by_search(kappa(p), all) == p);
    }
}

TEST_CASE("reconstruction of the six-vertex example", "[reconstruction]")
{
    const auto text = "(uF+uG)(uB+uE+uF+uG)/((uA)(uB)(uE)(uF)(uG)(uE+uF+uG)(uA+uB+uE+uF+uG)(uA+uB+uC+uE+uF+uG))";
    const Shrub p = reconstruct(parse_fraction(text));
    CHECK(p == shrub(R"({"vertices":["A","B","C","E","F","G"],"height":{"A":2,"B":1,"C":0,"E":2,"F":1,"G":1},
                        "edges":[["A","B"],["A","F"],["A","G"],["B","C"],["C","F"],["C","G"],["E","F"],["E","G"]]})"));
    CHECK(to_text(kappa(p)) == text);
    CHECK(ram_classes(p).size() == 2);
}

TEST_CASE("random larger shrubs round trip", "[reconstruction]")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Shrub p = testing::random_shrub(rng, iota_labels(trial % 2 ? 6 : 7));
        INFO(to_string(p));
        ExtractOptions opt;
        opt.cap = 7;
        CHECK(reconstruct(fraction_of_shrub(p), opt) == p);
    }
}

TEST_CASE("fractions outside the image are rejected", "[reconstruction]")
{
    for (const char* text : {"1/((u1)(u1)(u2))", "1/((u2)(u1+u2)(u1+2*u2))", "(u1)/((u2)(u1+u2))", "1/(u1+u2)",
                             "2/((u1)(u2))", "-1/((u1)(u2))", "(u1+u2)/((u1)(u2)(u1+u2+u3))"})
        CHECK(code_of([&] { reconstruct(parse_fraction(text)); }) == errc::not_in_image);
}
