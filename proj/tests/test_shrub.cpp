#include <random>

#include "support.hpp"
#include "shrubs/testing/oracles.hpp"

using namespace shrubs;
using test_support::code_of;
using test_support::shrub;

TEST_CASE("valid shrubs are accepted", "[shrub]")
{
    const Shrub edge = shrub(R"({"vertices":[1,2],"height":{"1":1,"2":0},"edges":[[1,2]]})");
    CHECK(edge.size() == 2);
    CHECK(edge.height(Label(1)) == 1);
    CHECK(edge == generator_d(2, 1));

    const Shrub bip = shrub(R"({"vertices":[1,2,3,4],"height":{"1":0,"2":0,"3":1,"4":1},
                               "edges":[[3,1],[3,2],[4,1],[4,2]]})");
    CHECK(ram_classes(bip).size() == 1);
    CHECK(is_connected(bip));
}

TEST_CASE("axiom violations are reported by name", "[shrub]")
{
    CHECK(code_of([] { shrub(R"({"vertices":[1,2],"height":{"1":0,"2":2},"edges":[[1,2]]})"); }) == errc::height_jump);
    CHECK(code_of([] { shrub(R"({"vertices":[1,2],"height":{"1":0,"2":1},"edges":[]})"); }) == errc::unsupported);
    CHECK(code_of([] {
              shrub(R"({"vertices":[1,2,3,4,5],"height":{"1":0,"5":0,"2":1,"3":1,"4":2},
                        "edges":[[4,2],[4,3],[3,1],[2,5]]})");
          }) == errc::forbidden_pattern);
    CHECK(code_of([] {
              shrub(R"({"vertices":[1,2,3,4,5],"height":{"1":0,"2":0,"3":0,"4":1,"5":1},
                        "edges":[[4,1],[4,2],[5,2],[5,3]]})");
          }) == errc::forbidden_pattern);
    CHECK(code_of([] { shrub(R"({"vertices":[1,1],"height":{"1":0},"edges":[]})"); }) == errc::label_clash);
    CHECK(code_of([] { shrub(R"({"vertices":[1],"height":{"1":0},"edges":[[1,2]]})"); }) == errc::unknown_label);
}

TEST_CASE("validation agrees with the naive pattern scan on random graded graphs", "[shrub]")
{
    std::mt19937_64 rng(7);
    int accepted = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<int> h(static_cast<std::size_t>(n));
        for (auto& x : h)
            x = std::uniform_int_distribution<int>(0, 2)(rng);
        std::vector<std::vector<bool>> adj(h.size(), std::vector<bool>(h.size(), false));
        std::vector<LabelPair> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (std::abs(h[a] - h[b]) == 1 && std::bernoulli_distribution(0.55)(rng)) {
                    adj[a][b] = adj[b][a] = true;
                    edges.emplace_back(Label(a + 1), Label(b + 1));
                }
        HeightMap hm;
        for (int a = 0; a < n; ++a)
            hm.emplace(Label(a + 1), h[a]);
        bool ok = true;
        try {
            validate_shrub(iota_labels(n), hm, edges);
        } catch (const error&) {
            ok = false;
        }
        accepted += ok ? 1 : 0;
        INFO("trial " << trial);
        REQUIRE(ok == testing::is_shrub_naive(h, adj));
    }
    CHECK(accepted > 100);
}

TEST_CASE("local operations", "[shrub]")
{
    const Shrub p = shrub(R"({"vertices":[1,2,3,4],"height":{"1":0,"2":0,"3":1,"4":1},
                             "edges":[[3,1],[3,2],[4,1],[4,2]]})");
    CHECK(leaves(p).empty());
    CHECK(are_correlated(p, Label(3), Label(4)));
    const Shrub merged = merge_correlated(p, Label(3), Label(4), Label(9));
    CHECK(merged.size() == 3);
    CHECK(is_valid(merged));
    CHECK(code_of([&] { merge_correlated(p, Label(1), Label(3), Label(9)); }) == errc::not_correlated);

    const Shrub q = generator_d(2, 1);
    CHECK(leaves(q) == LabelSet{Label(1)});
    CHECK(delete_leaf(q, Label(1)) == Shrub::trivial(Label(2)));
    CHECK(code_of([&] { delete_leaf(q, Label(2)); }) == errc::not_a_leaf);
    CHECK(upper_ideal(q, {Label(1)}) == LabelSet{Label(1)});
    CHECK(truncate_at_or_above(p, 1).size() == 2);
}

TEST_CASE("enumeration counts", "[shrub]")
{
    const std::size_t expected[] = {1, 3, 19, 195};
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_shrubs_bruteforce(n).size() == expected[n - 1]);
        CHECK(enumerate_shrubs_by_generators(n) == enumerate_shrubs_bruteforce(n));
        CHECK(testing::series_parallel_count(n) == expected[n - 1]);
    }
    const auto connected = connected_only(enumerate_shrubs_bruteforce(4));
    std::vector<Shrub> reps;
    for (const auto& p : connected)
        if (std::none_of(reps.begin(), reps.end(), [&](const Shrub& r) { return testing::isomorphic_by_search(p, r); }))
            reps.push_back(p);
    CHECK(isomorphism_classes(connected).size() == reps.size());
    CHECK(code_of([] { enumerate_shrubs_bruteforce(7); }) == errc::cap_exceeded);
}

TEST_CASE("canonical form decides isomorphism", "[shrub]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Shrub p = testing::random_shrub(rng, iota_labels(5));
        const Shrub q = testing::random_shrub(rng, iota_labels(5));
        CHECK(is_isomorphic(p, q) == testing::isomorphic_by_search(p, q));
        const auto perm = testing::random_permutation(rng, 5);
        std::map<Label, Label> m;
        for (int k = 0; k < 5; ++k)
            m.emplace(Label(k + 1), Label(perm[static_cast<std::size_t>(k)] + 1));
        CHECK(is_isomorphic(p, relabel(p, m)));
    }
}
