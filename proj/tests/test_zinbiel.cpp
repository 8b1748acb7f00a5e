#include "support.hpp"
#include "shrubs/testing/oracles.hpp"

using namespace shrubs;
using test_support::order;

namespace {

ZinbElement sum_of(std::initializer_list<TotalOrder> orders)
{
    ZinbElement x(make_label_set(*orders.begin()));
    for (const auto& o : orders)
        x.add(o, Rational(1));
    return x;
}

} // namespace

TEST_CASE("composition of orders", "[zinbiel]")
{
    CHECK(zinb_compose(order({2, 1}), Label(1), order({3, 4})) == sum_of({order({2, 3, 4})}));
    CHECK(zinb_compose(order({1, 2}), Label(1), order({3, 4}))
          == sum_of({order({3, 2, 4}), order({3, 4, 2})}));
    CHECK(zinb_compose(order({1}), Label(1), order({3, 4})) == sum_of({order({3, 4})}));
}

TEST_CASE("composition matches the filtering oracle", "[zinbiel]")
{
    const std::vector<TotalOrder> outer{order({1, 2, 3}), order({3, 1, 2}), order({2, 3, 1})};
    const std::vector<TotalOrder> inner{order({4, 5}), order({5, 4, 6}), order({6})};
    for (const auto& pi : outer)
        for (const auto& sigma : inner)
            for (const auto& i : pi)
                CHECK(zinb_compose(pi, i, sigma) == testing::zinb_compose_by_filter(pi, i, sigma));
}

TEST_CASE("order sums of shrubs", "[zinbiel]")
{
    CHECK(gamma(generator_c(1, 2)) == sum_of({order({1, 2}), order({2, 1})}));
    CHECK(gamma(generator_d(2, 1)) == sum_of({order({2, 1})}));
    CHECK(gamma(Shrub::trivial(Label(1))) == sum_of({order({1})}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            const auto orders = compatible_orders(p);
            CHECK(std::set<TotalOrder>(orders.begin(), orders.end()) == testing::compatible_orders_by_filter(p));
            CHECK(gamma_by_generators(p) == gamma(p));
        }
}

TEST_CASE("order sums respect composition", "[zinbiel]")
{
    const Shrub p = generator_d(1, 2);
    const Shrub q = generator_c(3, 4);
    for (const auto& i : p.labels())
        CHECK(gamma(compose(p, i, q)) == zinb_compose(gamma(p), i, gamma(q)));
}

TEST_CASE("the antichain is not double counted", "[zinbiel]")
{
    const auto both = sum_of({order({1, 2}), order({2, 1})});
    const auto inner = sum_of({order({3, 4}), order({4, 3})});
    const auto z = zinb_compose(both, Label(1), inner);
    CHECK(z.terms().size() == 6);
    CHECK(z == gamma(compose(generator_c(1, 2), Label(1), generator_c(3, 4))));
}

TEST_CASE("composition agrees with mould composition of the suffix-sum fractions", "[zinbiel]")
{
    const std::vector<TotalOrder> outer{order({1, 2}), order({2, 1}), order({1, 2, 3}), order({3, 1, 2}), order({2, 3, 1})};
    const std::vector<TotalOrder> inner{order({4, 5}), order({5, 4}), order({4, 6, 5})};
    for (const auto& pi : outer)
        for (const auto& sigma : inner)
            for (const auto& i : pi) {
                const auto lhs = embed_zinb(zinb_compose(pi, i, sigma));
                const auto rhs = mould_compose(embed_zinb(ZinbElement::basis(pi)), i, embed_zinb(ZinbElement::basis(sigma)));
                CHECK(equals(lhs, rhs));
            }
}
