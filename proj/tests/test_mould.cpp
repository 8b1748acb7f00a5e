#include "support.hpp"

using namespace shrubs;
using test_support::code_of;
using test_support::order;

namespace {

MouldElement single(const char* text, const LabelSet& labels) { return MouldElement::single(parse_fraction(text), labels); }

ZinbElement sum_of(std::initializer_list<TotalOrder> orders)
{
    ZinbElement x(make_label_set(*orders.begin()));
    for (const auto& o : orders)
        x.add(o, Rational(1));
    return x;
}

bool same_by_expansion(const MouldElement& a, const MouldElement& b)
{
    const auto [pa, qa] = expand(a);
    const auto [pb, qb] = expand(b);
    return pa * qb == pb * qa;
}

} // namespace

TEST_CASE("composition of moulds", "[mould]")
{
    const auto f = parse_fraction("1/((u1)(u2))");
    const auto g = parse_fraction("1/((u3)(u4))");
    CHECK(to_text(mould_compose(f, Label(1), g, iota_labels(2, 3))) == "1/((u2)(u3)(u4))");
    const auto d = parse_fraction("1/((u1)(u1+u2))");
    CHECK(to_text(mould_compose(d, Label(2), g, iota_labels(2, 3))) == "(u3+u4)/((u1)(u3)(u4)(u1+u3+u4))");
}

TEST_CASE("orders embed as suffix-sum fractions", "[mould]")
{
    CHECK(to_text(embed_order(order({2, 1}))) == "1/((u1)(u1+u2))");
    CHECK(to_text(embed_order(order({1, 2, 3}))) == "1/((u3)(u2+u3)(u1+u2+u3))");
    CHECK(equals(sum_of({order({1, 2}), order({2, 1})}), single("1/((u1)(u2))", iota_labels(2))));
}

TEST_CASE("generator images and the closed formula", "[mould]")
{
    CHECK(to_text(kappa(generator_c(1, 2))) == "1/((u1)(u2))");
    CHECK(to_text(kappa(generator_d(2, 1))) == "1/((u1)(u1+u2))");
    CHECK(to_text(fraction_of_shrub(generator_d(2, 1))) == "1/((u1)(u1+u2))");
    CHECK(to_text(kappa(Shrub::trivial(Label(1)))) == "1/((u1))");
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            const auto f = fraction_of_shrub(p);
            CHECK(kappa(p) == f);
            CHECK(f.is_reduced());
            CHECK(f.is_squarefree());
            CHECK(equals(gamma(p), MouldElement::single(f, p.labels())));
        }
}

TEST_CASE("equality by cancellation agrees with expansion", "[mould]")
{
    const auto a = single("1/((u1)(u2))", iota_labels(2));
    MouldElement b(iota_labels(2));
    b.add(Rational(1), parse_fraction("1/((u1)(u1+u2))"));
    b.add(Rational(1), parse_fraction("1/((u2)(u1+u2))"));
    CHECK(equals(a, b));
    CHECK(same_by_expansion(a, b));
    CHECK(equals(a, a));
    CHECK_FALSE(equals(single("1/(u1)", iota_labels(2)), single("1/(u2)", iota_labels(2))));
    CHECK_FALSE(same_by_expansion(single("1/(u1)", iota_labels(2)), single("1/(u2)", iota_labels(2))));

    for (int n = 1; n <= 3; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            const auto x = embed_zinb(gamma(p));
            const auto y = MouldElement::single(kappa(p), p.labels());
            CHECK(equals(x, y));
            CHECK(same_by_expansion(x, y));
            const auto z = MouldElement::single(kappa(p).negated(), p.labels());
            CHECK_FALSE(equals(x, z));
            CHECK_FALSE(same_by_expansion(x, z));
        }
}

TEST_CASE("expansion respects its degree cap", "[mould]")
{
    CHECK(code_of([] { expand(single("1/((u1)(u2)(u3))", iota_labels(3)), 2); }) == errc::degree_cap_exceeded);
}

TEST_CASE("extraction of order coefficients", "[mould]")
{
    CHECK(zinb_extract(single("1/((u1)(u1+u2))", iota_labels(2)), iota_labels(2)) == sum_of({order({2, 1})}));
    CHECK(zinb_extract(single("1/((u1)(u2))", iota_labels(2)), iota_labels(2)) == sum_of({order({1, 2}), order({2, 1})}));

    ExtractOptions solve;
    solve.method = ExtractOptions::Method::linear_solve;
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            const auto f = MouldElement::single(kappa(p), p.labels());
            const auto by_residues = zinb_extract(f, p.labels());
            CHECK(by_residues == gamma(p));
            if (n <= 3)
                CHECK(zinb_extract(f, p.labels(), solve) == by_residues);
        }
}

TEST_CASE("extraction rejects fractions outside the image", "[mould]")
{
    CHECK(code_of([] { zinb_extract(single("1/((u1)(u1)(u2))", iota_labels(2)), iota_labels(2)); })
          == errc::not_in_zinbiel_image);
    CHECK(code_of([] { zinb_extract(single("1/((u1)(u3))", iota_labels(2)), iota_labels(2)); })
          == errc::not_in_zinbiel_image);
    CHECK(code_of([] { zinb_extract(single("1/((u1)(u1+2*u2))", iota_labels(2)), iota_labels(2)); })
          == errc::not_in_zinbiel_image);
    ExtractOptions tight;
    tight.cap = 2;
    CHECK(code_of([&] { zinb_extract(single("1/((u1)(u2)(u3))", iota_labels(3)), iota_labels(3), tight); })
          == errc::cap_exceeded);
}

TEST_CASE("deformed generators", "[mould]")
{
    const auto one = deformed_generators(UnivariateRational{{Rational(1)}, {Rational(1)}});
    CHECK(one.c == RationalFunction::from(kappa(generator_c(1, 2))));
    CHECK(one.d == RationalFunction::from(kappa(generator_d(1, 2))));

    const auto lin = deformed_generators(UnivariateRational{{Rational(0), Rational(1)}, {Rational(1)}});
    CHECK(lin.c == RationalFunction::from(parse_fraction("1/(u1+u2)")));

    CHECK(code_of([] { deformed_generators(UnivariateRational{{Rational(0)}, {Rational(1)}}); }) == errc::zero_denominator);
}
