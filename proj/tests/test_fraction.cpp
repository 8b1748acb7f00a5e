#include "support.hpp"

using namespace shrubs;
using test_support::code_of;

TEST_CASE("canonical text round trip", "[fraction]")
{
    for (const char* text : {"1/((u1)(u1+u2))", "1/((u1)(u2))", "-2*(u1)/(3*(u2)(u1+u2))",
                             "(uF+uG)(uB+uE+uF+uG)/((uA)(uB)(uE)(uF)(uG)(uE+uF+uG)(uA+uB+uE+uF+uG)(uA+uB+uC+uE+uF+uG))"})
        CHECK(to_text(parse_fraction(text)) == text);
}

TEST_CASE("the parser accepts loose spellings", "[fraction]")
{
    const auto f = parse_fraction("1/((u1)(u1+u2))");
    CHECK(parse_fraction(" 1 / ( (u2+u1) (u1) ) ") == f);
    CHECK(parse_fraction("1/(u1 (u1 + u2))") == f);
    CHECK(parse_fraction("2/((2u1)(u1+u2))") == f);
    CHECK(parse_fraction("1/((-u1)(-u1-u2))") == f);
    CHECK(parse_fraction("(u3)/((u1)(u1+u2)(u3))") == f);
    CHECK(parse_fraction("1/(u1*u2)") == parse_fraction("1/((u1)(u2))"));
    CHECK(parse_fraction("(u1-u2)/(u3)").sign() == 1);
    CHECK(to_text(parse_fraction("(u2-u1)/(u3)")) == "-(u1-u2)/((u3))");
}

TEST_CASE("parser errors", "[fraction]")
{
    CHECK(code_of([] { parse_fraction("1/("); }) == errc::parse_error);
    CHECK(code_of([] { parse_fraction("1/((u1)"); }) == errc::parse_error);
    CHECK(code_of([] { parse_fraction("x1"); }) == errc::parse_error);
    CHECK(code_of([] { parse_fraction("(u1-u1)/(u2)"); }) == errc::parse_error);
    CHECK(code_of([] { parse_fraction("1/(u1-u1)"); }) == errc::zero_denominator);
    CHECK(code_of([] { parse_fraction("1/0"); }) == errc::zero_denominator);
}

TEST_CASE("linear forms", "[fraction]")
{
    const auto s = LinearForm::subset_sum(iota_labels(3));
    CHECK(s.is_subset_sum());
    CHECK(s.coefficient_sum() == 3);
    CHECK(s.support() == iota_labels(3));
    CHECK(LinearForm::variable(Label(2)) < s);
    const auto n = LinearForm::normalize(RawForm{{Label(1), -2}, {Label(2), -4}});
    REQUIRE(n);
    CHECK(n->sign == -1);
    CHECK(n->content == 2);
    CHECK(to_text(n->form) == "u1+2*u2");
    CHECK_FALSE(LinearForm::normalize(RawForm{{Label(1), 0}}));
}

TEST_CASE("factored fraction arithmetic", "[fraction]")
{
    const auto f = parse_fraction("(u1+u2)/((u1)(u2))");
    const auto g = parse_fraction("1/(u1+u2)");
    CHECK(f * g == parse_fraction("1/((u1)(u2))"));
    CHECK(f.inverse() * f == FactoredFraction());
    CHECK(f.negated().sign() == -1);
    CHECK(f.is_reduced());
    CHECK(f.is_squarefree());
    CHECK_FALSE(parse_fraction("1/((u1)(u1))").is_squarefree());
    CHECK(f.degree() == -1);
}

TEST_CASE("polynomials", "[fraction]")
{
    const auto u1 = Polynomial::variable(Label(1)), u2 = Polynomial::variable(Label(2));
    const auto p = (u1 + u2) * (u1 + u2 + u2);
    const auto q = p.divide(LinearForm::subset_sum(iota_labels(2)));
    REQUIRE(q);
    CHECK(*q == u1 + u2 + u2);
    CHECK_FALSE(p.divide(LinearForm::variable(Label(1))));
    CHECK(p.evaluate({{Label(1), Rational(1)}, {Label(2), Rational(2)}}) == 15);
    CHECK(p.substitute(Label(2), Polynomial(Rational(0))) == u1 * u1);

    const auto r = RationalFunction::from(parse_fraction("1/((u1)(u2))"));
    const auto s = RationalFunction::from(parse_fraction("1/((u1)(u1+u2))")) + RationalFunction::from(parse_fraction("1/((u2)(u1+u2))"));
    CHECK(r == s);
}

TEST_CASE("permutations", "[fraction]")
{
    CHECK(parse_permutation("1,0,2") == transposition(2, 0, 1));
    CHECK(code_of([] { parse_permutation("1,1,2"); }) == errc::parse_error);
    CHECK(code_of([] { parse_permutation("a,b"); }) == errc::parse_error);
    const Permutation s{1, 2, 0}, t{0, 2, 1};
    CHECK(compose_permutations(s, t) == Permutation{1, 0, 2});
    CHECK(compose_permutations(s, identity_permutation(2)) == s);
    CHECK(is_permutation(s));
    CHECK_FALSE(is_permutation(Permutation{0, 0}));
}
