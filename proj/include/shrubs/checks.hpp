#pragma once

// Property suites shared by the `check` command and the acceptance binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shrubs/shrubs.hpp"
#include "shrubs/testing/oracles.hpp"

namespace shrubs::checks {

struct Config {
    int max_n = 5;
    std::uint64_t seed = 20240917;
    int random_cases = 1000;
};

struct Result {
    Result() = default;
    explicit Result(std::string name) : suite(std::move(name)) {}

    std::string suite;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    std::size_t failure_count = 0;
    std::string note;

    bool passed() const { return failure_count == 0; }

    void fail(std::string what)
    {
        if (failures.size() < 8)
            failures.push_back(std::move(what));
        ++failure_count;
    }

    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++cases;
        if (!ok)
            fail(what());
    }
};

namespace detail {

/// Shrubs on labels first..first+n-1.
inline std::vector<Shrub> shrubs_on(int n, int first)
{
    std::vector<Shrub> out;
    for (const auto& p : enumerate_shrubs_bruteforce(n)) {
        std::map<Label, Label> shift;
        for (int k = 1; k <= n; ++k)
            shift.emplace(Label(k), Label(k + first - 1));
        out.push_back(relabel(p, shift));
    }
    return out;
}

inline std::vector<SignedShrub> signed_shrubs(int n)
{
    std::vector<SignedShrub> out;
    for (const auto& p : enumerate_shrubs_bruteforce(n))
        for (int s : {1, -1})
            out.push_back({s, p});
    return out;
}

template <class Fn>
void guarded(Result& r, const std::string& what, Fn&& fn)
{
    try {
        fn();
    } catch (const std::exception& e) {
        ++r.cases;
        r.fail(what + ": " + e.what());
    }
}

inline Shrub shift_labels(const Shrub& p, int offset)
{
    std::map<Label, Label> m;
    for (const auto& l : p.labels())
        m.emplace(l, Label(std::stoi(l.str()) + offset));
    return relabel(p, m);
}

} // namespace detail

/// Isomorphism classes of connected shrubs on five vertices.
inline Result connected_five_count()
{
    Result r{"connected-five"};
    const auto t0 = std::chrono::steady_clock::now();
    const auto classes = isomorphism_classes(connected_only(enumerate_shrubs_bruteforce(5)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.expect(classes.size() == 30, [&] { return "found " + std::to_string(classes.size()) + " classes, expected 30"; });
    r.expect(secs < 60.0, [&] { return "took " + std::to_string(secs) + "s"; });
    // the canonical form must agree with a direct bijection search
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            r.expect(!testing::isomorphic_by_search(classes[a], classes[b]), [&] {
                return "classes " + to_string(classes[a]) + " and " + to_string(classes[b]) + " are isomorphic";
            });
    r.note = std::to_string(classes.size()) + " classes in " + std::to_string(secs) + "s";
    return r;
}

/// Generator closure against brute force over graded graphs.
inline Result enumeration(const Config& c)
{
    Result r{"enumeration"};
    std::string counts;
    for (int n = 1; n <= c.max_n; ++n) {
        auto brute = enumerate_shrubs_bruteforce(n);
        auto gens = enumerate_shrubs_by_generators(n);
        r.expect(brute == gens, [&] {
            return "n=" + std::to_string(n) + ": brute force " + std::to_string(brute.size()) + " vs generators "
                   + std::to_string(gens.size());
        });
        counts += (n > 1 ? "," : "") + std::to_string(brute.size());
    }
    r.note = "labelled counts " + counts;
    return r;
}

/// Associativity, unit and equivariance of composition.
inline Result operad_axioms(const Config& c)
{
    Result r{"operad"};
    std::vector<std::vector<Shrub>> base(4);
    for (int n = 1; n <= 3; ++n)
        base[static_cast<std::size_t>(n)] = enumerate_shrubs_bruteforce(n);

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int d = 1; d <= 2; ++d)
                for (const auto& p0 : base[static_cast<std::size_t>(a)])
                    for (const auto& q0 : base[static_cast<std::size_t>(b)])
                        for (const auto& s0 : base[static_cast<std::size_t>(d)]) {
                            const Shrub p = p0, q = detail::shift_labels(q0, a), s = detail::shift_labels(s0, a + b);
                            for (const auto& i : p.labels()) {
                                for (const auto& j : p.labels())
                                    if (i != j)
                                        r.expect(compose(compose(p, i, q), j, s) == compose(compose(p, j, s), i, q),
                                                 [&] { return "parallel " + to_string(p) + " at " + i.str() + "," + j.str(); });
                                for (const auto& k : q.labels())
                                    r.expect(compose(compose(p, i, q), k, s) == compose(p, i, compose(q, k, s)),
                                             [&] { return "sequential " + to_string(p) + " at " + i.str() + "," + k.str(); });
                            }
                        }
    for (int a = 1; a <= 3; ++a)
        for (const auto& p : base[static_cast<std::size_t>(a)]) {
            for (const auto& i : p.labels())
                r.expect(compose(p, i, Shrub::trivial(i)) == p, [&] { return "right unit on " + to_string(p); });
            r.expect(compose(Shrub::trivial(Label("x")), Label("x"), p) == p, [&] { return "left unit on " + to_string(p); });
        }

    std::mt19937_64 rng(c.seed);
    for (int t = 0; t < c.random_cases; ++t) {
        std::uniform_int_distribution<int> size(1, 6);
        int a = 0, b = 0, d = 0;
        do {
            a = size(rng);
            b = size(rng);
            d = size(rng);
        } while (a + b + d > 8);
        const Shrub p = testing::random_shrub(rng, iota_labels(a));
        const Shrub q = testing::random_shrub(rng, iota_labels(b, a + 1));
        const Shrub s = testing::random_shrub(rng, iota_labels(d, a + b + 1));
        auto pick = [&](const Shrub& x) { return x.labels()[std::uniform_int_distribution<std::size_t>(0, x.size() - 1)(rng)]; };
        const Label i = pick(p), k = pick(q);
        r.expect(compose(compose(p, i, q), k, s) == compose(p, i, compose(q, k, s)),
                 [&] { return "random sequential " + to_string(p) + " " + to_string(q) + " " + to_string(s); });
        if (p.size() >= 2) {
            Label j = pick(p);
            while (j == i)
                j = pick(p);
            r.expect(compose(compose(p, i, q), j, s) == compose(compose(p, j, s), i, q),
                     [&] { return "random parallel " + to_string(p) + " " + to_string(q) + " " + to_string(s); });
        }
        // a relabelling of all labels involved, onto fresh names
        std::vector<int> image(static_cast<std::size_t>(a + b + d));
        std::iota(image.begin(), image.end(), 1);
        std::shuffle(image.begin(), image.end(), rng);
        std::map<Label, Label> sigma;
        for (int x = 1; x <= a + b + d; ++x)
            sigma.emplace(Label(x), Label("v" + std::to_string(image[static_cast<std::size_t>(x - 1)])));
        auto restrict = [&](const Shrub& x) {
            std::map<Label, Label> m;
            for (const auto& l : x.labels())
                m.emplace(l, sigma.at(l));
            return relabel(x, m);
        };
        r.expect(restrict(compose(p, i, q)) == compose(restrict(p), sigma.at(i), restrict(q)),
                 [&] { return "equivariance " + to_string(p) + " at " + i.str(); });
    }
    return r;
}

/// phi(psi(P)) = P and the defining relations.
inline Result presentation(const Config& c)
{
    Result r{"presentation"};
    const int top = std::max(c.max_n, 1);
    for (int n = 1; n <= top; ++n)
        for (const auto& p : enumerate_shrubs_by_generators(n))
            r.expect(evaluate(decompose(p)) == p, [&] { return "phi(psi(P)) != P for " + to_string(p); });
    const Label star("*");
    const Shrub nap1 = compose(generator_d(star, 1), star, generator_d(3, 2));
    const Shrub nap2 = compose(generator_d(star, 2), star, generator_d(3, 1));
    const Shrub nap3 = compose(generator_d(3, star), star, generator_c(1, 2));
    r.expect(nap1 == nap2 && nap2 == nap3, [&] {
        return "NAP relation: " + to_string(nap1) + " / " + to_string(nap2) + " / " + to_string(nap3);
    });
    const Shrub comm1 = compose(generator_c(star, 1), star, generator_c(2, 3));
    const Shrub comm2 = compose(generator_c(star, 2), star, generator_c(3, 1));
    r.expect(comm1 == comm2, [&] { return "commutative relation: " + to_string(comm1) + " / " + to_string(comm2); });
    r.expect(generator_c(1, 2) == generator_c(2, 1), [] { return "C is not symmetric"; });
    r.note = "n <= " + std::to_string(top);
    return r;
}

/// gamma is a morphism and equals the compatible-order sum.
inline Result zinbiel_morphism(const Config& c)
{
    Result r{"zinbiel"};
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& p : detail::shrubs_on(a, 1))
                for (const auto& q : detail::shrubs_on(b, a + 1))
                    for (const auto& i : p.labels())
                        r.expect(gamma(compose(p, i, q)) == zinb_compose(gamma(p), i, gamma(q)),
                                 [&] { return "gamma(P o_" + i.str() + " Q) for " + to_string(p) + ", " + to_string(q); });
    for (int n = 1; n <= c.max_n; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            ZinbElement by_filter(p.labels());
            for (const auto& o : testing::compatible_orders_by_filter(p))
                by_filter.add(o, Rational(1));
            r.expect(gamma(p) == by_filter && gamma_by_generators(p) == by_filter,
                     [&] { return "gamma(" + to_string(p) + ") = " + to_string(gamma(p)); });
        }
    return r;
}

/// kappa = f_P, and f_P reduced and squarefree.
inline Result mould_formula(const Config& c)
{
    Result r{"mould"};
    for (int n = 1; n <= c.max_n; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            auto f = fraction_of_shrub(p);
            r.expect(kappa(p) == f, [&] { return "kappa(" + to_string(p) + ") = " + to_text(kappa(p)) + " vs " + to_text(f); });
        }
    for (const auto& p : enumerate_shrubs_by_generators(c.max_n + 1)) {
        auto f = fraction_of_shrub(p);
        r.expect(f.is_reduced() && f.is_squarefree() && f.sign() == 1 && f.scalar() == 1,
                 [&] { return "f_P not reduced/squarefree: " + to_text(f); });
    }
    r.note = "kappa = f_P for n <= " + std::to_string(c.max_n) + "; reduced for n <= " + std::to_string(c.max_n + 1);
    return r;
}

inline const char* const six_vertex_fraction_text =
    "(uF+uG)(uB+uE+uF+uG)/((uA)(uB)(uE)(uF)(uG)(uE+uF+uG)(uA+uB+uE+uF+uG)(uA+uB+uC+uE+uF+uG))";

/// Rebuilds the shrub of a six-vertex sample fraction and reproduces the text.
inline Result six_vertex_fraction(const std::string& text = six_vertex_fraction_text)
{
    Result r{"six-vertex-fraction"};
    detail::guarded(r, "reconstruct", [&] {
        const auto f = parse_fraction(text);
        const Shrub p = reconstruct(f);
        r.expect(is_valid(p) && p.size() == 6, [&] { return "rebuilt " + to_string(p); });
        const auto classes = ram_classes(p);
        std::set<LabelSet> members;
        for (const auto& rc : classes)
            members.insert(rc.members);
        r.expect(classes.size() == 2 && members == std::set<LabelSet>{{Label("A")}, {Label("E")}},
                 [&] { return "ram classes of " + to_string(p); });
        r.expect(to_text(kappa(p)) == to_text(f) && to_text(f) == text,
                 [&] { return "kappa gives " + to_text(kappa(p)) + " for input " + text; });
        r.note = to_string(p);
    });
    return r;
}

/// Distinct fractions, reconstruction round trip, brute-force inverse.
inline Result injectivity(const Config& c)
{
    Result r{"injectivity"};
    for (int n = 1; n <= c.max_n; ++n) {
        const auto all = enumerate_shrubs_bruteforce(n);
        std::set<FactoredFraction> images;
        for (const auto& p : all) {
            const auto f = kappa(p);
            images.insert(f);
            detail::guarded(r, "reconstruct " + to_string(p), [&] {
                r.expect(reconstruct(f) == p, [&] { return "reconstruct(kappa(" + to_string(p) + "))"; });
            });
            if (n <= 4)
                r.expect(testing::reconstruct_by_search(f, all) == p,
                         [&] { return "brute-force inverse disagrees on " + to_string(p); });
        }
        r.expect(images.size() == all.size(), [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " fractions for "
                   + std::to_string(all.size()) + " shrubs";
        });
    }
    return r;
}

/// The action stays inside signed shrubs and is a group action.
inline Result anticyclic_closure(const Config& c)
{
    Result r{"closure"};
    for (int n = 1; n <= c.max_n; ++n)
        for (const auto& x : detail::signed_shrubs(n))
            for (int i = 1; i <= n; ++i)
                detail::guarded(r, "tau_0," + std::to_string(i) + " on " + to_string(x), [&] {
                    auto y = act(transposition(n, 0, i), x);
                    r.expect(is_valid(y.shrub) && (y.sign == 1 || y.sign == -1),
                             [&] { return "invalid image " + to_string(y); });
                });
    std::mt19937_64 rng(c.seed);
    const int pairs = c.random_cases / 2;
    for (int t = 0; t < pairs; ++t) {
        const int n = std::uniform_int_distribution<int>(1, c.max_n)(rng);
        const SignedShrub x{std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1, testing::random_shrub(rng, iota_labels(n))};
        const auto s = testing::random_permutation(rng, n);
        const auto u = testing::random_permutation(rng, n);
        detail::guarded(r, "group law", [&] {
            r.expect(act(compose_permutations(s, u), x) == act(s, act(u, x)), [&] {
                return "act(" + to_string(s) + " * " + to_string(u) + ") on " + to_string(x);
            });
            r.expect(act(identity_permutation(n), x) == x, [&] { return "identity on " + to_string(x); });
        });
    }
    return r;
}

/// Ramification count and the folded multiset pair are constant on orbits.
inline Result orbit_invariants(const Config& c)
{
    Result r{"orbits"};
    std::size_t orbits = 0;
    for (int n = 1; n <= c.max_n; ++n) {
        std::set<SignedShrub> seen;
        for (const auto& x : detail::signed_shrubs(n)) {
            if (seen.count(x))
                continue;
            detail::guarded(r, "orbit of " + to_string(x), [&] {
                const auto o = orbit(x);
                ++orbits;
                const auto inv = orbit_invariant(x);
                const int ram = ram_count_preserved(x);
                for (const auto& y : o) {
                    seen.insert(y);
                    r.expect(orbit_invariant(y) == inv && ram_count_preserved(y) == ram,
                             [&] { return to_string(y) + " differs from " + to_string(x); });
                    r.expect(static_cast<int>(fraction_of_shrub(y.shrub).numerator().size()) == ram,
                             [&] { return "numerator degree of " + to_string(y); });
                }
            });
        }
    }
    r.note = std::to_string(orbits) + " orbits";
    return r;
}

/// Tree model of the action on forests and the count of signed rooted trees.
inline Result forest_action(const Config& c)
{
    Result r{"forests"};
    for (int n = 1; n <= c.max_n; ++n) {
        std::set<CTree> images;
        for (const auto& x : detail::signed_shrubs(n)) {
            if (!is_forest(x.shrub))
                continue;
            images.insert(b0(x));
            r.expect(b0_inverse(b0(x)) == x, [&] { return "b0 round trip on " + to_string(x); });
            for (int i = 1; i <= n; ++i) {
                const auto t = transposition(n, 0, i);
                detail::guarded(r, "forest action", [&] {
                    r.expect(forest_act(t, x) == act(t, x), [&] {
                        return "tau_0," + std::to_string(i) + " on " + to_string(x) + ": " + to_string(forest_act(t, x))
                               + " vs " + to_string(act(t, x));
                    });
                });
            }
        }
        const auto trees = enumerate_ctrees(n);
        std::size_t expected = 2;
        for (int k = 0; k < n - 1; ++k)
            expected *= static_cast<std::size_t>(n + 1);
        r.expect(trees.size() == expected, [&] {
            return "|C(" + std::to_string(n + 1) + ")| = " + std::to_string(trees.size()) + ", expected " + std::to_string(expected);
        });
        r.expect(images == std::set<CTree>(trees.begin(), trees.end()),
                 [&] { return "b0 is not onto the trees for n=" + std::to_string(n); });
    }
    return r;
}

/// Shrub counts against labelled series-parallel posets.
inline Result series_parallel(const Config& c)
{
    Result r{"series-parallel"};
    std::string counts;
    for (int n = 1; n <= c.max_n; ++n) {
        const auto sp = testing::series_parallel_count(n);
        const auto shrubs = enumerate_shrubs_bruteforce(n).size();
        r.expect(sp == shrubs, [&] {
            return "n=" + std::to_string(n) + ": " + std::to_string(shrubs) + " shrubs vs " + std::to_string(sp) + " posets";
        });
        counts += (n > 1 ? "," : "") + std::to_string(sp);
    }
    r.note = "counts " + counts;
    return r;
}

namespace detail {

inline RationalFunction renamed(const RationalFunction& f, const Label& a, const Label& b)
{
    return f.rename({{Label(1), a}, {Label(2), b}});
}

} // namespace detail

/// Associativity of C_t and the NAP relation for (C_t, D_t), for one t.
inline void deformation_relations(Result& r, const UnivariateRational& t, const std::string& name)
{
    const auto g = deformed_generators(t);
    const Label star("*"), one(1), two(2), three(3);
    auto C = [&](const Label& a, const Label& b) { return detail::renamed(g.c, a, b); };
    auto D = [&](const Label& a, const Label& b) { return detail::renamed(g.d, a, b); };
    const LabelSet l12 = make_label_set({one, two}), l23 = make_label_set({two, three}), l13 = make_label_set({one, three});

    r.expect(C(one, two) == C(two, one), [&] { return "t=" + name + ": C_t is not commutative"; });
    const auto a1 = mould_compose(C(star, one), star, C(two, three), l23);
    const auto a2 = mould_compose(C(star, two), star, C(three, one), l13);
    const auto a3 = mould_compose(C(star, three), star, C(one, two), l12);
    r.expect(a1 == a2 && a2 == a3, [&] { return "t=" + name + ": C_t is not associative"; });

    const auto n1 = mould_compose(D(star, one), star, D(three, two), make_label_set({three, two}));
    const auto n2 = mould_compose(D(star, two), star, D(three, one), make_label_set({three, one}));
    const auto n3 = mould_compose(D(three, star), star, C(one, two), l12);
    r.expect(n1 == n2 && n2 == n3, [&] {
        return "t=" + name + ": NAP relation fails: " + to_string(n1) + " | " + to_string(n2) + " | " + to_string(n3);
    });
}

inline Result deformation()
{
    Result r{"deformation"};
    detail::guarded(r, "deformation", [&] {
        const UnivariateRational one{{Rational(1)}, {Rational(1)}};
        const UnivariateRational u{{Rational(0), Rational(1)}, {Rational(1)}};
        const UnivariateRational one_plus_u{{Rational(1), Rational(1)}, {Rational(1)}};
        deformation_relations(r, one, "1");
        deformation_relations(r, u, "u");
        deformation_relations(r, one_plus_u, "1+u");

        const auto g = deformed_generators(one);
        const auto c = RationalFunction::from(kappa(generator_c(1, 2)));
        const auto d = RationalFunction::from(kappa(generator_d(1, 2)));
        r.expect(g.c == c && g.d == d, [&] { return "t=1 gives " + to_string(g.c) + ", " + to_string(g.d); });
        // exact form: the t=1 generators expand to the plain fractions with no extra factors
        r.expect(g.c.num == c.num && g.c.den == c.den, [&] { return "t=1: C_t is " + to_string(g.c); });
        r.expect(g.d.num * d.den == d.num * g.d.den, [&] { return "t=1: D_t is " + to_string(g.d); });
        const auto gu = deformed_generators(u);
        const Polynomial u1 = Polynomial::variable(Label(1)), u2 = Polynomial::variable(Label(2));
        r.expect(gu.c == RationalFunction(Polynomial(Rational(1)), u1 + u2), [&] { return "t=u: C_t is " + to_string(gu.c); });
    });
    return r;
}

/// Further invariants: extraction, kappa_2, the embedding and the closed formula's shape.
inline Result mould_properties(const Config& c)
{
    Result r{"mould-properties"};
    for (int n = 1; n <= c.max_n; ++n)
        for (const auto& p : enumerate_shrubs_bruteforce(n)) {
            const auto f = fraction_of_shrub(p);
            detail::guarded(r, "extract " + to_string(p), [&] {
                r.expect(zinb_extract(MouldElement::single(f, p.labels()), p.labels()) == gamma(p),
                         [&] { return "zinb_extract(kappa(" + to_string(p) + "))"; });
            });
            r.expect(f.numerator().size() == ram_classes(p).size(), [&] { return "numerator degree of " + to_string(p); });
            if (is_connected(p))
                r.expect(std::binary_search(f.denominator().begin(), f.denominator().end(),
                                            LinearForm::subset_sum(p.labels())),
                         [&] { return "no full-sum factor for " + to_string(p); });
            const auto comps = fraction_components(f);
            std::vector<LabelSet> expected;
            for (const auto& q : connected_components(p))
                expected.push_back(q.labels());
            std::sort(expected.begin(), expected.end());
            r.expect(comps == expected, [&] { return "fraction components of " + to_string(p); });
            detail::guarded(r, "heights " + to_string(p), [&] {
                r.expect(recover_heights(f, p.labels()) == p.height_map(), [&] { return "heights of " + to_string(p); });
            });
        }
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= std::min(6, c.max_n + 1); ++b)
            for (const auto& q : detail::shrubs_on(a, 1))
                for (const auto& s : detail::shrubs_on(b, a + 1)) {
                    const auto fq = kappa(q), fs = kappa(s);
                    r.expect(kappa(disjoint_union(q, s)) == fq * fs, [&] { return "kappa of union " + to_string(q); });
                    std::vector<Label> all(q.labels());
                    all.insert(all.end(), s.labels().begin(), s.labels().end());
                    const auto ratio = FactoredFraction::from_forms({LinearForm::subset_sum(q.labels())},
                                                                    {LinearForm::subset_sum(make_label_set(all))});
                    r.expect(kappa(graft(q, s)) == fq * fs * ratio, [&] { return "kappa of graft " + to_string(q); });
                }
    auto orders_on = [](const LabelSet& labels) {
        std::vector<TotalOrder> out;
        TotalOrder o = labels;
        do
            out.push_back(o);
        while (std::next_permutation(o.begin(), o.end()));
        return out;
    };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const auto& pi : orders_on(iota_labels(a)))
                for (const auto& sigma : orders_on(iota_labels(b, a + 1)))
                    for (const auto& i : iota_labels(a)) {
                        const auto z = zinb_compose(ZinbElement::basis(pi), i, ZinbElement::basis(sigma));
                        r.expect(z == testing::zinb_compose_by_filter(pi, i, sigma),
                                 [&] { return "zinb_compose against the filter oracle"; });
                        const auto lhs = embed_zinb(z);
                        const auto rhs = mould_compose(embed_zinb(ZinbElement::basis(pi)), i, embed_zinb(ZinbElement::basis(sigma)));
                        r.expect(equals(lhs, rhs), [&] { return "embedding does not intertwine compositions"; });
                    }
    return r;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"connected-five",   "enumeration", "operad",   "presentation",
                                                "zinbiel",      "mould",       "six-vertex-fraction",
                                                "injectivity",  "closure",     "orbits",   "forests",
                                                "series-parallel", "deformation", "mould-properties"};
    return names;
}

inline Result run(const std::string& name, const Config& c)
{
    if (name == "connected-five")
        return connected_five_count();
    if (name == "enumeration")
        return enumeration(c);
    if (name == "operad")
        return operad_axioms(c);
    if (name == "presentation")
        return presentation(c);
    if (name == "zinbiel")
        return zinbiel_morphism(c);
    if (name == "mould")
        return mould_formula(c);
    if (name == "six-vertex-fraction")
        return six_vertex_fraction();
    if (name == "injectivity")
        return injectivity(c);
    if (name == "closure")
        return anticyclic_closure(c);
    if (name == "orbits")
        return orbit_invariants(c);
    if (name == "forests")
        return forest_action(c);
    if (name == "series-parallel")
        return series_parallel(c);
    if (name == "deformation")
        return deformation();
    if (name == "mould-properties")
        return mould_properties(c);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace shrubs::checks
