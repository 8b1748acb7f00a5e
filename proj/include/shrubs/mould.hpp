#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "shrubs/fraction.hpp"
#include "shrubs/genword.hpp"
#include "shrubs/operad.hpp"
#include "shrubs/polynomial.hpp"
#include "shrubs/shrub.hpp"
#include "shrubs/substitution.hpp"
#include "shrubs/zinbiel.hpp"

namespace shrubs {

/// Element of Mould(I): a rational combination of factored fractions. Keys are
/// stored with sign + and scalar 1; the numeric part lives in the coefficient.
class MouldElement {
public:
    MouldElement() = default;
    explicit MouldElement(LabelSet labels) : labels_(std::move(labels)) {}

    static MouldElement single(const FactoredFraction& f, LabelSet labels)
    {
        MouldElement x(std::move(labels));
        x.add(Rational(1), f);
        return x;
    }

    const LabelSet& labels() const noexcept { return labels_; }
    const std::map<FactoredFraction, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Rational& c, const FactoredFraction& f)
    {
        Rational v = c * f.coefficient();
        if (v == 0)
            return;
        auto [it, fresh] = terms_.emplace(f.monic(), v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    MouldElement& operator+=(const MouldElement& other)
    {
        if (labels_.empty())
            labels_ = other.labels_;
        for (const auto& [f, c] : other.terms_)
            add(c, f);
        return *this;
    }

    friend MouldElement operator*(const Rational& c, MouldElement x)
    {
        if (c == 0)
            return MouldElement(x.labels_);
        for (auto& [f, v] : x.terms_)
            v *= c;
        return x;
    }

    /// Structural equality of canonical forms; use equals() for equality as functions.
    friend bool operator==(const MouldElement&, const MouldElement&) = default;

private:
    LabelSet labels_;
    std::map<FactoredFraction, Rational> terms_;
};

inline std::string to_string(const MouldElement& x)
{
    if (x.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [f, c] : x.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        s += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        if (mag != 1)
            s += to_string(mag) + "*";
        s += to_text(f);
        first = false;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Composition
// ---------------------------------------------------------------------------

/// f o_i g = u<J> * g * f|_{u_i = u<J>}, where J (`inner`) is the label set of g.
inline FactoredFraction mould_compose(const FactoredFraction& f, const Label& i, const FactoredFraction& g,
                                      const LabelSet& inner)
{
    auto lifted = f.try_map_forms([&](RawForm r) {
        auto it = r.find(i);
        if (it == r.end())
            return r;
        const auto c = it->second;
        r.erase(it);
        for (const auto& j : inner)
            add_term(r, j, c);
        return r;
    });
    return FactoredFraction::from_forms({LinearForm::subset_sum(inner)}, {}) * g * *lifted;
}

namespace detail {

inline LabelSet composed_labels(const LabelSet& outer, const Label& i, const LabelSet& inner)
{
    if (!contains(outer, i))
        throw error(errc::unknown_label, "'" + i.str() + "' is not in the outer label set");
    LabelSet rest;
    for (const auto& l : outer)
        if (l != i)
            rest.push_back(l);
    require_disjoint(rest, inner);
    rest.insert(rest.end(), inner.begin(), inner.end());
    return make_label_set(std::move(rest));
}

} // namespace detail

inline MouldElement mould_compose(const MouldElement& x, const Label& i, const MouldElement& y)
{
    MouldElement out(detail::composed_labels(x.labels(), i, y.labels()));
    for (const auto& [f, a] : x.terms())
        for (const auto& [g, b] : y.terms())
            out.add(a * b, mould_compose(f, i, g, y.labels()));
    return out;
}

inline RationalFunction mould_compose(const RationalFunction& f, const Label& i, const RationalFunction& g,
                                      const LabelSet& inner)
{
    Polynomial s = Polynomial::from_form(LinearForm::subset_sum(inner));
    return RationalFunction(s, Polynomial(Rational(1))) * g * f.substitute(i, s);
}

// ---------------------------------------------------------------------------
// Zinbiel embedding, kappa and the closed formula
// ---------------------------------------------------------------------------

/// 1 / prod over positions k of (sum of the variables from position k onwards).
inline FactoredFraction embed_order(const TotalOrder& order)
{
    std::vector<LinearForm> den;
    for (std::size_t k = 0; k < order.size(); ++k)
        den.push_back(LinearForm::subset_sum(make_label_set({order.begin() + static_cast<std::ptrdiff_t>(k), order.end()})));
    return FactoredFraction::from_forms({}, std::move(den));
}

inline MouldElement embed_zinb(const ZinbElement& x)
{
    MouldElement out(x.labels());
    for (const auto& [o, c] : x.terms())
        out.add(c, embed_order(o));
    return out;
}

namespace detail {

inline LinearForm mask_sum(const Shrub& p, const std::vector<char>& mask)
{
    LabelSet s;
    for (index v = 0; v < p.size(); ++v)
        if (mask[v])
            s.push_back(p.label(v));
    return LinearForm::subset_sum(s);
}

} // namespace detail

/// The closed formula: one denominator factor per vertex ideal, and per
/// ramification class r a numerator factor (ideal of r- in P minus <r>) over a
/// denominator factor (ideal of r- in P). No cancellation is applied.
inline FactoredFraction fraction_of_shrub(const Shrub& p)
{
    using detail::index;
    const auto n = p.size();
    const std::vector<char> all(n, 1);
    std::vector<LinearForm> num, den;
    for (index v = 0; v < n; ++v) {
        std::vector<char> seed(n, 0);
        seed[v] = 1;
        den.push_back(detail::mask_sum(p, detail::ideal_mask(p, all, seed)));
    }
    for (const auto& r : ram_classes(p)) {
        std::vector<char> members(n, 0), targets(n, 0);
        for (const auto& l : r.members)
            members[p.index_of(l)] = 1;
        for (const auto& l : r.targets)
            targets[p.index_of(l)] = 1;
        auto above = detail::ideal_mask(p, all, members);
        std::vector<char> rest(n);
        for (index v = 0; v < n; ++v)
            rest[v] = !above[v];
        num.push_back(detail::mask_sum(p, detail::ideal_mask(p, rest, targets)));
        den.push_back(detail::mask_sum(p, detail::ideal_mask(p, all, targets)));
    }
    return FactoredFraction::from_forms(std::move(num), std::move(den), 1, 1, false);
}

/// Images of the generators: [a][b] -> 1/(u_a u_b), [a <| b] -> 1/(u_b (u_a + u_b)).
inline FactoredFraction generator_image(GenWord::Gen g, const Label& a, const Label& b)
{
    if (g == GenWord::Gen::C)
        return FactoredFraction::from_forms({}, {LinearForm::variable(a), LinearForm::variable(b)});
    return FactoredFraction::from_forms({}, {LinearForm::variable(b), LinearForm::subset_sum(make_label_set({a, b}))});
}

/// kappa evaluated on the generator decomposition.
inline FactoredFraction kappa(const Shrub& p)
{
    struct Value {
        FactoredFraction f;
        LabelSet labels;
    };
    std::function<Value(const GenWord&)> eval = [&](const GenWord& w) -> Value {
        if (w.is_leaf())
            return {FactoredFraction::from_forms({}, {LinearForm::variable(w.name)}), {w.name}};
        Value v{generator_image(w.gen, w.args[0].name, w.args[1].name), make_label_set({w.args[0].name, w.args[1].name})};
        for (const auto& arg : w.args)
            if (!arg.is_leaf()) {
                Value inner = eval(arg);
                v.labels = detail::composed_labels(v.labels, arg.name, inner.labels);
                v.f = mould_compose(v.f, arg.name, inner.f, inner.labels);
            }
        return v;
    };
    return eval(decompose(p)).f;
}

// ---------------------------------------------------------------------------
// Exact equality
// ---------------------------------------------------------------------------

inline constexpr std::size_t default_degree_cap = 48;

namespace detail {

/// num / prod(den), den a sorted multiset of forms.
struct FormSum {
    Polynomial num;
    std::vector<LinearForm> den;
};

inline void cancel_forms(FormSum& s)
{
    if (s.num.is_zero()) {
        s.den.clear();
        return;
    }
    std::vector<LinearForm> kept;
    const LinearForm* failed = nullptr;
    for (const auto& f : s.den) {
        if (failed && *failed == f) {
            kept.push_back(f);
            continue;
        }
        if (auto q = s.num.divide(f)) {
            s.num = std::move(*q);
            failed = nullptr;
        } else {
            kept.push_back(f);
            failed = &f;
        }
    }
    s.den = std::move(kept);
}

inline std::vector<LinearForm> multiset_minus(const std::vector<LinearForm>& a, const std::vector<LinearForm>& b)
{
    std::vector<LinearForm> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline FormSum add_sums(const FormSum& a, const FormSum& b, std::size_t cap)
{
    if (a.num.is_zero())
        return b;
    if (b.num.is_zero())
        return a;
    std::vector<LinearForm> common;
    std::set_union(a.den.begin(), a.den.end(), b.den.begin(), b.den.end(), std::back_inserter(common));
    if (common.size() > cap)
        throw error(errc::degree_cap_exceeded,
                    "common denominator of degree " + std::to_string(common.size()) + " exceeds " + std::to_string(cap));
    FormSum s{a.num * product_of_forms(multiset_minus(common, a.den))
                  + b.num * product_of_forms(multiset_minus(common, b.den)),
              std::move(common)};
    cancel_forms(s);
    return s;
}

inline FormSum sum_all(std::vector<FormSum> parts, std::size_t cap)
{
    if (parts.empty())
        return {};
    while (parts.size() > 1) {
        std::vector<FormSum> next;
        for (std::size_t k = 0; k + 1 < parts.size(); k += 2)
            next.push_back(add_sums(parts[k], parts[k + 1], cap));
        if (parts.size() % 2)
            next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts.front());
}

inline FormSum as_sum(const MouldElement& x, std::size_t cap)
{
    std::vector<FormSum> parts;
    for (const auto& [f, c] : x.terms())
        parts.push_back({c * f.coefficient() * product_of_forms(f.numerator()), f.denominator()});
    return sum_all(std::move(parts), cap);
}

/// The embedding of a Zinbiel element summed along the prefix tree of its
/// orders, using e_(a w) = e_w / u<a w>.
inline FormSum as_sum(const ZinbElement& x, std::size_t cap)
{
    std::vector<std::pair<TotalOrder, Rational>> orders(x.terms().begin(), x.terms().end());
    std::function<FormSum(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi,
                                                                           std::size_t depth) -> FormSum {
        const auto& first = orders[lo].first;
        if (depth == first.size())
            return {Polynomial(orders[lo].second), {}};
        std::vector<FormSum> parts;
        for (std::size_t k = lo; k < hi;) {
            std::size_t e = k;
            while (e < hi && orders[e].first[depth] == orders[k].first[depth])
                ++e;
            parts.push_back(rec(k, e, depth + 1));
            k = e;
        }
        FormSum s = sum_all(std::move(parts), cap);
        if (s.num.is_zero())
            return s;
        LinearForm tail = LinearForm::subset_sum(
            make_label_set({first.begin() + static_cast<std::ptrdiff_t>(depth), first.end()}));
        if (auto q = s.num.divide(tail))
            s.num = std::move(*q);
        else
            s.den.insert(std::upper_bound(s.den.begin(), s.den.end(), tail), tail);
        return s;
    };
    if (orders.empty())
        return {};
    return rec(0, orders.size(), 0);
}

inline bool same_value(const FormSum& a, const FormSum& b)
{
    if (a.num.is_zero() || b.num.is_zero())
        return a.num.is_zero() && b.num.is_zero();
    return a.num * product_of_forms(multiset_minus(b.den, a.den)) == b.num * product_of_forms(multiset_minus(a.den, b.den));
}

} // namespace detail

/// x = N / D with D the product of all distinct denominator forms at their
/// largest multiplicity.
inline std::pair<Polynomial, Polynomial> expand(const MouldElement& x, std::size_t cap = default_degree_cap)
{
    std::vector<LinearForm> common;
    for (const auto& [f, c] : x.terms()) {
        std::vector<LinearForm> u;
        std::set_union(common.begin(), common.end(), f.denominator().begin(), f.denominator().end(),
                       std::back_inserter(u));
        common = std::move(u);
    }
    if (common.size() > cap)
        throw error(errc::degree_cap_exceeded,
                    "common denominator of degree " + std::to_string(common.size()) + " exceeds " + std::to_string(cap));
    Polynomial n;
    for (const auto& [f, c] : x.terms())
        n = n + (c * product_of_forms(f.numerator())) * product_of_forms(detail::multiset_minus(common, f.denominator()));
    return {n, product_of_forms(common)};
}

/// Equality as rational functions.
inline bool equals(const MouldElement& x, const MouldElement& y, std::size_t cap = default_degree_cap)
{
    return detail::same_value(detail::as_sum(x, cap), detail::as_sum(y, cap));
}

/// Whether the embedding of z equals x as a rational function.
inline bool equals(const ZinbElement& z, const MouldElement& x, std::size_t cap = default_degree_cap)
{
    return detail::same_value(detail::as_sum(z, cap), detail::as_sum(x, cap));
}

// ---------------------------------------------------------------------------
// Zinbiel coefficients of a mould element
// ---------------------------------------------------------------------------

struct ExtractOptions {
    enum class Method { residues, linear_solve };

    std::size_t cap = 6;
    std::size_t linear_solve_cap = 5;
    Method method = Method::residues;
    bool verify = true;
    std::uint64_t seed = 0x5eed5eedULL;
};

namespace detail {

/// u_a * F at u_a = 0, for F with at most a simple pole along u_a = 0.
/// Returns nullopt for a higher-order pole; a zero result is an empty optional inside.
inline std::optional<std::optional<FactoredFraction>> residue(const FactoredFraction& f, const Label& a)
{
    const auto ua = LinearForm::variable(a);
    auto [lo, hi] = std::equal_range(f.denominator().begin(), f.denominator().end(), ua);
    const auto mult = hi - lo;
    if (mult == 0)
        return std::optional<FactoredFraction>();
    if (mult > 1)
        return std::nullopt;
    std::vector<LinearForm> den(f.denominator().begin(), lo);
    den.insert(den.end(), hi, f.denominator().end());
    auto drop = [&](RawForm r) {
        r.erase(a);
        return r;
    };
    std::vector<RawForm> n, d;
    for (const auto& x : f.numerator())
        n.push_back(drop(x.raw()));
    for (const auto& x : den)
        d.push_back(drop(x.raw()));
    return FactoredFraction::try_make(f.sign(), f.scalar(), n, d, true);
}

/// Iterated residues: the coefficient of (p_1 ... p_n) is the residue at u_{p_n},
/// then at u_{p_(n-1)}, and so on. nullopt if some step meets a multiple pole.
inline std::optional<ZinbElement> extract_by_residues(const MouldElement& f, const LabelSet& labels)
{
    ZinbElement out(labels);
    bool ok = true;
    TotalOrder suffix;
    std::function<void(const FactoredFraction&, const LabelSet&, const Rational&)> rec =
        [&](const FactoredFraction& g, const LabelSet& remaining, const Rational& c) {
            if (!ok)
                return;
            if (remaining.empty()) {
                if (g.numerator().empty() && g.denominator().empty())
                    out.add(TotalOrder(suffix.rbegin(), suffix.rend()), c * g.coefficient());
                return;
            }
            for (const auto& a : remaining) {
                auto r = residue(g, a);
                if (!r) {
                    ok = false;
                    return;
                }
                if (!*r)
                    continue;
                LabelSet rest;
                for (const auto& l : remaining)
                    if (l != a)
                        rest.push_back(l);
                suffix.push_back(a);
                rec(**r, rest, c);
                suffix.pop_back();
                if (!ok)
                    return;
            }
        };
    for (const auto& [g, c] : f.terms())
        rec(g, labels, c);
    if (!ok)
        return std::nullopt;
    return out;
}

inline std::optional<Rational> evaluate_fraction(const FactoredFraction& f, const std::map<Label, Rational>& point)
{
    Rational v = f.coefficient();
    auto value = [&](const LinearForm& l) {
        Rational s = 0;
        for (const auto& [x, c] : l.terms())
            s += c * point.at(x);
        return s;
    };
    for (const auto& l : f.denominator()) {
        Rational s = value(l);
        if (s == 0)
            return std::nullopt;
        v /= s;
    }
    for (const auto& l : f.numerator())
        v *= value(l);
    return v;
}

/// Coefficients over the n! order fractions from evaluations at random points.
inline std::optional<ZinbElement> extract_by_linear_solve(const MouldElement& f, const LabelSet& labels,
                                                          std::uint64_t seed)
{
    std::vector<TotalOrder> basis;
    TotalOrder o(labels);
    do
        basis.push_back(o);
    while (std::next_permutation(o.begin(), o.end()));
    const std::size_t m = basis.size();
    std::vector<FactoredFraction> basis_fractions;
    for (const auto& b : basis)
        basis_fractions.push_back(embed_order(b));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 997);
    // rows of the augmented matrix, kept in echelon form as they arrive
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
    std::size_t extra = 0, attempts = 0;
    const std::size_t max_attempts = 20 * m + 50;
    while ((rows.size() < m || extra < 3) && attempts++ < max_attempts) {
        std::map<Label, Rational> point;
        for (const auto& l : labels)
            point.emplace(l, Rational(pick(rng)));
        std::vector<Rational> row(m + 1);
        bool singular = false;
        for (std::size_t k = 0; k < m && !singular; ++k) {
            auto v = evaluate_fraction(basis_fractions[k], point);
            singular = !v;
            if (v)
                row[k] = *v;
        }
        Rational rhs = 0;
        for (const auto& [g, c] : f.terms()) {
            if (singular)
                break;
            auto v = evaluate_fraction(g, point);
            singular = !v;
            if (v)
                rhs += c * *v;
        }
        if (singular)
            continue;
        row[m] = rhs;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto p = pivots[r];
            if (row[p] == 0)
                continue;
            Rational factor = row[p] / rows[r][p];
            for (std::size_t k = p; k <= m; ++k)
                row[k] -= factor * rows[r][k];
        }
        std::size_t p = 0;
        while (p < m && row[p] == 0)
            ++p;
        if (p == m) {
            if (row[m] != 0)
                return std::nullopt; // inconsistent: not a combination of orders
            ++extra;
            continue;
        }
        rows.push_back(std::move(row));
        pivots.push_back(p);
    }
    if (rows.size() < m)
        throw std::runtime_error("linear solve did not reach full rank");
    std::vector<Rational> sol(m);
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] > pivots[b]; });
    for (auto r : order) {
        const auto p = pivots[r];
        Rational s = rows[r][m];
        for (std::size_t k = p + 1; k < m; ++k)
            s -= rows[r][k] * sol[k];
        sol[p] = s / rows[r][p];
    }
    ZinbElement out(labels);
    for (std::size_t k = 0; k < m; ++k)
        out.add(basis[k], sol[k]);
    return out;
}

} // namespace detail

/// The Zinbiel element whose embedding equals f.
inline ZinbElement zinb_extract(const MouldElement& f, const LabelSet& labels, const ExtractOptions& opt = {})
{
    if (labels.size() > opt.cap)
        throw error(errc::cap_exceeded, "extraction capped at " + std::to_string(opt.cap) + " labels");
    for (const auto& [g, c] : f.terms())
        for (const auto& v : g.variables())
            if (!contains(labels, v))
                throw error(errc::not_in_zinbiel_image, "variable u" + v.str() + " is outside the label set");
    std::optional<ZinbElement> x;
    if (opt.method == ExtractOptions::Method::residues)
        x = detail::extract_by_residues(f, labels);
    if (!x) {
        if (labels.size() > opt.linear_solve_cap)
            throw error(errc::not_in_zinbiel_image, "multiple pole and too many labels for the linear solve");
        x = detail::extract_by_linear_solve(f, labels, opt.seed);
    }
    if (!x)
        throw error(errc::not_in_zinbiel_image, "no combination of order fractions matches");
    if (opt.verify && !equals(*x, f))
        throw error(errc::not_in_zinbiel_image, "extracted combination does not reproduce the fraction");
    return *x;
}

// ---------------------------------------------------------------------------
// Deformed generators
// ---------------------------------------------------------------------------

struct DeformedGenerators {
    RationalFunction c; ///< image of [1][2]
    RationalFunction d; ///< image of [1 <| 2], rooted at 1
};

/// C_t = t(u1) t(u2) / (u1 u2 t(u1+u2)) and D_t = -(tau_{0,1} . C_t).
inline DeformedGenerators deformed_generators(const UnivariateRational& t)
{
    auto nonzero = [](const std::vector<Rational>& c) {
        return std::any_of(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
    };
    if (!nonzero(t.num) || !nonzero(t.den))
        throw error(errc::zero_denominator, "t must be a nonzero rational function");
    const Polynomial u1 = Polynomial::variable(Label(1)), u2 = Polynomial::variable(Label(2));
    const RationalFunction t12 = t.at(u1 + u2);
    RationalFunction c = t.at(u1) * t.at(u2) * RationalFunction(Polynomial(Rational(1)), u1 * u2)
                         * RationalFunction(t12.den, t12.num);
    RationalFunction d = -permute_variables(c, transposition(2, 0, 1));
    return {c, d};
}

} // namespace shrubs
