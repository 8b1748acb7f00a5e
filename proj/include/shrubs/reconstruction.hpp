#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "shrubs/fraction.hpp"
#include "shrubs/mould.hpp"
#include "shrubs/operad.hpp"
#include "shrubs/shrub.hpp"

namespace shrubs {

namespace detail {

inline std::vector<LabelSet> components_over(const std::vector<LinearForm>& den, const LabelSet& labels)
{
    std::vector<std::size_t> parent(labels.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    auto pos = [&](const Label& l) {
        auto it = std::lower_bound(labels.begin(), labels.end(), l);
        if (it == labels.end() || *it != l)
            throw error(errc::not_in_image, "variable u" + l.str() + " is outside the label set");
        return static_cast<std::size_t>(it - labels.begin());
    };
    for (const auto& f : den) {
        const auto first = root(pos(f.terms().front().first));
        for (const auto& [l, c] : f.terms())
            parent[root(pos(l))] = first;
    }
    std::map<std::size_t, LabelSet> groups;
    for (std::size_t k = 0; k < labels.size(); ++k)
        groups[root(k)].push_back(labels[k]);
    std::vector<LabelSet> out;
    for (auto& [r, g] : groups)
        out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool within(const LinearForm& f, const LabelSet& s)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return contains(s, t.first); });
}

} // namespace detail

/// Labels joined whenever a denominator factor involves both, closed transitively.
inline std::vector<LabelSet> fraction_components(const FactoredFraction& f)
{
    return detail::components_over(f.denominator(), f.variables());
}

/// Heights read off the compatible orders extracted from f: the possible minima
/// are the height-0 vertices; delete them from every order and repeat.
inline HeightMap recover_heights(const FactoredFraction& f, const LabelSet& labels, const ExtractOptions& opt = {})
{
    ZinbElement x;
    try {
        x = zinb_extract(MouldElement::single(f, labels), labels, opt);
    } catch (const error& e) {
        if (e.code() == errc::not_in_zinbiel_image)
            throw error(errc::not_in_image, e.what());
        throw;
    }
    std::set<TotalOrder> orders;
    for (const auto& [o, c] : x.terms()) {
        if (c <= 0)
            throw error(errc::not_in_image, "extracted order with a non-positive coefficient");
        orders.insert(o);
    }
    if (orders.empty())
        throw error(errc::not_in_image, "fraction has no compatible orders");
    HeightMap h;
    for (int level = 0; !orders.begin()->empty(); ++level) {
        std::set<Label> minima;
        for (const auto& o : orders)
            minima.insert(o.front());
        for (const auto& m : minima)
            h.emplace(m, level);
        std::set<TotalOrder> next;
        for (const auto& o : orders) {
            TotalOrder stripped;
            for (const auto& l : o)
                if (!minima.count(l))
                    stripped.push_back(l);
            next.insert(std::move(stripped));
        }
        orders = std::move(next);
    }
    return h;
}

namespace detail {

inline Shrub reconstruct_piece(const std::vector<LinearForm>& num, const std::vector<LinearForm>& den,
                               const LabelSet& labels, const ExtractOptions& opt)
{
    auto fail = [](const std::string& why) { return error(errc::not_in_image, why); };
    if (labels.empty())
        throw fail("empty label set");
    if (labels.size() == 1) {
        if (!num.empty() || den.size() != 1 || den.front() != LinearForm::variable(labels.front()))
            throw fail("single label " + labels.front().str() + " without the fraction 1/u" + labels.front().str());
        return Shrub::trivial(labels.front());
    }

    auto comps = components_over(den, labels);
    if (comps.size() > 1) {
        std::optional<Shrub> out;
        for (const auto& c : comps) {
            std::vector<LinearForm> n, d;
            for (const auto& f : num)
                if (within(f, c))
                    n.push_back(f);
            for (const auto& f : den)
                if (within(f, c))
                    d.push_back(f);
            Shrub part = reconstruct_piece(n, d, c, opt);
            out = out ? disjoint_union(*out, part) : part;
        }
        std::size_t placed_num = 0;
        for (const auto& f : num)
            placed_num += std::any_of(comps.begin(), comps.end(), [&](const LabelSet& c) { return within(f, c); });
        if (placed_num != num.size())
            throw fail("numerator factor spans several components");
        return *out;
    }

    const auto full = LinearForm::subset_sum(labels);
    auto full_at = std::lower_bound(den.begin(), den.end(), full);
    if (full_at == den.end() || *full_at != full)
        throw fail("connected fraction without the full-sum denominator factor");
    std::vector<LinearForm> den_rest(den.begin(), full_at);
    den_rest.insert(den_rest.end(), full_at + 1, den.end());

    auto f = FactoredFraction::from_forms(num, den, 1, 1, false);
    const auto heights = recover_heights(f, labels, opt);
    LabelSet roots;
    for (const auto& [l, h] : heights)
        if (h == 0)
            roots.push_back(l);

    if (roots.size() == 1) {
        LabelSet rest;
        for (const auto& l : labels)
            if (l != roots.front())
                rest.push_back(l);
        return graft(Shrub::trivial(roots.front()), reconstruct_piece(num, den_rest, rest, opt));
    }

    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < num.size(); ++k) {
        auto s = num[k].support();
        if (std::includes(s.begin(), s.end(), roots.begin(), roots.end()))
            candidates.push_back(k);
    }
    if (candidates.size() != 1)
        throw fail(std::to_string(candidates.size()) + " numerator factors contain every height-0 label");
    const auto& alpha = num[candidates.front()];
    if (!alpha.is_subset_sum())
        throw fail("splitting factor is not a plain sum of variables");
    const LabelSet lower = alpha.support();
    LabelSet upper;
    for (const auto& l : labels)
        if (!contains(lower, l))
            upper.push_back(l);
    if (upper.empty())
        throw fail("splitting factor covers every label");

    std::vector<LinearForm> nq, dq, nr, dr;
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (k == candidates.front())
            continue;
        if (within(num[k], lower))
            nq.push_back(num[k]);
        else if (within(num[k], upper))
            nr.push_back(num[k]);
        else
            throw fail("numerator factor straddles the split");
    }
    for (const auto& g : den_rest) {
        if (within(g, lower))
            dq.push_back(g);
        else if (within(g, upper))
            dr.push_back(g);
        else
            throw fail("denominator factor straddles the split");
    }
    return graft(reconstruct_piece(nq, dq, lower, opt), reconstruct_piece(nr, dr, upper, opt));
}

} // namespace detail

/// The shrub whose fraction is f.
inline Shrub reconstruct(const FactoredFraction& f, ExtractOptions opt = {})
{
    if (f.sign() != 1 || f.scalar() != 1)
        throw error(errc::not_in_image, "shrub fractions have sign + and scalar 1");
    // the final comparison below certifies the result, so the per-step check is skipped
    opt.verify = false;
    Shrub p = detail::reconstruct_piece(f.numerator(), f.denominator(), f.variables(), opt);
    auto back = fraction_of_shrub(p);
    auto reduced = FactoredFraction::from_forms(back.numerator(), back.denominator());
    if (!(reduced == f))
        throw error(errc::not_in_image, "rebuilt shrub has fraction " + to_text(reduced));
    return p;
}

} // namespace shrubs
