#pragma once

// Independent reference implementations used only by tests and the check suites.
// Each one takes the slow, obvious route so that it shares no code path with the
// library routine it is compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "shrubs/shrubs.hpp"

namespace shrubs::testing {

/// Scans every 4- and 5-subset for an induced copy of a forbidden pattern.
inline bool has_forbidden_pattern_naive(const std::vector<int>& h, const std::vector<std::vector<bool>>& adj)
{
    const int n = static_cast<int>(h.size());
    auto e = [&](int a, int b) { return static_cast<bool>(adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]); };
    auto H = [&](int a) { return h[static_cast<std::size_t>(a)]; };
    // w x y z with heights (k+2, k+1, k+1, k), edges exactly wx, wy, yz
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (w == x || w == y || w == z || x == y || x == z || y == z)
                        continue;
                    if (H(w) != H(z) + 2 || H(x) != H(z) + 1 || H(y) != H(z) + 1)
                        continue;
                    if (e(w, x) && e(w, y) && e(y, z) && !e(x, z) && !e(w, z) && !e(x, y))
                        return true;
                }
    // x y over p q r, edges exactly xp, xq, yq, yr
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    for (int r = 0; r < n; ++r) {
                        std::set<int> s{x, y, p, q, r};
                        if (s.size() != 5)
                            continue;
                        if (H(x) != H(p) + 1 || H(y) != H(p) + 1 || H(q) != H(p) || H(r) != H(p))
                            continue;
                        if (e(x, p) && e(x, q) && e(y, q) && e(y, r) && !e(x, r) && !e(y, p))
                            return true;
                    }
    return false;
}

/// Direct axiom check of a graded graph with the naive pattern scan.
inline bool is_shrub_naive(const std::vector<int>& h, const std::vector<std::vector<bool>>& adj)
{
    const auto n = h.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (adj[a][b] && std::abs(h[a] - h[b]) != 1)
                return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (h[a] == 0)
            continue;
        bool covers = false;
        for (std::size_t b = 0; b < n; ++b)
            covers = covers || (adj[a][b] && h[b] == h[a] - 1);
        if (!covers)
            return false;
    }
    return !has_forbidden_pattern_naive(h, adj);
}

/// Number of labelled series-parallel posets on n elements, built from
/// singletons by disjoint union and ordinal sum and deduplicated as relations.
inline std::size_t series_parallel_count(int n)
{
    using Relation = std::vector<std::uint32_t>; // row a: bitmask of b with a < b
    std::map<std::uint32_t, std::set<Relation>> memo;
    std::function<const std::set<Relation>&(std::uint32_t)> build = [&](std::uint32_t set) -> const std::set<Relation>& {
        auto it = memo.find(set);
        if (it != memo.end())
            return it->second;
        std::set<Relation> out;
        if ((set & (set - 1)) == 0) {
            out.insert(Relation(static_cast<std::size_t>(n), 0));
        } else {
            for (std::uint32_t a = (set - 1) & set; a > 0; a = (a - 1) & set) {
                const std::uint32_t b = set & ~a;
                const auto left = build(a);
                const auto right = build(b);
                for (const auto& p : left)
                    for (const auto& q : right) {
                        Relation par(static_cast<std::size_t>(n));
                        for (std::size_t k = 0; k < par.size(); ++k)
                            par[k] = p[k] | q[k];
                        out.insert(par);
                        for (int k = 0; k < n; ++k)
                            if (a >> k & 1u)
                                par[static_cast<std::size_t>(k)] |= b;
                        out.insert(par);
                    }
            }
        }
        return memo.emplace(set, std::move(out)).first->second;
    };
    if (n <= 0)
        return 0;
    return build((1u << n) - 1).size();
}

/// Total orders of the shrub's labels satisfying the compatibility condition,
/// by filtering all permutations.
inline std::set<TotalOrder> compatible_orders_by_filter(const Shrub& p)
{
    std::set<TotalOrder> out;
    TotalOrder o = p.labels();
    do {
        std::map<Label, std::size_t> pos;
        for (std::size_t k = 0; k < o.size(); ++k)
            pos[o[k]] = k;
        bool ok = true;
        for (std::size_t v = 0; v < p.size() && ok; ++v) {
            if (p.height(v) == 0)
                continue;
            bool below = false;
            for (auto c : p.down(v))
                below = below || pos[p.label(c)] < pos[p.label(v)];
            ok = below;
        }
        if (ok)
            out.insert(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

/// Composition of two basis orders by filtering all arrangements of the merged labels.
/// The constraints are read off the half-shuffle word pi_<i sigma_1 (sigma_>1 sh pi_>i).
inline ZinbElement zinb_compose_by_filter(const TotalOrder& pi, const Label& i, const TotalOrder& sigma)
{
    std::vector<Label> all;
    for (const auto& l : pi)
        if (l != i)
            all.push_back(l);
    all.insert(all.end(), sigma.begin(), sigma.end());
    std::sort(all.begin(), all.end());
    auto index_in = [](const TotalOrder& o, const Label& l) {
        return static_cast<std::size_t>(std::find(o.begin(), o.end(), l) - o.begin());
    };
    const auto slot = index_in(pi, i);
    ZinbElement out(make_label_set(all));
    TotalOrder o = all;
    do {
        auto at = [&](const Label& l) { return index_in(o, l); };
        bool ok = true;
        for (std::size_t a = 0; a < pi.size() && ok; ++a)
            for (std::size_t b = a + 1; b < pi.size() && ok; ++b)
                if (a != slot && b != slot)
                    ok = at(pi[a]) < at(pi[b]);
        for (std::size_t a = 0; a + 1 < sigma.size() && ok; ++a)
            ok = at(sigma[a]) < at(sigma[a + 1]);
        for (std::size_t a = 0; a < slot && ok; ++a)
            for (const auto& s : sigma)
                ok = ok && at(pi[a]) < at(s);
        for (std::size_t a = slot + 1; a < pi.size() && ok; ++a)
            ok = at(sigma.front()) < at(pi[a]);
        if (ok)
            out.add(o, Rational(1));
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

/// Inverse of the fraction map by scanning candidate shrubs.
inline std::optional<Shrub> reconstruct_by_search(const FactoredFraction& f, const std::vector<Shrub>& candidates)
{
    for (const auto& p : candidates)
        if (FactoredFraction::from_forms(fraction_of_shrub(p).numerator(), fraction_of_shrub(p).denominator()) == f)
            return p;
    return std::nullopt;
}

/// Isomorphism by trying every bijection that preserves heights.
inline bool isomorphic_by_search(const Shrub& p, const Shrub& q)
{
    if (p.size() != q.size() || p.edge_count() != q.edge_count())
        return false;
    std::vector<std::size_t> perm(q.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool ok = true;
        for (std::size_t v = 0; v < p.size() && ok; ++v)
            ok = p.height(v) == q.height(perm[v]);
        for (std::size_t a = 0; a < p.size() && ok; ++a)
            for (std::size_t b = 0; b < p.size() && ok; ++b)
                ok = p.adjacent(a, b) == q.adjacent(perm[a], perm[b]);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// A random shrub on the given labels grown by random generator substitutions.
inline Shrub random_shrub(std::mt19937_64& rng, const LabelSet& labels)
{
    std::vector<Label> pool(labels);
    std::shuffle(pool.begin(), pool.end(), rng);
    Shrub p = Shrub::trivial(pool.front());
    for (std::size_t k = 1; k < pool.size(); ++k) {
        const auto& v = p.labels()[std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng)];
        const Label slot = v;
        const Label& fresh = pool[k];
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            p = compose(p, slot, generator_c(slot, fresh));
            break;
        case 1:
            p = compose(p, slot, generator_d(slot, fresh));
            break;
        default:
            p = compose(p, slot, generator_d(fresh, slot));
            break;
        }
    }
    return p;
}

inline Permutation random_permutation(std::mt19937_64& rng, int n)
{
    auto p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

} // namespace shrubs::testing
