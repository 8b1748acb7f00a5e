#pragma once

#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "shrubs/mould.hpp"
#include "shrubs/reconstruction.hpp"
#include "shrubs/shrub.hpp"
#include "shrubs/substitution.hpp"

namespace shrubs {

struct SignedShrub {
    int sign = 1;
    Shrub shrub;

    SignedShrub negated() const { return {-sign, shrub}; }

    friend bool operator==(const SignedShrub&, const SignedShrub&) = default;
    friend auto operator<=>(const SignedShrub& a, const SignedShrub& b)
    {
        if (auto c = a.shrub <=> b.shrub; c != 0)
            return c;
        return a.sign <=> b.sign;
    }
};

inline std::string to_string(const SignedShrub& x)
{
    return (x.sign < 0 ? "-" : "+") + to_string(x.shrub);
}

namespace detail {

/// n for a shrub on exactly {1..n}.
inline int standard_size(const Shrub& p)
{
    const int n = static_cast<int>(p.size());
    if (p.labels() != iota_labels(n))
        throw error(errc::unknown_label, "the anticyclic action needs labels 1..n, got " + to_string(p));
    return n;
}

inline void check_permutation(const Permutation& perm, int n)
{
    if (static_cast<int>(perm.size()) != n + 1 || !is_permutation(perm))
        throw error(errc::parse_error, "expected a permutation of 0.." + std::to_string(n));
}

} // namespace detail

/// sign * kappa(P) with u_i replaced by u_perm(i) and u_0 eliminated, read back as a signed shrub.
inline SignedShrub act(const Permutation& perm, const SignedShrub& x)
{
    const int n = detail::standard_size(x.shrub);
    detail::check_permutation(perm, n);
    auto moved = fraction_of_shrub(x.shrub).try_map_forms([&](const RawForm& r) { return permute_variables(r, perm); });
    if (!moved)
        throw error(errc::not_in_image, "substituted fraction vanished");
    if (moved->scalar() != 1)
        throw error(errc::not_in_image, "substituted fraction has scalar " + to_string(moved->scalar()));
    Shrub p = reconstruct(moved->monic());
    return {x.sign * moved->sign(), p};
}

inline constexpr int default_orbit_cap = 6;

/// Orbit generators of S_{n+1}: tau_{0,1} and the adjacent transpositions (i, i+1).
inline std::vector<Permutation> orbit_generators(int n)
{
    std::vector<Permutation> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(transposition(n, i, i + 1));
    return gens;
}

/// Closure of {x} under the action, sorted.
inline std::vector<SignedShrub> orbit(const SignedShrub& x, int cap = default_orbit_cap,
                                      const std::function<SignedShrub(const Permutation&, const SignedShrub&)>& action = act)
{
    const int n = detail::standard_size(x.shrub);
    if (n > cap)
        throw error(errc::cap_exceeded, "orbit computation capped at n=" + std::to_string(cap));
    const auto gens = orbit_generators(n);
    std::set<SignedShrub> seen{x};
    std::deque<SignedShrub> frontier{x};
    while (!frontier.empty()) {
        SignedShrub cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            SignedShrub y = action(g, cur);
            if (seen.insert(y).second)
                frontier.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

struct OrbitInvariant {
    std::vector<int> numerator;
    std::vector<int> denominator;

    friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
    friend auto operator<=>(const OrbitInvariant&, const OrbitInvariant&) = default;
};

/// Factor values at u_i = 1, with k folded to n+1-k when k > (n+1)/2.
inline OrbitInvariant orbit_invariant(const SignedShrub& x)
{
    const auto n = static_cast<std::int64_t>(x.shrub.size());
    const auto f = fraction_of_shrub(x.shrub);
    auto fold = [&](const std::vector<LinearForm>& side) {
        std::vector<int> out;
        for (const auto& l : side) {
            auto k = l.coefficient_sum();
            if (2 * k > n + 1)
                k = n + 1 - k;
            out.push_back(static_cast<int>(k));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return {fold(f.numerator()), fold(f.denominator())};
}

inline std::string to_string(const OrbitInvariant& inv)
{
    auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? "," : "") + std::to_string(v[k]);
        return s + "}";
    };
    return "(" + list(inv.numerator) + ", " + list(inv.denominator) + ")";
}

/// Number of ramification classes, which equals the numerator degree of the fraction.
inline int ram_count_preserved(const SignedShrub& x)
{
    return static_cast<int>(ram_classes(x.shrub).size());
}

// ---------------------------------------------------------------------------
// Forests and signed rooted trees on {0..n}
// ---------------------------------------------------------------------------

/// A signed tree on {0..n} rooted at 0: parent[v] for v >= 1, parent[0] = -1.
struct CTree {
    int sign = 1;
    std::vector<int> parent;

    friend bool operator==(const CTree&, const CTree&) = default;
    friend auto operator<=>(const CTree&, const CTree&) = default;
};

inline bool is_forest(const Shrub& p)
{
    for (std::size_t v = 0; v < p.size(); ++v)
        if (p.down(v).size() > 1)
            return false;
    return true;
}

/// Grafts the roots of the forest onto a new root 0.
inline CTree b0(const SignedShrub& f)
{
    const int n = detail::standard_size(f.shrub);
    if (!is_forest(f.shrub))
        throw error(errc::not_a_forest, to_string(f.shrub) + " has a ramified vertex");
    CTree t{f.sign, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    t.parent[0] = -1;
    for (std::size_t v = 0; v < f.shrub.size(); ++v) {
        const int label = std::stoi(f.shrub.label(v).str());
        t.parent[static_cast<std::size_t>(label)] =
            f.shrub.down(v).empty() ? 0 : std::stoi(f.shrub.label(f.shrub.down(v).front()).str());
    }
    return t;
}

namespace detail {

inline std::vector<int> depths(const CTree& t)
{
    const auto n = t.parent.size();
    std::vector<int> depth(n, -1);
    depth[0] = 0;
    for (std::size_t v = 1; v < n; ++v) {
        std::vector<std::size_t> path;
        std::size_t u = v;
        while (depth[u] < 0) {
            path.push_back(u);
            if (path.size() > n || t.parent[u] < 0 || static_cast<std::size_t>(t.parent[u]) >= n)
                throw error(errc::not_a_forest, "parent array is not a tree rooted at 0");
            u = static_cast<std::size_t>(t.parent[u]);
        }
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            depth[*it] = depth[static_cast<std::size_t>(t.parent[*it])] + 1;
    }
    return depth;
}

} // namespace detail

/// Removes the root 0: its children become the roots of a forest.
inline SignedShrub b0_inverse(const CTree& t)
{
    if (t.parent.empty() || t.parent[0] != -1)
        throw error(errc::not_a_forest, "tree is not rooted at 0");
    const auto depth = detail::depths(t);
    detail::ShrubParts parts;
    for (std::size_t v = 1; v < t.parent.size(); ++v) {
        parts.labels.emplace_back(static_cast<int>(v));
        parts.height.push_back(depth[v] - 1);
    }
    for (std::size_t v = 1; v < t.parent.size(); ++v)
        if (t.parent[v] != 0)
            parts.edges.emplace_back(v - 1, static_cast<std::size_t>(t.parent[v]) - 1);
    return {t.sign, detail::assemble(std::move(parts), false)};
}

/// Relabels the tree by perm and moves the root back to 0, one sign flip per edge crossed.
inline CTree ctree_act(const Permutation& perm, const CTree& t)
{
    const auto n = t.parent.size();
    detail::check_permutation(perm, static_cast<int>(n) - 1);
    std::vector<std::vector<int>> adj(n);
    for (std::size_t v = 1; v < n; ++v) {
        const auto a = static_cast<std::size_t>(perm[v]);
        const auto b = static_cast<std::size_t>(perm[static_cast<std::size_t>(t.parent[v])]);
        adj[a].push_back(static_cast<int>(b));
        adj[b].push_back(static_cast<int>(a));
    }
    CTree out{t.sign, std::vector<int>(n, -1)};
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[u] + 1;
                out.parent[static_cast<std::size_t>(w)] = static_cast<int>(u);
                queue.push_back(static_cast<std::size_t>(w));
            }
    }
    if (dist[static_cast<std::size_t>(perm[0])] % 2)
        out.sign = -out.sign;
    return out;
}

/// The action on signed forests computed through the tree model.
inline SignedShrub forest_act(const Permutation& perm, const SignedShrub& f)
{
    return b0_inverse(ctree_act(perm, b0(f)));
}

/// Every signed tree on {0..n} rooted at 0, by scanning all parent arrays.
inline std::vector<CTree> enumerate_ctrees(int n)
{
    if (n > default_orbit_cap)
        throw error(errc::cap_exceeded, "tree enumeration capped at n=" + std::to_string(default_orbit_cap));
    const auto m = static_cast<std::size_t>(n) + 1;
    std::vector<CTree> out;
    std::vector<int> parent(m, 0);
    parent[0] = -1;
    while (true) {
        bool acyclic = true;
        for (std::size_t v = 1; v < m && acyclic; ++v) {
            std::size_t u = v, steps = 0;
            while (u != 0 && steps++ <= m)
                u = static_cast<std::size_t>(parent[u]);
            acyclic = u == 0;
        }
        if (acyclic)
            for (int s : {1, -1})
                out.push_back({s, parent});
        std::size_t v = 1;
        for (; v < m; ++v) {
            if (++parent[v] < static_cast<int>(m))
                break;
            parent[v] = 0;
        }
        if (v >= m)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace shrubs
