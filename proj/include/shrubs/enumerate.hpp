#pragma once

#include <set>
#include <vector>

#include "shrubs/canonical.hpp"
#include "shrubs/shrub.hpp"

namespace shrubs {

inline constexpr int default_enumeration_cap = 6;

/// All shrubs on labels 1..n, by brute force over height maps and edge sets.
///
/// Height maps range over {0..n-1}^n with a contiguous set of levels; every
/// vertex above level 0 picks a nonempty set of covers one level down (axioms
/// 1 and 2 by construction) and the candidate goes through the axiom checker.
inline std::vector<Shrub> enumerate_shrubs_bruteforce(int n, int cap = default_enumeration_cap)
{
    using detail::index;
    if (n > cap)
        throw error(errc::cap_exceeded, "brute-force enumeration capped at n=" + std::to_string(cap));
    if (n <= 0)
        return {};
    const auto un = static_cast<index>(n);
    std::set<Shrub> found;
    std::vector<int> h(un, 0);
    std::vector<Label> labels;
    for (int i = 1; i <= n; ++i)
        labels.emplace_back(i);

    while (true) {
        int top = *std::max_element(h.begin(), h.end());
        std::vector<int> level_size(static_cast<std::size_t>(top) + 1, 0);
        for (int x : h)
            ++level_size[static_cast<std::size_t>(x)];
        bool contiguous = std::all_of(level_size.begin(), level_size.end(), [](int c) { return c > 0; });

        if (contiguous) {
            std::vector<std::vector<index>> level(level_size.size());
            for (index v = 0; v < un; ++v)
                level[static_cast<std::size_t>(h[v])].push_back(v);
            // per vertex: mask over the level below (nonempty), or none at level 0
            std::vector<index> raised;
            for (index v = 0; v < un; ++v)
                if (h[v] > 0)
                    raised.push_back(v);
            std::vector<unsigned> mask(raised.size(), 1);
            std::vector<unsigned> limit(raised.size());
            for (std::size_t k = 0; k < raised.size(); ++k)
                limit[k] = 1u << level[static_cast<std::size_t>(h[raised[k]] - 1)].size();

            std::vector<std::vector<index>> down(un);
            while (true) {
                for (auto& d : down)
                    d.clear();
                for (std::size_t k = 0; k < raised.size(); ++k) {
                    const auto& below = level[static_cast<std::size_t>(h[raised[k]] - 1)];
                    for (std::size_t b = 0; b < below.size(); ++b)
                        if (mask[k] >> b & 1u)
                            down[raised[k]].push_back(below[b]);
                }
                for (auto& d : down)
                    std::sort(d.begin(), d.end());
                if (!detail::check_cover_axioms(h, down)) {
                    detail::ShrubParts parts{labels, h, {}};
                    for (index v = 0; v < un; ++v)
                        for (index c : down[v])
                            parts.edges.emplace_back(v, c);
                    found.insert(detail::assemble(std::move(parts), true));
                }
                std::size_t k = 0;
                for (; k < raised.size(); ++k) {
                    if (++mask[k] < limit[k])
                        break;
                    mask[k] = 1;
                }
                if (k == raised.size())
                    break;
            }
        }

        index k = 0;
        for (; k < un; ++k) {
            if (++h[k] < n)
                break;
            h[k] = 0;
        }
        if (k == un)
            break;
    }
    return {found.begin(), found.end()};
}

/// Keeps connected shrubs only.
inline std::vector<Shrub> connected_only(const std::vector<Shrub>& all)
{
    std::vector<Shrub> out;
    for (const auto& p : all)
        if (is_connected(p))
            out.push_back(p);
    return out;
}

/// One canonical representative per isomorphism class, sorted.
inline std::vector<Shrub> isomorphism_classes(const std::vector<Shrub>& all)
{
    std::set<Shrub> reps;
    for (const auto& p : all)
        reps.insert(canonical_form(p).shrub);
    return {reps.begin(), reps.end()};
}

} // namespace shrubs
