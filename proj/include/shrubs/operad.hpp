#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shrubs/shrub.hpp"

namespace shrubs {

namespace detail {

inline void require_disjoint(const std::vector<Label>& a, const std::vector<Label>& b, const Label* skip = nullptr)
{
    for (const auto& l : b)
        if (contains(a, l) && !(skip && l == *skip))
            throw error(errc::label_clash, "label '" + l.str() + "' occurs on both sides");
}

} // namespace detail

/// Partial composition P o_i Q: Q replaces vertex i, its heights lifted by h(i),
/// and every former neighbour of i is joined to every height-0 vertex of Q.
inline Shrub compose(const Shrub& p, const Label& i, const Shrub& q)
{
    using detail::index;
    const index vi = p.index_of(i);
    detail::require_disjoint(p.labels(), q.labels(), &i);

    detail::ShrubParts parts;
    std::vector<index> from_p(p.size(), static_cast<index>(-1));
    for (index v = 0; v < p.size(); ++v)
        if (v != vi) {
            from_p[v] = parts.labels.size();
            parts.labels.push_back(p.label(v));
            parts.height.push_back(p.height(v));
        }
    const index offset = parts.labels.size();
    const int lift = p.height(vi);
    for (index v = 0; v < q.size(); ++v) {
        parts.labels.push_back(q.label(v));
        parts.height.push_back(q.height(v) + lift);
    }
    for (auto [a, b] : p.index_edges())
        if (a != vi && b != vi)
            parts.edges.emplace_back(from_p[a], from_p[b]);
    for (auto [a, b] : q.index_edges())
        parts.edges.emplace_back(offset + a, offset + b);
    for (const auto* adj : {&p.down(vi), &p.up(vi)})
        for (index nb : *adj)
            for (index r = 0; r < q.size(); ++r)
                if (q.height(r) == 0)
                    parts.edges.emplace_back(from_p[nb], offset + r);
    return detail::assemble(std::move(parts), false);
}

/// P Q, the disjoint union.
inline Shrub disjoint_union(const Shrub& p, const Shrub& q)
{
    detail::require_disjoint(p.labels(), q.labels());
    auto parts = p.parts();
    const auto offset = parts.labels.size();
    for (std::size_t v = 0; v < q.size(); ++v) {
        parts.labels.push_back(q.label(v));
        parts.height.push_back(q.height(v));
    }
    for (auto [a, b] : q.index_edges())
        parts.edges.emplace_back(offset + a, offset + b);
    return detail::assemble(std::move(parts), false);
}

/// P <| Q: Q lifted by one, complete bipartite between the two bottom levels.
inline Shrub graft(const Shrub& p, const Shrub& q)
{
    detail::require_disjoint(p.labels(), q.labels());
    auto parts = p.parts();
    const auto offset = parts.labels.size();
    for (std::size_t v = 0; v < q.size(); ++v) {
        parts.labels.push_back(q.label(v));
        parts.height.push_back(q.height(v) + 1);
    }
    for (auto [a, b] : q.index_edges())
        parts.edges.emplace_back(offset + a, offset + b);
    for (std::size_t a = 0; a < p.size(); ++a)
        if (p.height(a) == 0)
            for (std::size_t b = 0; b < q.size(); ++b)
                if (q.height(b) == 0)
                    parts.edges.emplace_back(a, offset + b);
    return detail::assemble(std::move(parts), false);
}

/// [a][b]
inline Shrub generator_c(const Label& a, const Label& b)
{
    return disjoint_union(Shrub::trivial(a), Shrub::trivial(b));
}

/// [a <| b]: rooted at a, with b one level up.
inline Shrub generator_d(const Label& a, const Label& b)
{
    return graft(Shrub::trivial(a), Shrub::trivial(b));
}

} // namespace shrubs
