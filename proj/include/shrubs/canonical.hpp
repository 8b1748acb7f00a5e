#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "shrubs/shrub.hpp"

namespace shrubs {

struct CanonicalForm {
    Shrub shrub;                     // on labels 1..n
    std::map<Label, Label> relabeling; // original label -> canonical label
};

/// Canonical representative under relabeling.
///
/// Vertices are grouped by height and every permutation inside each height
/// class is tried; the arrangement with the lexicographically smallest
/// adjacency code wins. Cost is the product of the factorials of the level
/// sizes, fine up to about seven vertices.
inline CanonicalForm canonical_form(const Shrub& p)
{
    using detail::index;
    const auto n = p.size();
    std::vector<index> arrangement(n);
    for (index v = 0; v < n; ++v)
        arrangement[v] = v;
    std::stable_sort(arrangement.begin(), arrangement.end(),
                     [&](index a, index b) { return p.height(a) < p.height(b); });

    // [begin, end) ranges of each height class inside the arrangement
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t k = 0; k < n;) {
        std::size_t e = k;
        while (e < n && p.height(arrangement[e]) == p.height(arrangement[k]))
            ++e;
        blocks.emplace_back(k, e);
        k = e;
    }

    auto code_of = [&](const std::vector<index>& arr) {
        std::vector<char> code;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (p.height(arr[b]) == p.height(arr[a]) + 1)
                    code.push_back(p.adjacent(arr[a], arr[b]) ? 0 : 1);
        return code;
    };

    std::vector<index> best = arrangement;
    std::vector<char> best_code = code_of(best);
    std::vector<index> cur = arrangement;
    while (true) {
        // odometer over the per-block permutations
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
            auto [s, e] = blocks[b];
            if (std::next_permutation(cur.begin() + static_cast<long>(s), cur.begin() + static_cast<long>(e)))
                break;
        }
        if (b == blocks.size())
            break;
        auto code = code_of(cur);
        if (code < best_code) {
            best_code = std::move(code);
            best = cur;
        }
    }

    CanonicalForm out;
    std::vector<index> pos(n);
    for (std::size_t k = 0; k < n; ++k)
        pos[best[k]] = k;
    detail::ShrubParts parts;
    for (std::size_t k = 0; k < n; ++k) {
        parts.labels.emplace_back(static_cast<int>(k + 1));
        parts.height.push_back(p.height(best[k]));
        out.relabeling.emplace(p.label(best[k]), Label(static_cast<int>(k + 1)));
    }
    for (auto [a, b] : p.index_edges())
        parts.edges.emplace_back(pos[a], pos[b]);
    out.shrub = detail::assemble(std::move(parts), false);
    return out;
}

inline bool is_isomorphic(const Shrub& p, const Shrub& q)
{
    if (p.size() != q.size() || p.edge_count() != q.edge_count())
        return false;
    return canonical_form(p).shrub == canonical_form(q).shrub;
}

} // namespace shrubs
