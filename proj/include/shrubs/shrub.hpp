#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shrubs/error.hpp"
#include "shrubs/label.hpp"

namespace shrubs {

using LabelPair = std::pair<Label, Label>;
using HeightMap = std::map<Label, int>;

class Shrub;

namespace detail {

using index = std::size_t;

/// Index-based description of a graded graph. Labels may come in any order.
struct ShrubParts {
    std::vector<Label> labels;
    std::vector<int> height;
    std::vector<std::pair<index, index>> edges;
};

struct Violation {
    errc code;
    std::vector<index> witnesses;
    std::string pattern; // "MEX4" / "MEX5" for forbidden patterns
};

/// Checks axioms 2 and 3 on a graph whose edges already join adjacent heights.
/// `down[v]` holds the vertices covered by v, `up[v]` those covering v, both sorted.
inline std::optional<Violation> check_cover_axioms(const std::vector<int>& height,
                                                   const std::vector<std::vector<index>>& down)
{
    const index n = height.size();
    for (index v = 0; v < n; ++v)
        if (height[v] > 0 && down[v].empty())
            return Violation{errc::unsupported, {v}, {}};

    // MEX4: two vertices covered by a common vertex must cover the same set.
    for (index w = 0; w < n; ++w) {
        const auto& cw = down[w];
        for (std::size_t a = 0; a < cw.size(); ++a)
            for (std::size_t b = a + 1; b < cw.size(); ++b) {
                index x = cw[a], y = cw[b];
                if (down[x] == down[y])
                    continue;
                // find z covered by exactly one of them; report it under y
                for (index z : down[y])
                    if (!std::binary_search(down[x].begin(), down[x].end(), z))
                        return Violation{errc::forbidden_pattern, {w, x, y, z}, "MEX4"};
                for (index z : down[x])
                    if (!std::binary_search(down[y].begin(), down[y].end(), z))
                        return Violation{errc::forbidden_pattern, {w, y, x, z}, "MEX4"};
            }
    }

    // MEX5: same-height vertices with intersecting cover sets have nested cover sets.
    for (index x = 0; x < n; ++x)
        for (index y = x + 1; y < n; ++y) {
            if (height[x] != height[y] || height[x] == 0)
                continue;
            const auto& cx = down[x];
            const auto& cy = down[y];
            std::optional<index> common, only_x, only_y;
            for (index c : cx) {
                if (std::binary_search(cy.begin(), cy.end(), c))
                    common = common.value_or(c);
                else
                    only_x = only_x.value_or(c);
            }
            for (index c : cy)
                if (!std::binary_search(cx.begin(), cx.end(), c))
                    only_y = only_y.value_or(c);
            if (common && only_x && only_y)
                return Violation{errc::forbidden_pattern, {x, y, *only_x, *common, *only_y}, "MEX5"};
        }
    return std::nullopt;
}

Shrub assemble(ShrubParts parts, bool validate);

} // namespace detail

/// A finite graded graph satisfying the shrub axioms. Immutable value type.
///
/// Vertices are stored sorted by label; `index` positions refer to that order.
class Shrub {
public:
    using index = detail::index;

    Shrub() = default;

    static Shrub trivial(Label l)
    {
        Shrub s;
        s.labels_.push_back(std::move(l));
        s.height_.push_back(0);
        s.down_.emplace_back();
        s.up_.emplace_back();
        return s;
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<Label>& labels() const noexcept { return labels_; }
    const Label& label(index v) const { return labels_[v]; }
    int height(index v) const { return height_[v]; }
    int height(const Label& l) const { return height_[index_of(l)]; }
    const std::vector<int>& heights() const noexcept { return height_; }

    /// Vertices covered by v (one level down).
    const std::vector<index>& down(index v) const { return down_[v]; }
    /// Vertices covering v (one level up).
    const std::vector<index>& up(index v) const { return up_[v]; }

    std::optional<index> find(const Label& l) const
    {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l)
            return std::nullopt;
        return static_cast<index>(it - labels_.begin());
    }

    index index_of(const Label& l) const
    {
        if (auto v = find(l))
            return *v;
        throw error(errc::unknown_label, "no vertex labelled '" + l.str() + "'");
    }

    bool contains(const Label& l) const { return find(l).has_value(); }

    bool adjacent(index a, index b) const
    {
        const auto& d = down_[a];
        const auto& u = up_[a];
        return std::binary_search(d.begin(), d.end(), b) || std::binary_search(u.begin(), u.end(), b);
    }

    int max_height() const
    {
        return height_.empty() ? -1 : *std::max_element(height_.begin(), height_.end());
    }

    HeightMap height_map() const
    {
        HeightMap m;
        for (index v = 0; v < size(); ++v)
            m.emplace(labels_[v], height_[v]);
        return m;
    }

    /// Edges as label pairs with the smaller label first, sorted.
    std::vector<LabelPair> edges() const
    {
        std::vector<LabelPair> out;
        for (index v = 0; v < size(); ++v)
            for (index c : down_[v])
                out.emplace_back(std::min(labels_[v], labels_[c]), std::max(labels_[v], labels_[c]));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t edge_count() const
    {
        std::size_t e = 0;
        for (const auto& d : down_)
            e += d.size();
        return e;
    }

    /// Index-based edge list (upper, lower).
    std::vector<std::pair<index, index>> index_edges() const
    {
        std::vector<std::pair<index, index>> out;
        for (index v = 0; v < size(); ++v)
            for (index c : down_[v])
                out.emplace_back(v, c);
        return out;
    }

    detail::ShrubParts parts() const { return {labels_, height_, index_edges()}; }

    friend bool operator==(const Shrub&, const Shrub&) = default;
    friend auto operator<=>(const Shrub& a, const Shrub& b)
    {
        if (auto c = a.labels_ <=> b.labels_; c != 0)
            return c;
        if (auto c = a.height_ <=> b.height_; c != 0)
            return c;
        return a.down_ <=> b.down_;
    }

private:
    friend Shrub detail::assemble(detail::ShrubParts parts, bool validate);

    std::vector<Label> labels_;
    std::vector<int> height_;
    std::vector<std::vector<index>> down_;
    std::vector<std::vector<index>> up_;
};

namespace detail {

inline std::string describe(const std::vector<Label>& labels, const std::vector<index>& vs)
{
    std::string s = "{";
    for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k)
            s += ",";
        s += labels[vs[k]].str();
    }
    return s + "}";
}

inline Shrub assemble(ShrubParts parts, bool validate)
{
    const index n = parts.labels.size();
    if (parts.height.size() != n)
        throw std::invalid_argument("height vector size mismatch");

    std::vector<index> order(n);
    std::iota(order.begin(), order.end(), index{0});
    std::sort(order.begin(), order.end(), [&](index a, index b) { return parts.labels[a] < parts.labels[b]; });
    std::vector<index> pos(n);
    for (index k = 0; k < n; ++k)
        pos[order[k]] = k;

    Shrub s;
    s.labels_.resize(n);
    s.height_.resize(n);
    for (index k = 0; k < n; ++k) {
        s.labels_[k] = std::move(parts.labels[order[k]]);
        s.height_[k] = parts.height[order[k]];
        if (k > 0 && s.labels_[k] == s.labels_[k - 1])
            throw error(errc::label_clash, "duplicate vertex label '" + s.labels_[k].str() + "'");
        if (s.height_[k] < 0)
            throw error(errc::unsupported, "negative height at vertex '" + s.labels_[k].str() + "'");
    }
    s.down_.assign(n, {});
    s.up_.assign(n, {});
    for (auto [a, b] : parts.edges) {
        a = pos[a];
        b = pos[b];
        if (s.height_[a] < s.height_[b])
            std::swap(a, b);
        if (s.height_[a] != s.height_[b] + 1)
            throw error(errc::height_jump, "edge {" + s.labels_[a].str() + "," + s.labels_[b].str()
                                               + "} joins heights " + std::to_string(s.height_[b]) + " and "
                                               + std::to_string(s.height_[a]));
        s.down_[a].push_back(b);
        s.up_[b].push_back(a);
    }
    for (auto* adj : {&s.down_, &s.up_})
        for (auto& l : *adj) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }

    if (validate) {
        if (auto v = check_cover_axioms(s.height_, s.down_)) {
            if (v->code == errc::unsupported)
                throw error(errc::unsupported, "vertex '" + s.labels_[v->witnesses[0]].str()
                                                   + "' has positive height but covers nothing");
            throw error(errc::forbidden_pattern,
                        v->pattern + " on " + describe(s.labels_, v->witnesses));
        }
    }
    return s;
}

} // namespace detail

/// Builds a shrub from labelled data, checking all three axioms.
inline Shrub validate_shrub(const std::vector<Label>& vertices, const HeightMap& height,
                            const std::vector<LabelPair>& edges)
{
    detail::ShrubParts parts;
    parts.labels = vertices;
    std::map<Label, detail::index> idx;
    for (detail::index k = 0; k < vertices.size(); ++k) {
        if (!idx.emplace(vertices[k], k).second)
            throw error(errc::label_clash, "duplicate vertex label '" + vertices[k].str() + "'");
    }
    parts.height.assign(vertices.size(), 0);
    std::vector<bool> seen(vertices.size(), false);
    for (const auto& [l, h] : height) {
        auto it = idx.find(l);
        if (it == idx.end())
            throw error(errc::unknown_label, "height given for unknown vertex '" + l.str() + "'");
        parts.height[it->second] = h;
        seen[it->second] = true;
    }
    for (detail::index k = 0; k < vertices.size(); ++k)
        if (!seen[k])
            throw error(errc::unknown_label, "no height given for vertex '" + vertices[k].str() + "'");
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            throw error(errc::unknown_label,
                        "edge {" + a.str() + "," + b.str() + "} mentions an unknown vertex");
        parts.edges.emplace_back(ia->second, ib->second);
    }
    return detail::assemble(std::move(parts), true);
}

/// Re-runs validation on an existing value (used by tests on derived shrubs).
inline bool is_valid(const Shrub& p)
{
    try {
        validate_shrub(p.labels(), p.height_map(), p.edges());
        return true;
    } catch (const error&) {
        return false;
    }
}

inline LabelSet labels_of(const Shrub& p, const std::vector<detail::index>& vs)
{
    LabelSet out;
    out.reserve(vs.size());
    for (auto v : vs)
        out.push_back(p.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Vertices covered by j.
inline LabelSet covers(const Shrub& p, const Label& j)
{
    return labels_of(p, p.down(p.index_of(j)));
}

/// Induced sub-graph on a vertex mask; heights unchanged. Validated unless `trusted`.
inline Shrub induced(const Shrub& p, const std::vector<char>& keep, bool trusted = false)
{
    detail::ShrubParts parts;
    std::vector<detail::index> pos(p.size(), static_cast<detail::index>(-1));
    for (detail::index v = 0; v < p.size(); ++v)
        if (keep[v]) {
            pos[v] = parts.labels.size();
            parts.labels.push_back(p.label(v));
            parts.height.push_back(p.height(v));
        }
    for (auto [a, b] : p.index_edges())
        if (keep[a] && keep[b])
            parts.edges.emplace_back(pos[a], pos[b]);
    return detail::assemble(std::move(parts), !trusted);
}

inline Shrub induced(const Shrub& p, const LabelSet& subset)
{
    std::vector<char> keep(p.size(), 0);
    for (const auto& l : subset)
        keep[p.index_of(l)] = 1;
    return induced(p, keep);
}

/// Component id per vertex (ids ordered by smallest member).
inline std::vector<std::size_t> component_ids(const Shrub& p)
{
    const auto n = p.size();
    std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
    std::size_t next = 0;
    std::vector<detail::index> stack;
    for (detail::index s = 0; s < n; ++s) {
        if (id[s] != static_cast<std::size_t>(-1))
            continue;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto* adj : {&p.down(v), &p.up(v)})
                for (auto w : *adj)
                    if (id[w] == static_cast<std::size_t>(-1)) {
                        id[w] = next;
                        stack.push_back(w);
                    }
        }
        ++next;
    }
    return id;
}

inline bool is_connected(const Shrub& p)
{
    auto id = component_ids(p);
    return std::all_of(id.begin(), id.end(), [](auto c) { return c == 0; });
}

/// Connected components, ordered by smallest label.
inline std::vector<Shrub> connected_components(const Shrub& p)
{
    auto id = component_ids(p);
    std::size_t count = id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
    std::vector<Shrub> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<char> keep(p.size());
        for (detail::index v = 0; v < p.size(); ++v)
            keep[v] = id[v] == c;
        out.push_back(induced(p, keep, true));
    }
    return out;
}

/// An equivalence class of ramified vertices and the set they all cover.
struct RamClass {
    LabelSet members;
    LabelSet targets;

    friend bool operator==(const RamClass&, const RamClass&) = default;
    friend auto operator<=>(const RamClass&, const RamClass&) = default;
};

inline std::vector<RamClass> ram_classes(const Shrub& p)
{
    std::map<std::vector<detail::index>, std::vector<detail::index>> groups;
    for (detail::index v = 0; v < p.size(); ++v)
        if (p.down(v).size() >= 2)
            groups[p.down(v)].push_back(v);
    std::vector<RamClass> out;
    for (const auto& [targets, members] : groups)
        out.push_back({labels_of(p, members), labels_of(p, targets)});
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Upper ideal generated by `seed` inside the sub-shrub selected by `mask`.
inline std::vector<char> ideal_mask(const Shrub& p, const std::vector<char>& mask, const std::vector<char>& seed)
{
    const auto n = p.size();
    std::vector<index> order(n);
    std::iota(order.begin(), order.end(), index{0});
    std::stable_sort(order.begin(), order.end(), [&](index a, index b) { return p.height(a) < p.height(b); });
    std::vector<char> in(n, 0);
    for (index v : order) {
        if (!mask[v])
            continue;
        if (seed[v]) {
            in[v] = 1;
            continue;
        }
        if (p.height(v) == 0)
            continue;
        bool all = true, any = false;
        for (index c : p.down(v))
            if (mask[c]) {
                any = true;
                all = all && in[c];
            }
        in[v] = any && all;
    }
    return in;
}

} // namespace detail

/// Minimal upper ideal containing S: vertices all of whose descending paths meet S.
inline LabelSet upper_ideal(const Shrub& p, const LabelSet& s)
{
    std::vector<char> seed(p.size(), 0);
    for (const auto& l : s)
        seed[p.index_of(l)] = 1;
    auto in = detail::ideal_mask(p, std::vector<char>(p.size(), 1), seed);
    LabelSet out;
    for (detail::index v = 0; v < p.size(); ++v)
        if (in[v])
            out.push_back(p.label(v));
    return out;
}

/// Vertices covering exactly one vertex and covered by none.
inline LabelSet leaves(const Shrub& p)
{
    LabelSet out;
    for (detail::index v = 0; v < p.size(); ++v)
        if (p.down(v).size() == 1 && p.up(v).empty())
            out.push_back(p.label(v));
    return out;
}

/// Pairs of distinct vertices with equal cover sets and equal coverer sets, (smaller, larger).
inline std::vector<LabelPair> correlated_pairs(const Shrub& p)
{
    std::vector<LabelPair> out;
    for (detail::index a = 0; a < p.size(); ++a)
        for (detail::index b = a + 1; b < p.size(); ++b)
            if (p.height(a) == p.height(b) && p.down(a) == p.down(b) && p.up(a) == p.up(b))
                out.emplace_back(p.label(a), p.label(b));
    return out;
}

inline bool is_leaf(const Shrub& p, const Label& i)
{
    auto v = p.index_of(i);
    return p.down(v).size() == 1 && p.up(v).empty();
}

inline bool are_correlated(const Shrub& p, const Label& i, const Label& j)
{
    auto a = p.index_of(i), b = p.index_of(j);
    return a != b && p.height(a) == p.height(b) && p.down(a) == p.down(b) && p.up(a) == p.up(b);
}

inline Shrub delete_leaf(const Shrub& p, const Label& i)
{
    if (!is_leaf(p, i))
        throw error(errc::not_a_leaf, "'" + i.str() + "' is not a leaf");
    std::vector<char> keep(p.size(), 1);
    keep[p.index_of(i)] = 0;
    return induced(p, keep, true);
}

/// Identifies two correlated vertices; the merged vertex is called `merged`.
inline Shrub merge_correlated(const Shrub& p, const Label& i, const Label& j, const Label& merged)
{
    if (!are_correlated(p, i, j))
        throw error(errc::not_correlated, "'" + i.str() + "' and '" + j.str() + "' are not correlated");
    auto vi = p.index_of(i), vj = p.index_of(j);
    for (detail::index v = 0; v < p.size(); ++v)
        if (v != vi && v != vj && p.label(v) == merged)
            throw error(errc::label_clash, "label '" + merged.str() + "' already in use");
    std::vector<char> keep(p.size(), 1);
    keep[vj] = 0;
    auto parts = induced(p, keep, true).parts();
    for (auto& l : parts.labels)
        if (l == i)
            l = merged;
    return detail::assemble(std::move(parts), false);
}

/// Induced sub-shrub on heights >= h0, shifted down by h0.
inline Shrub truncate_at_or_above(const Shrub& p, int h0)
{
    std::vector<char> keep(p.size());
    for (detail::index v = 0; v < p.size(); ++v)
        keep[v] = p.height(v) >= h0;
    auto parts = induced(p, keep, true).parts();
    for (auto& h : parts.height)
        h -= h0;
    return detail::assemble(std::move(parts), false);
}

/// Renames vertices; labels missing from the map are kept.
inline Shrub relabel(const Shrub& p, const std::map<Label, Label>& rename)
{
    auto parts = p.parts();
    for (auto& l : parts.labels)
        if (auto it = rename.find(l); it != rename.end())
            l = it->second;
    return detail::assemble(std::move(parts), false);
}

inline std::string to_string(const Shrub& p)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t v = 0; v < p.size(); ++v)
        os << (v ? " " : "") << p.label(v) << ":" << p.height(v);
    os << " |";
    for (const auto& [a, b] : p.edges())
        os << " " << a << "-" << b;
    os << "}";
    return os.str();
}

} // namespace shrubs
