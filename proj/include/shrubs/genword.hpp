#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "shrubs/operad.hpp"
#include "shrubs/shrub.hpp"

namespace shrubs {

/// A shrub written in the generators C (= [a][b]) and D (= [a <| b]).
///
/// A leaf is a vertex label. An inner node applies a generator to its two
/// arguments and sits in its parent at the vertex called `name` (its slot).
/// Reading a word bottom-up is the build script "start from one vertex and
/// keep substituting generators into named vertices".
struct GenWord {
    enum class Gen { leaf, C, D };

    Gen gen = Gen::leaf;
    Label name;
    std::vector<GenWord> args;

    static GenWord leaf(Label l) { return {Gen::leaf, std::move(l), {}}; }
    static GenWord node(Gen g, Label slot, GenWord a, GenWord b)
    {
        GenWord w{g, std::move(slot), {}};
        w.args.push_back(std::move(a));
        w.args.push_back(std::move(b));
        return w;
    }

    bool is_leaf() const noexcept { return gen == Gen::leaf; }

    friend bool operator==(const GenWord&, const GenWord&) = default;
};

/// phi: evaluates a word to the shrub it denotes.
inline Shrub evaluate(const GenWord& w)
{
    std::set<Label> seen;
    std::function<Shrub(const GenWord&)> eval = [&](const GenWord& node) -> Shrub {
        if (!seen.insert(node.name).second)
            throw error(errc::malformed_word, "name '" + node.name.str() + "' used twice");
        if (node.is_leaf()) {
            if (!node.args.empty())
                throw error(errc::malformed_word, "leaf '" + node.name.str() + "' has arguments");
            return Shrub::trivial(node.name);
        }
        if (node.args.size() != 2)
            throw error(errc::malformed_word, "generator node '" + node.name.str() + "' needs two arguments");
        const auto& a = node.args[0];
        const auto& b = node.args[1];
        if (a.name == b.name)
            throw error(errc::malformed_word, "generator arguments share the name '" + a.name.str() + "'");
        Shrub result = node.gen == GenWord::Gen::C ? generator_c(a.name, b.name) : generator_d(a.name, b.name);
        for (const auto* arg : {&a, &b}) {
            if (arg->is_leaf()) {
                if (!seen.insert(arg->name).second)
                    throw error(errc::malformed_word, "name '" + arg->name.str() + "' used twice");
                continue;
            }
            try {
                result = compose(result, arg->name, eval(*arg));
            } catch (const error& e) {
                if (e.code() == errc::label_clash)
                    throw error(errc::malformed_word, e.what());
                throw;
            }
        }
        return result;
    };
    return eval(w);
}

namespace detail {

inline bool replace_leaf(GenWord& w, const Label& slot, GenWord& replacement)
{
    if (w.is_leaf()) {
        if (w.name != slot)
            return false;
        w = std::move(replacement);
        return true;
    }
    for (auto& a : w.args)
        if (replace_leaf(a, slot, replacement))
            return true;
    return false;
}

} // namespace detail

/// psi: writes P in the generators.
///
/// Each step peels the smallest correlated pair if there is one (P = P' o [i][j]),
/// otherwise the smallest leaf (P = P' o [j <| i]). Fresh slot names are "□0",
/// "□1", ... skipping labels already present.
inline GenWord decompose(const Shrub& p)
{
    if (p.empty())
        throw std::invalid_argument("cannot decompose the empty shrub");
    std::set<Label> used(p.labels().begin(), p.labels().end());
    int counter = 0;
    auto fresh = [&] {
        while (true) {
            Label l("□" + std::to_string(counter++));
            if (used.insert(l).second)
                return l;
        }
    };

    std::function<GenWord(const Shrub&)> rec = [&](const Shrub& cur) -> GenWord {
        if (cur.size() == 1)
            return GenWord::leaf(cur.label(0));
        Label slot = fresh();
        GenWord piece;
        Shrub rest;
        if (auto pairs = correlated_pairs(cur); !pairs.empty()) {
            const auto& [i, j] = pairs.front();
            rest = merge_correlated(cur, i, j, slot);
            piece = GenWord::node(GenWord::Gen::C, slot, GenWord::leaf(i), GenWord::leaf(j));
        } else {
            auto ls = leaves(cur);
            if (ls.empty())
                throw std::logic_error("shrub without leaf or correlated pair: " + to_string(cur));
            const Label& i = ls.front();
            const Label j = cur.label(cur.down(cur.index_of(i)).front());
            rest = relabel(delete_leaf(cur, i), {{j, slot}});
            piece = GenWord::node(GenWord::Gen::D, slot, GenWord::leaf(j), GenWord::leaf(i));
        }
        GenWord w = rec(rest);
        if (!detail::replace_leaf(w, slot, piece))
            throw std::logic_error("slot vanished during decomposition");
        return w;
    };
    return rec(p);
}

/// All shrubs on 1..n obtained by substituting one generator into one vertex of
/// every shrub on n-1 labels, labels spread over {1..n} minus a free one.
inline std::vector<Shrub> enumerate_shrubs_by_generators(int n, int cap = 6)
{
    if (n > cap)
        throw error(errc::cap_exceeded, "generator enumeration capped at n=" + std::to_string(cap));
    if (n <= 0)
        return {};
    std::vector<Shrub> level{Shrub::trivial(Label(1))};
    for (int m = 2; m <= n; ++m) {
        std::set<Shrub> next;
        for (const auto& prev : level)
            for (int fresh = 1; fresh <= m; ++fresh) {
                std::map<Label, Label> shift;
                for (int k = fresh; k < m; ++k)
                    shift.emplace(Label(k), Label(k + 1));
                Shrub base = relabel(prev, shift);
                const Label f(fresh);
                for (const auto& v : base.labels()) {
                    next.insert(compose(base, v, generator_c(v, f)));
                    next.insert(compose(base, v, generator_d(v, f)));
                    next.insert(compose(base, v, generator_d(f, v)));
                }
            }
        level.assign(next.begin(), next.end());
    }
    return level;
}

} // namespace shrubs
