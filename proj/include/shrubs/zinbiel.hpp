#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "shrubs/genword.hpp"
#include "shrubs/rational.hpp"
#include "shrubs/shrub.hpp"

namespace shrubs {

/// A total order written as a list, minimum first.
using TotalOrder = std::vector<Label>;

inline constexpr std::size_t linear_extension_cap = 9;

/// Element of Zinb(I): exact rational combination of total orders on one label set.
class ZinbElement {
public:
    ZinbElement() = default;
    explicit ZinbElement(LabelSet labels) : labels_(std::move(labels)) {}

    static ZinbElement basis(const TotalOrder& order)
    {
        ZinbElement x(make_label_set(order));
        if (x.labels_.size() != order.size())
            throw std::invalid_argument("total order repeats a label");
        x.terms_.emplace(order, Rational(1));
        return x;
    }

    const LabelSet& labels() const noexcept { return labels_; }
    const std::map<TotalOrder, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const TotalOrder& o) const
    {
        auto it = terms_.find(o);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const TotalOrder& o, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(o, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    ZinbElement& operator+=(const ZinbElement& other)
    {
        if (!is_zero() && !other.is_zero() && labels_ != other.labels_)
            throw std::invalid_argument("adding Zinbiel elements over different label sets");
        if (labels_.empty())
            labels_ = other.labels_;
        for (const auto& [o, c] : other.terms_)
            add(o, c);
        return *this;
    }

    friend ZinbElement operator*(const Rational& c, ZinbElement x)
    {
        if (c == 0)
            return ZinbElement(x.labels_);
        for (auto& [o, v] : x.terms_)
            v *= c;
        return x;
    }

    friend bool operator==(const ZinbElement& a, const ZinbElement& b)
    {
        return a.terms_ == b.terms_ && (a.terms_.empty() || a.labels_ == b.labels_);
    }

private:
    LabelSet labels_;
    std::map<TotalOrder, Rational> terms_;
};

/// Text form: "c*[a b c] + c*[...]", orders sorted; "0" for the zero element.
inline std::string to_string(const ZinbElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [o, c] : x.terms()) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        os << to_string(mag) << "*[";
        for (std::size_t k = 0; k < o.size(); ++k)
            os << (k ? " " : "") << o[k];
        os << "]";
        first = false;
    }
    return os.str();
}

/// Backtracking over available elements: `ready(placed, v)` decides whether
/// element v may come next. Visits every complete arrangement of 0..n-1.
inline void for_each_arrangement(std::size_t n,
                                 const std::function<bool(const std::vector<char>&, std::size_t)>& ready,
                                 const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    if (n > linear_extension_cap)
        throw error(errc::cap_exceeded, "order enumeration capped at " + std::to_string(linear_extension_cap) + " labels");
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> cur;
    cur.reserve(n);
    std::function<void()> rec = [&] {
        if (cur.size() == n) {
            visit(cur);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v] || !ready(placed, v))
                continue;
            placed[v] = 1;
            cur.push_back(v);
            rec();
            cur.pop_back();
            placed[v] = 0;
        }
    };
    rec();
}

/// Orders in which each vertex of positive height exceeds at least one vertex it covers.
inline std::vector<TotalOrder> compatible_orders(const Shrub& p)
{
    std::vector<TotalOrder> out;
    for_each_arrangement(
        p.size(),
        [&](const std::vector<char>& placed, std::size_t v) {
            if (p.height(v) == 0)
                return true;
            for (auto c : p.down(v))
                if (placed[c])
                    return true;
            return false;
        },
        [&](const std::vector<std::size_t>& o) {
            TotalOrder lab;
            for (auto v : o)
                lab.push_back(p.label(v));
            out.push_back(std::move(lab));
        });
    return out;
}

/// gamma(P): the sum of the orders compatible with P.
inline ZinbElement gamma(const Shrub& p)
{
    ZinbElement x(p.labels());
    for (const auto& o : compatible_orders(p))
        x.add(o, Rational(1));
    return x;
}

/// Composition of two basis orders, i.e. the half-shuffle substitution
/// pi_1 .. pi_{k-1} sigma_1 (sigma_2 .. sigma_m  sh  pi_{k+1} .. pi_n) where pi_k = i:
/// linear extensions of the partial order that keeps pi on I\{i} and sigma on I',
/// puts every a <_pi i before all of I', and puts sigma_1 before every a >_pi i.
inline ZinbElement zinb_compose(const TotalOrder& pi, const Label& i, const TotalOrder& sigma)
{
    auto slot = std::find(pi.begin(), pi.end(), i);
    if (slot == pi.end())
        throw error(errc::unknown_label, "'" + i.str() + "' is not in the outer order");
    const auto slot_pos = static_cast<std::size_t>(slot - pi.begin());

    std::vector<Label> all;
    std::vector<int> side;      // 0: from pi, 1: from sigma
    std::vector<std::size_t> rank; // position inside its own list
    for (std::size_t k = 0; k < pi.size(); ++k)
        if (k != slot_pos) {
            all.push_back(pi[k]);
            side.push_back(0);
            rank.push_back(k);
        }
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        if (std::find(all.begin(), all.end(), sigma[k]) != all.end())
            throw error(errc::label_clash, "label '" + sigma[k].str() + "' occurs on both sides");
        all.push_back(sigma[k]);
        side.push_back(1);
        rank.push_back(k);
    }
    const auto n = all.size();
    // strict predecessors
    std::vector<std::vector<std::size_t>> pred(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            bool before = (side[a] == side[b] && rank[a] < rank[b]) || (side[a] == 0 && side[b] == 1 && rank[a] < slot_pos)
                          || (side[a] == 1 && rank[a] == 0 && side[b] == 0 && rank[b] > slot_pos);
            if (before)
                pred[b].push_back(a);
        }
    ZinbElement out(make_label_set(all));
    for_each_arrangement(
        n,
        [&](const std::vector<char>& placed, std::size_t v) {
            for (auto a : pred[v])
                if (!placed[a])
                    return false;
            return true;
        },
        [&](const std::vector<std::size_t>& o) {
            TotalOrder lab;
            lab.reserve(n);
            for (auto k : o)
                lab.push_back(all[k]);
            out.add(lab, Rational(1));
        });
    return out;
}

/// Bilinear extension of the basis composition.
inline ZinbElement zinb_compose(const ZinbElement& x, const Label& i, const ZinbElement& y)
{
    if (!contains(x.labels(), i))
        throw error(errc::unknown_label, "'" + i.str() + "' is not in the outer label set");
    LabelSet rest;
    for (const auto& l : x.labels())
        if (l != i)
            rest.push_back(l);
    detail::require_disjoint(rest, y.labels());
    auto merged = rest;
    merged.insert(merged.end(), y.labels().begin(), y.labels().end());
    ZinbElement out(make_label_set(merged));
    for (const auto& [pi, a] : x.terms())
        for (const auto& [sigma, b] : y.terms())
            out += (a * b) * zinb_compose(pi, i, sigma);
    return out;
}

/// gamma computed through the generator decomposition: [2<|1] -> [21], [1][2] -> [12]+[21].
inline ZinbElement gamma_by_generators(const Shrub& p)
{
    std::function<ZinbElement(const GenWord&)> eval = [&](const GenWord& w) -> ZinbElement {
        if (w.is_leaf())
            return ZinbElement::basis({w.name});
        const Label& a = w.args[0].name;
        const Label& b = w.args[1].name;
        ZinbElement x;
        if (w.gen == GenWord::Gen::C) {
            x = ZinbElement::basis({a, b});
            x += ZinbElement::basis({b, a});
        } else {
            x = ZinbElement::basis({a, b}); // a is the root, so a comes first
        }
        for (const auto& arg : w.args)
            if (!arg.is_leaf())
                x = zinb_compose(x, arg.name, eval(arg));
        return x;
    };
    return eval(decompose(p));
}

} // namespace shrubs
