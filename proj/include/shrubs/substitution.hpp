#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "shrubs/error.hpp"
#include "shrubs/fraction.hpp"
#include "shrubs/polynomial.hpp"

namespace shrubs {

/// A permutation of {0..n} in one-line notation: perm[i] is the image of i.
using Permutation = std::vector<int>;

inline bool is_permutation(const Permutation& p)
{
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

inline Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    return p;
}

inline Permutation transposition(int n, int a, int b)
{
    auto p = identity_permutation(n);
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return p;
}

/// (s * t)(i) = s(t(i)).
inline Permutation compose_permutations(const Permutation& s, const Permutation& t)
{
    if (s.size() != t.size())
        throw std::invalid_argument("composing permutations of different sizes");
    Permutation r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        r[i] = s[static_cast<std::size_t>(t[i])];
    return r;
}

inline Permutation parse_permutation(const std::string& text)
{
    Permutation p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            p.push_back(std::stoi(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw error(errc::parse_error, "bad permutation entry '" + item + "'");
        }
    }
    if (!is_permutation(p))
        throw error(errc::parse_error, "'" + text + "' is not a permutation of 0..n");
    return p;
}

inline std::string to_string(const Permutation& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

/// Sends u_i to u_perm(i), then eliminates u_0 through u_0 = -(u_1 + ... + u_n).
inline RawForm permute_variables(const RawForm& f, const Permutation& perm)
{
    const int n = static_cast<int>(perm.size()) - 1;
    RawForm moved;
    for (const auto& [l, c] : f) {
        int i = -1;
        if (l.is_numeric())
            i = std::stoi(l.str());
        if (i < 0 || i > n)
            throw error(errc::unknown_label, "variable u" + l.str() + " is outside u0..u" + std::to_string(n));
        add_term(moved, Label(perm[static_cast<std::size_t>(i)]), c);
    }
    auto zero = moved.find(Label(0));
    if (zero != moved.end()) {
        const auto c0 = zero->second;
        moved.erase(zero);
        for (int k = 1; k <= n; ++k)
            add_term(moved, Label(k), -c0);
    }
    return moved;
}

/// The same action on a polynomial in u_1..u_n.
inline Polynomial permute_variables(const Polynomial& p, const Permutation& perm)
{
    // rename through fresh names so that overlapping images do not collide
    std::map<Label, Label> to_fresh;
    for (const auto& v : p.variables())
        to_fresh.emplace(v, Label("#" + v.str()));
    Polynomial out = p.rename(to_fresh);
    for (const auto& v : p.variables()) {
        RawForm image;
        image.emplace(v, 1);
        out = out.substitute(Label("#" + v.str()), Polynomial::from_form(permute_variables(image, perm)));
    }
    return out;
}

inline RationalFunction permute_variables(const RationalFunction& f, const Permutation& perm)
{
    return {permute_variables(f.num, perm), permute_variables(f.den, perm)};
}

} // namespace shrubs
