#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "shrubs/error.hpp"
#include "shrubs/fraction.hpp"
#include "shrubs/label.hpp"
#include "shrubs/rational.hpp"

namespace shrubs {

/// Sparse multivariate polynomial with exact rational coefficients. Exponent
/// vectors are indexed by position in variables(); zero coefficients are never stored.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, Rational>;

    Polynomial() = default;

    explicit Polynomial(const Rational& c)
    {
        if (c != 0)
            terms_.emplace(Exponents{}, c);
    }

    static Polynomial variable(const Label& l)
    {
        Polynomial p;
        p.vars_ = {l};
        p.terms_.emplace(Exponents{1}, Rational(1));
        return p;
    }

    static Polynomial from_form(const RawForm& f)
    {
        Polynomial p;
        for (const auto& [l, c] : f)
            p.vars_.push_back(l);
        for (std::size_t k = 0; k < p.vars_.size(); ++k) {
            Exponents e(p.vars_.size(), 0);
            e[k] = 1;
            p.terms_.emplace(std::move(e), Rational(f.at(p.vars_[k])));
        }
        return p;
    }

    static Polynomial from_form(const LinearForm& f) { return from_form(f.raw()); }

    const LabelSet& variables() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (auto x : e)
                s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// The same polynomial written over `vars`, which must contain variables().
    Polynomial aligned(const LabelSet& vars) const
    {
        if (vars == vars_)
            return *this;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            auto it = std::lower_bound(vars.begin(), vars.end(), vars_[k]);
            if (it == vars.end() || *it != vars_[k])
                throw std::logic_error("aligning to a variable set that misses " + vars_[k].str());
            pos[k] = static_cast<std::size_t>(it - vars.begin());
        }
        Polynomial p;
        p.vars_ = vars;
        for (const auto& [e, c] : terms_) {
            Exponents x(vars.size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                x[pos[k]] = e[k];
            p.terms_.emplace(std::move(x), c);
        }
        return p;
    }

    /// Drops variables that no longer occur.
    Polynomial trimmed() const
    {
        std::vector<char> used(vars_.size(), 0);
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < e.size(); ++k)
                used[k] = used[k] || e[k] > 0;
        if (std::all_of(used.begin(), used.end(), [](char u) { return u; }))
            return *this;
        Polynomial p;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (used[k])
                p.vars_.push_back(vars_[k]);
        for (const auto& [e, c] : terms_) {
            Exponents x;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (used[k])
                    x.push_back(e[k]);
            p.terms_.emplace(std::move(x), c);
        }
        return p;
    }

    Polynomial operator-() const
    {
        Polynomial p = *this;
        for (auto& [e, c] : p.terms_)
            c = -c;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        const auto vars = merged(a, b);
        Polynomial p = a.aligned(vars);
        for (const auto& [e, c] : b.aligned(vars).terms_)
            p.accumulate(e, c);
        return p;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        const auto vars = merged(a, b);
        const Polynomial x = a.aligned(vars), y = b.aligned(vars);
        Polynomial p;
        p.vars_ = vars;
        Exponents e(vars.size());
        for (const auto& [ea, ca] : x.terms_)
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] = ea[k] + eb[k];
                p.accumulate(e, ca * cb);
            }
        return p;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p)
    {
        if (c == 0)
            return Polynomial();
        for (auto& [e, v] : p.terms_)
            v *= c;
        return p;
    }

    /// Exact quotient by a linear form, or nullopt if the form does not divide.
    std::optional<Polynomial> divide(const LinearForm& form) const
    {
        if (is_zero())
            return Polynomial();
        auto support = form.support();
        std::vector<Label> all(vars_);
        all.insert(all.end(), support.begin(), support.end());
        const auto vars = make_label_set(std::move(all));
        Polynomial rest = aligned(vars);
        auto position = [&](const Label& l) {
            return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), l) - vars.begin());
        };
        // pivot on the last variable of the form
        const auto& [pivot_label, pivot_coef] = form.terms().back();
        const std::size_t pv = position(pivot_label);
        std::vector<std::pair<std::size_t, Rational>> lin;
        for (const auto& [l, c] : form.terms())
            lin.emplace_back(position(l), Rational(c));

        Polynomial q;
        q.vars_ = vars;
        while (!rest.is_zero()) {
            unsigned d = 0;
            for (const auto& [e, c] : rest.terms_)
                d = std::max(d, e[pv]);
            if (d == 0)
                return std::nullopt;
            std::vector<std::pair<Exponents, Rational>> top;
            for (const auto& [e, c] : rest.terms_)
                if (e[pv] == d)
                    top.emplace_back(e, c);
            for (auto& [e, c] : top) {
                Exponents base = e;
                --base[pv];
                Rational factor = c / pivot_coef;
                q.accumulate(base, factor);
                for (const auto& [pos, lc] : lin) {
                    Exponents x = base;
                    ++x[pos];
                    rest.accumulate(x, -factor * lc);
                }
            }
        }
        return q.trimmed();
    }

    /// Replaces variable v by `value`.
    Polynomial substitute(const Label& v, const Polynomial& value) const
    {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v)
            return *this;
        const auto pv = static_cast<std::size_t>(it - vars_.begin());
        std::map<unsigned, Polynomial> power_cache{{0u, Polynomial(Rational(1))}};
        auto power = [&](unsigned k) -> const Polynomial& {
            auto found = power_cache.find(k);
            if (found != power_cache.end())
                return found->second;
            Polynomial p = power_cache.rbegin()->second;
            for (unsigned j = power_cache.rbegin()->first; j < k; ++j) {
                p = p * value;
                power_cache.emplace(j + 1, p);
            }
            return power_cache.at(k);
        };
        // group by the exponent of v
        std::map<unsigned, Polynomial> by_power;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            rest[pv] = 0;
            auto& slot = by_power[e[pv]];
            if (slot.vars_.empty() && slot.terms_.empty())
                slot.vars_ = vars_;
            slot.accumulate(rest, c);
        }
        Polynomial out;
        for (auto& [k, part] : by_power)
            out = out + part.trimmed() * power(k);
        return out.trimmed();
    }

    /// Renames variables; the map must be injective on variables().
    Polynomial rename(const std::map<Label, Label>& m) const
    {
        std::vector<Label> target;
        for (const auto& v : vars_) {
            auto it = m.find(v);
            target.push_back(it == m.end() ? v : it->second);
        }
        const auto vars = make_label_set(target);
        if (vars.size() != target.size())
            throw error(errc::label_clash, "renaming merges two variables");
        std::vector<std::size_t> pos;
        for (const auto& t : target)
            pos.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), t) - vars.begin()));
        Polynomial p;
        p.vars_ = vars;
        for (const auto& [e, c] : terms_) {
            Exponents x(vars.size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                x[pos[k]] = e[k];
            p.terms_.emplace(std::move(x), c);
        }
        return p;
    }

    Rational evaluate(const std::map<Label, Rational>& point) const
    {
        std::vector<Rational> values;
        for (const auto& v : vars_) {
            auto it = point.find(v);
            if (it == point.end())
                throw error(errc::unknown_label, "no value for variable u" + v.str());
            values.push_back(it->second);
        }
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                for (unsigned j = 0; j < e[k]; ++j)
                    t *= values[k];
            sum += t;
        }
        return sum;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        const auto vars = merged(a, b);
        return a.aligned(vars).terms_ == b.aligned(vars).terms_;
    }

private:
    static LabelSet merged(const Polynomial& a, const Polynomial& b)
    {
        if (a.vars_ == b.vars_)
            return a.vars_;
        std::vector<Label> all(a.vars_);
        all.insert(all.end(), b.vars_.begin(), b.vars_.end());
        return make_label_set(std::move(all));
    }

    void accumulate(const Exponents& e, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LabelSet vars_;
    Terms terms_;
};

inline Polynomial product_of_forms(const std::vector<LinearForm>& forms)
{
    Polynomial p(Rational(1));
    for (const auto& f : forms)
        p = p * Polynomial::from_form(f);
    return p;
}

inline std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        if (mag != 1 || constant)
            os << to_string(mag) << (constant ? "" : "*");
        bool first_var = true;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) {
                os << (first_var ? "" : "*") << "u" << p.variables()[k];
                if (e[k] > 1)
                    os << "^" << e[k];
                first_var = false;
            }
        first = false;
    }
    return os.str();
}

/// A quotient of two polynomials; equality by cross-multiplication, never by gcd.
struct RationalFunction {
    Polynomial num{Rational(1)};
    Polynomial den{Rational(1)};

    RationalFunction() = default;
    RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d))
    {
        if (den.is_zero())
            throw error(errc::zero_denominator, "rational function with zero denominator");
    }

    static RationalFunction from(const FactoredFraction& f)
    {
        return {f.coefficient() * product_of_forms(f.numerator()), product_of_forms(f.denominator())};
    }

    bool is_zero() const { return num.is_zero(); }

    RationalFunction substitute(const Label& v, const Polynomial& value) const
    {
        return {num.substitute(v, value), den.substitute(v, value)};
    }

    RationalFunction rename(const std::map<Label, Label>& m) const { return {num.rename(m), den.rename(m)}; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num * b.num, a.den * b.den};
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den == b.den)
            return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }

    RationalFunction operator-() const { return {-num, den}; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num * b.den == b.num * a.den;
    }
};

inline std::string to_string(const RationalFunction& f)
{
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

/// A univariate rational function t(u) = num(u)/den(u); coefficient lists start at degree 0.
struct UnivariateRational {
    std::vector<Rational> num{Rational(1)};
    std::vector<Rational> den{Rational(1)};

    static Polynomial horner(const std::vector<Rational>& coef, const Polynomial& x)
    {
        Polynomial p;
        for (auto it = coef.rbegin(); it != coef.rend(); ++it)
            p = p * x + Polynomial(*it);
        return p;
    }

    /// t(x) for a polynomial argument x.
    RationalFunction at(const Polynomial& x) const { return {horner(num, x), horner(den, x)}; }
};

} // namespace shrubs
