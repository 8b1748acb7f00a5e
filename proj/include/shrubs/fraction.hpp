#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shrubs/error.hpp"
#include "shrubs/label.hpp"
#include "shrubs/rational.hpp"

namespace shrubs {

/// Unnormalised integer linear form; zero coefficients are not stored.
using RawForm = std::map<Label, std::int64_t>;

inline void add_term(RawForm& f, const Label& l, std::int64_t c)
{
    if (c == 0)
        return;
    auto [it, fresh] = f.emplace(l, c);
    if (!fresh) {
        it->second = detail::checked_add(it->second, c);
        if (it->second == 0)
            f.erase(it);
    }
}

/// A primitive integer linear form sum c_k u_k whose first coefficient (in label
/// order) is positive. Any scale or sign lives in the owning fraction.
class LinearForm {
public:
    using Term = std::pair<Label, std::int64_t>;

    struct Normalized;

    /// Splits a nonzero raw form into sign * content * primitive form; nullopt for zero.
    static std::optional<Normalized> normalize(const RawForm& raw);

    static LinearForm variable(const Label& l) { return LinearForm({{l, 1}}); }

    static LinearForm subset_sum(const LabelSet& s)
    {
        if (s.empty())
            throw std::invalid_argument("empty subset sum");
        std::vector<Term> t;
        for (const auto& l : s)
            t.emplace_back(l, 1);
        return LinearForm(std::move(t));
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    std::int64_t coefficient(const Label& l) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), l,
                                   [](const Term& t, const Label& x) { return t.first < x; });
        return it != terms_.end() && it->first == l ? it->second : 0;
    }

    bool involves(const Label& l) const { return coefficient(l) != 0; }

    LabelSet support() const
    {
        LabelSet s;
        for (const auto& [l, c] : terms_)
            s.push_back(l);
        return s;
    }

    bool is_variable() const noexcept { return terms_.size() == 1; }

    bool is_subset_sum() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second == 1; });
    }

    std::int64_t coefficient_sum() const
    {
        std::int64_t s = 0;
        for (const auto& [l, c] : terms_)
            s = detail::checked_add(s, c);
        return s;
    }

    RawForm raw() const { return RawForm(terms_.begin(), terms_.end()); }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

    /// Canonical factor order: fewer terms first, then lexicographic.
    friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return a.terms_.size() <=> b.terms_.size();
        return a.terms_ <=> b.terms_;
    }

private:
    explicit LinearForm(std::vector<Term> t) : terms_(std::move(t)) {}

    std::vector<Term> terms_;
};

struct LinearForm::Normalized {
    int sign;
    std::int64_t content;
    LinearForm form;
};

inline std::optional<LinearForm::Normalized> LinearForm::normalize(const RawForm& raw)
{
    std::vector<Term> t;
    std::int64_t g = 0;
    for (const auto& [l, c] : raw)
        if (c != 0) {
            t.emplace_back(l, c);
            g = std::gcd(g, c < 0 ? -c : c);
        }
    if (t.empty())
        return std::nullopt;
    int sign = t.front().second < 0 ? -1 : 1;
    for (auto& [l, c] : t)
        c = c / g * sign;
    return Normalized{sign, g, LinearForm(std::move(t))};
}

/// sign * scalar * prod(numerator) / prod(denominator), factors canonical and sorted.
class FactoredFraction {
public:
    /// The constant 1.
    FactoredFraction() = default;

    /// Normalises every factor and, if `reduce`, cancels factors common to both sides.
    /// Throws zero_denominator for a vanishing denominator factor; returns nullopt
    /// through try_make when a numerator factor vanishes.
    static std::optional<FactoredFraction> try_make(int sign, Rational scalar, const std::vector<RawForm>& num,
                                                    const std::vector<RawForm>& den, bool reduce = true)
    {
        if (scalar == 0)
            return std::nullopt;
        FactoredFraction f;
        f.sign_ = sign < 0 ? -1 : 1;
        if (scalar < 0) {
            f.sign_ = -f.sign_;
            scalar = -scalar;
        }
        f.scalar_ = std::move(scalar);
        for (const auto& r : den) {
            auto n = LinearForm::normalize(r);
            if (!n)
                throw error(errc::zero_denominator, "denominator factor vanishes");
            f.sign_ *= n->sign;
            f.scalar_ /= n->content;
            f.den_.push_back(std::move(n->form));
        }
        for (const auto& r : num) {
            auto n = LinearForm::normalize(r);
            if (!n)
                return std::nullopt;
            f.sign_ *= n->sign;
            f.scalar_ *= n->content;
            f.num_.push_back(std::move(n->form));
        }
        std::sort(f.num_.begin(), f.num_.end());
        std::sort(f.den_.begin(), f.den_.end());
        if (reduce)
            f.cancel();
        return f;
    }

    static FactoredFraction make(int sign, Rational scalar, const std::vector<RawForm>& num,
                                 const std::vector<RawForm>& den, bool reduce = true)
    {
        auto f = try_make(sign, std::move(scalar), num, den, reduce);
        if (!f)
            throw std::domain_error("fraction is zero");
        return *f;
    }

    static FactoredFraction from_forms(std::vector<LinearForm> num, std::vector<LinearForm> den, int sign = 1,
                                       Rational scalar = 1, bool reduce = true)
    {
        FactoredFraction f;
        f.sign_ = sign;
        f.scalar_ = std::move(scalar);
        f.num_ = std::move(num);
        f.den_ = std::move(den);
        std::sort(f.num_.begin(), f.num_.end());
        std::sort(f.den_.begin(), f.den_.end());
        if (reduce)
            f.cancel();
        return f;
    }

    int sign() const noexcept { return sign_; }
    const Rational& scalar() const noexcept { return scalar_; }
    const std::vector<LinearForm>& numerator() const noexcept { return num_; }
    const std::vector<LinearForm>& denominator() const noexcept { return den_; }

    /// sign * scalar as one rational.
    Rational coefficient() const { return sign_ < 0 ? Rational(-scalar_) : scalar_; }

    /// Same factors with sign + and scalar 1.
    FactoredFraction monic() const
    {
        FactoredFraction f = *this;
        f.sign_ = 1;
        f.scalar_ = 1;
        return f;
    }

    FactoredFraction negated() const
    {
        FactoredFraction f = *this;
        f.sign_ = -f.sign_;
        return f;
    }

    bool is_reduced() const
    {
        for (const auto& a : num_)
            if (std::binary_search(den_.begin(), den_.end(), a))
                return false;
        return true;
    }

    bool is_squarefree() const
    {
        return std::adjacent_find(num_.begin(), num_.end()) == num_.end()
               && std::adjacent_find(den_.begin(), den_.end()) == den_.end();
    }

    /// Numerator degree minus denominator degree.
    long degree() const { return static_cast<long>(num_.size()) - static_cast<long>(den_.size()); }

    LabelSet variables() const
    {
        std::vector<Label> v;
        for (const auto* side : {&num_, &den_})
            for (const auto& f : *side)
                for (const auto& [l, c] : f.terms())
                    v.push_back(l);
        return make_label_set(std::move(v));
    }

    /// Applies `map` to every factor, then renormalises and reduces.
    template <class Fn>
    std::optional<FactoredFraction> try_map_forms(Fn&& map) const
    {
        std::vector<RawForm> n, d;
        for (const auto& f : num_)
            n.push_back(map(f.raw()));
        for (const auto& f : den_)
            d.push_back(map(f.raw()));
        return try_make(sign_, scalar_, n, d, true);
    }

    friend FactoredFraction operator*(const FactoredFraction& a, const FactoredFraction& b)
    {
        FactoredFraction f;
        f.sign_ = a.sign_ * b.sign_;
        f.scalar_ = a.scalar_ * b.scalar_;
        f.num_ = a.num_;
        f.num_.insert(f.num_.end(), b.num_.begin(), b.num_.end());
        f.den_ = a.den_;
        f.den_.insert(f.den_.end(), b.den_.begin(), b.den_.end());
        std::sort(f.num_.begin(), f.num_.end());
        std::sort(f.den_.begin(), f.den_.end());
        f.cancel();
        return f;
    }

    FactoredFraction inverse() const
    {
        FactoredFraction f;
        f.sign_ = sign_;
        f.scalar_ = 1 / scalar_;
        f.num_ = den_;
        f.den_ = num_;
        return f;
    }

    friend bool operator==(const FactoredFraction&, const FactoredFraction&) = default;

    friend bool operator<(const FactoredFraction& a, const FactoredFraction& b)
    {
        if (a.den_ != b.den_)
            return a.den_ < b.den_;
        if (a.num_ != b.num_)
            return a.num_ < b.num_;
        if (a.sign_ != b.sign_)
            return a.sign_ < b.sign_;
        return a.scalar_ < b.scalar_;
    }

private:
    void cancel()
    {
        std::vector<LinearForm> n, d;
        std::set_difference(num_.begin(), num_.end(), den_.begin(), den_.end(), std::back_inserter(n));
        std::set_difference(den_.begin(), den_.end(), num_.begin(), num_.end(), std::back_inserter(d));
        num_ = std::move(n);
        den_ = std::move(d);
    }

    int sign_ = 1;
    Rational scalar_ = 1;
    std::vector<LinearForm> num_;
    std::vector<LinearForm> den_;
};

// ---------------------------------------------------------------------------
// Text format
//
//   fraction := ['-'] side '/' den | ['-'] side
//   side     := INT | [INT '*'] factors
//   den      := INT | '(' [INT '*'] factors ')'
//   factors  := ('(' form ')')+
//   form     := term (('+'|'-') term)*      term := [INT '*'] 'u' LABEL
//
// e.g. "1/((u1)(u1+u2))". The parser is more lenient: '*' and blanks between
// factors are optional, and nested parentheses are flattened.
// ---------------------------------------------------------------------------

inline std::string to_text(const LinearForm& f)
{
    std::string s;
    bool first = true;
    for (const auto& [l, c] : f.terms()) {
        std::int64_t mag = c < 0 ? -c : c;
        if (c < 0)
            s += "-";
        else if (!first)
            s += "+";
        if (mag != 1)
            s += std::to_string(mag) + "*";
        s += "u" + l.str();
        first = false;
    }
    return s;
}

inline std::string to_text(const FactoredFraction& f)
{
    auto factors = [](const std::vector<LinearForm>& fs) {
        std::string s;
        for (const auto& x : fs)
            s += "(" + to_text(x) + ")";
        return s;
    };
    const Rational& q = f.scalar();
    const auto p = numerator(q).str();
    const auto d = denominator(q).str();
    std::string s = f.sign() < 0 ? "-" : "";
    if (f.numerator().empty())
        s += p;
    else
        s += (p == "1" ? "" : p + "*") + factors(f.numerator());
    if (!f.denominator().empty())
        s += "/(" + (d == "1" ? "" : d + "*") + factors(f.denominator()) + ")";
    else if (d != "1")
        s += "/" + d;
    return s;
}

namespace detail {

class FractionParser {
public:
    explicit FractionParser(std::string_view text) : s_(text) {}

    FactoredFraction parse()
    {
        skip();
        int sign = 1;
        if (peek() == '-') {
            ++pos_;
            sign = -1;
        }
        Product num = product();
        Product den;
        skip();
        if (peek() == '/') {
            ++pos_;
            den = product();
        }
        skip();
        if (pos_ != s_.size())
            fail("trailing characters");
        if (den.scalar == 0)
            throw error(errc::zero_denominator, "denominator is zero in '" + std::string(s_) + "'");
        auto f = FactoredFraction::try_make(sign, num.scalar / den.scalar, num.forms, den.forms);
        if (!f)
            fail("the fraction is zero");
        return *f;
    }

private:
    struct Product {
        Rational scalar = 1;
        std::vector<RawForm> forms;
    };

    [[noreturn]] void fail(const std::string& why) const
    {
        throw error(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    static bool label_char(char c)
    {
        return !(std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' || c == '/'
                 || c == '(' || c == ')' || c == '\0');
    }

    std::int64_t integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    Label variable()
    {
        if (peek() != 'u')
            fail("expected a variable 'u<label>'");
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() && label_char(s_[pos_]))
            ++pos_;
        if (start == pos_)
            fail("empty variable label");
        return Label(std::string(s_.substr(start, pos_ - start)));
    }

    // Inside parentheses: either a linear form or a nested product.
    void group(Product& out)
    {
        skip();
        if (peek() == '(' || (std::isdigit(static_cast<unsigned char>(peek())) && !form_ahead())) {
            Product inner = product();
            out.scalar *= inner.scalar;
            out.forms.insert(out.forms.end(), inner.forms.begin(), inner.forms.end());
            return;
        }
        RawForm f;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                break;
            }
            std::int64_t c = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = integer();
                skip();
                if (peek() == '*')
                    ++pos_;
                skip();
            }
            add_term(f, variable(), sign * c);
            first = false;
        }
        out.forms.push_back(std::move(f));
        // juxtaposed factors inside the same parentheses, as in (u1 (u1+u2)) or (u1*u2)
        skip();
        if (peek() == '*')
            ++pos_;
        skip();
        if (peek() == '(' || peek() == 'u' || std::isdigit(static_cast<unsigned char>(peek()))) {
            Product more = product();
            out.scalar *= more.scalar;
            out.forms.insert(out.forms.end(), more.forms.begin(), more.forms.end());
        }
    }

    // An integer immediately followed by '*u' or 'u' means a form term.
    bool form_ahead() const
    {
        std::size_t p = pos_;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p])))
            ++p;
        while (p < s_.size() && (std::isspace(static_cast<unsigned char>(s_[p])) || s_[p] == '*'))
            ++p;
        return p < s_.size() && s_[p] == 'u';
    }

    Product product()
    {
        Product out;
        bool any = false;
        while (true) {
            skip();
            char c = peek();
            if (c == '(') {
                ++pos_;
                group(out);
                skip();
                if (peek() != ')')
                    fail("expected ')'");
                ++pos_;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                out.scalar *= Rational(integer());
            } else if (c == 'u') {
                RawForm f;
                f.emplace(variable(), 1);
                out.forms.push_back(std::move(f));
            } else if (c == '*' && any) {
                ++pos_;
                continue;
            } else {
                break;
            }
            any = true;
        }
        if (!any)
            fail("expected a factor");
        return out;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline FactoredFraction parse_fraction(std::string_view text)
{
    return detail::FractionParser(text).parse();
}

} // namespace shrubs
