#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace shrubs {

/// Vertex and variable identifier.
///
/// Labels are opaque strings with a total order that reads naturally for the
/// common cases: all-digit labels come first and compare numerically
/// ("2" < "10"), everything else follows in byte order.
class Label {
public:
    Label() = default;
    Label(std::string text) : text_(std::move(text)), numeric_(all_digits(text_)) {}
    Label(const char* text) : Label(std::string(text)) {}
    Label(int value) : Label(std::to_string(value)) {}
    Label(long value) : Label(std::to_string(value)) {}
    Label(long long value) : Label(std::to_string(value)) {}
    Label(unsigned value) : Label(std::to_string(value)) {}
    Label(unsigned long value) : Label(std::to_string(value)) {}

    const std::string& str() const noexcept { return text_; }
    bool is_numeric() const noexcept { return numeric_; }

    friend bool operator==(const Label& a, const Label& b) noexcept { return a.text_ == b.text_; }

    friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept
    {
        if (a.numeric_ != b.numeric_)
            return a.numeric_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.numeric_) {
            auto da = significant(a.text_);
            auto db = significant(b.text_);
            if (da.size() != db.size())
                return da.size() <=> db.size();
            if (auto c = da.compare(db); c != 0)
                return c <=> 0;
        }
        return a.text_.compare(b.text_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.text_; }

private:
    static bool all_digits(const std::string& s) noexcept
    {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    }

    static std::string_view significant(const std::string& s) noexcept
    {
        std::string_view v(s);
        while (v.size() > 1 && v.front() == '0')
            v.remove_prefix(1);
        return v;
    }

    std::string text_;
    bool numeric_ = false;
};

using LabelSet = std::vector<Label>; // sorted, unique

inline LabelSet make_label_set(std::vector<Label> labels)
{
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

/// Labels 1..n.
inline LabelSet iota_labels(int n, int first = 1)
{
    LabelSet out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.emplace_back(first + i);
    return out;
}

inline bool contains(const LabelSet& set, const Label& l)
{
    return std::binary_search(set.begin(), set.end(), l);
}

} // namespace shrubs
