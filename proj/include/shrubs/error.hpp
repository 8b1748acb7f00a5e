#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shrubs {

/// Failure categories reported by the library. The CLI prints name() on stderr.
enum class errc {
    height_jump,
    unsupported,
    forbidden_pattern,
    unknown_label,
    not_a_leaf,
    not_correlated,
    label_clash,
    malformed_word,
    cap_exceeded,
    not_in_zinbiel_image,
    not_in_image,
    degree_cap_exceeded,
    zero_denominator,
    not_a_forest,
    parse_error,
};

constexpr std::string_view name(errc code) noexcept
{
    switch (code) {
    case errc::height_jump: return "HeightJump";
    case errc::unsupported: return "Unsupported";
    case errc::forbidden_pattern: return "ForbiddenPattern";
    case errc::unknown_label: return "UnknownLabel";
    case errc::not_a_leaf: return "NotALeaf";
    case errc::not_correlated: return "NotCorrelated";
    case errc::label_clash: return "LabelClash";
    case errc::malformed_word: return "MalformedWord";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_in_zinbiel_image: return "NotInZinbielImage";
    case errc::not_in_image: return "NotInImage";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::not_a_forest: return "NotAForest";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(shrubs::name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return shrubs::name(code_); }

private:
    errc code_;
};

} // namespace shrubs
