#pragma once

#include <string>

#include <catch_amalgamated.hpp>

#include "shrubs/io.hpp"
#include "shrubs/shrubs.hpp"

namespace test_support {

inline shrubs::Shrub shrub(const std::string& json) { return shrubs::shrub_from_json(shrubs::parse_json(json)); }

inline shrubs::TotalOrder order(std::initializer_list<int> xs)
{
    shrubs::TotalOrder o;
    for (int x : xs)
        o.emplace_back(x);
    return o;
}

template <class Fn>
shrubs::errc code_of(Fn&& fn)
{
    try {
        fn();
    } catch (const shrubs::error& e) {
        return e.code();
    }
    FAIL("no shrubs::error thrown");
    return shrubs::errc::unsupported;
}

} // namespace test_support
