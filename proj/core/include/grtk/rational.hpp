#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grtk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r)
{
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

}  // namespace grtk
