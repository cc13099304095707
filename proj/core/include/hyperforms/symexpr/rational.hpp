#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hyperforms::symexpr {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rational_str(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace hyperforms::symexpr
