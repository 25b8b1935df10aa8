#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace grm {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "n" and optional leading sign. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

// "n" for integers, "p/q" otherwise (q > 0, reduced).
std::string format_rational(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace grm
