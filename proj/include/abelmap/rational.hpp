#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace abelmap {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Parses "n", "-n" or "n/d" (d != 0). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

inline bool is_integer(const Rational& value) { return value.denominator() == 1; }

}  // namespace abelmap
