#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace fintopo {

// Arbitrary-precision rational, kept canonical by the backend.  Endpoint
// membership decisions (is 1/4 attained?) must be exact, so no floating
// point appears anywhere in the quotient machinery.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a plain integer, with optional leading '-'.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" for integers.
std::string format_rational(const Rational& r);

}  // namespace fintopo
