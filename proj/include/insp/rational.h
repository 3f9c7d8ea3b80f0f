#ifndef INSP_RATIONAL_H_
#define INSP_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace insp {

// Exact lengths and costs. All comparisons in the library are exact.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2", "0.25", "7/3". Throws InspError(kParseError) otherwise.
Rational ParseRational(std::string_view text);

// Integers print as "3", terminating decimals as "0.25", anything else as
// "7/3". ParseRational(FormatRational(x)) == x for every x.
std::string FormatRational(const Rational& value);

// Nearest double, for human-oriented output only.
double ToDouble(const Rational& value);

}  // namespace insp

#endif  // INSP_RATIONAL_H_
