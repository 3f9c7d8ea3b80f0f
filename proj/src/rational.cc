#include "insp/rational.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "insp/error.h"

namespace insp {
namespace {

std::int64_t ParseInt(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  if (digits.empty()) {
    throw InspError(ErrorCode::kParseError,
                    "malformed number '" + std::string(whole) + "'");
  }
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InspError(ErrorCode::kParseError,
                    "malformed number '" + std::string(whole) + "'");
  }
  return value;
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      throw InspError(ErrorCode::kParseError,
                      "malformed fraction '" + std::string(text) + "'");
    }
    const std::int64_t d = ParseInt(den, text);
    if (d == 0) {
      throw InspError(ErrorCode::kParseError,
                      "zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(ParseInt(num, text), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto int_part = body.substr(0, dot);
    const auto frac_part = body.substr(dot + 1);
    if ((!int_part.empty() && !AllDigits(int_part)) || !AllDigits(frac_part) ||
        frac_part.size() > 18) {
      throw InspError(ErrorCode::kParseError,
                      "malformed decimal '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t whole = int_part.empty() ? 0 : ParseInt(int_part, text);
    result = Rational(whole) + Rational(ParseInt(frac_part, text), scale);
  } else {
    if (!AllDigits(body)) {
      throw InspError(ErrorCode::kParseError,
                      "malformed number '" + std::string(text) + "'");
    }
    result = Rational(ParseInt(body, text));
  }
  return negative ? -result : result;
}

std::string FormatRational(const Rational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();
  if (den == 1) return std::to_string(num);

  std::int64_t rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1 || std::max(twos, fives) > 18) {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t abs_num = num < 0 ? -num : num;
  const std::int64_t scaled = abs_num * (scale / den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  return (num < 0 ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
}

double ToDouble(const Rational& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

}  // namespace insp
