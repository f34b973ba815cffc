#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "uxnfa/error.hpp"

namespace uxnfa {

/// Arbitrary-precision non-negative integer (input lengths, Landau values).
using natural = boost::multiprecision::cpp_int;

inline std::string to_string(const natural& n) { return n.str(); }

/// Parses a decimal natural, optionally followed by `e<k>` meaning "times 10^k"
/// (so "1e18" and "25e3" are accepted).
inline natural parse_natural(std::string_view text) {
  auto fail = [&] {
    return error(errc::parse_error, "not a natural number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  const auto e = text.find_first_of("eE");
  const std::string_view mantissa = text.substr(0, e);
  if (mantissa.empty()) throw fail();
  natural value = 0;
  for (char c : mantissa) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
    value = value * 10 + (c - '0');
  }
  if (e != std::string_view::npos) {
    const std::string_view exponent = text.substr(e + 1);
    if (exponent.empty() || exponent.size() > 6) throw fail();
    unsigned k = 0;
    for (char c : exponent) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      k = k * 10 + static_cast<unsigned>(c - '0');
    }
    value *= boost::multiprecision::pow(natural(10), k);
  }
  return value;
}

}  // namespace uxnfa
