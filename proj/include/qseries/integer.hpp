#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "qseries/errors.hpp"

namespace qseries {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& x) { return x.str(); }

inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw ParseError("malformed integer '" + std::string(text) + "'");
  }
  // cpp_int's string constructor would read a leading 0 as octal
  std::size_t k = i;
  while (k + 1 < text.size() && text[k] == '0') ++k;
  Integer value(std::string(text.substr(k)));
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace qseries
