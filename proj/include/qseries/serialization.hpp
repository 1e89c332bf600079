#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/errors.hpp"
#include "qseries/integer.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

// Fixture line: `minExp order exact c0 c1 ...`.  For an exact series the
// order field holds its degree (-1 for the zero polynomial, whose minExp is 0).
inline std::string to_fixture(const LaurentSeries& s) {
  std::ostringstream out;
  const int n = static_cast<int>(s.size());
  const int order = s.is_exact() ? s.min_exponent() + n - 1 : s.order();
  out << s.min_exponent() << ' ' << order << ' ' << (s.is_exact() ? 1 : 0);
  for (const Integer& c : s.coefficients()) out << ' ' << c;
  return out.str();
}

inline LaurentSeries from_fixture(std::string_view line) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 3) throw ParseError("series fixture needs minExp, order and exact fields");
  auto small = [](const std::string& tok, const char* what) {
    const Integer v = parse_integer(tok);
    if (v > INT_MAX || v < INT_MIN) throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(v);
  };
  const int min_exp = small(tokens[0], "minExp");
  const int order = small(tokens[1], "order");
  if (tokens[2] != "0" && tokens[2] != "1") throw ParseError("exact flag must be 0 or 1");
  const bool exact = tokens[2] == "1";
  std::vector<Integer> coeffs;
  coeffs.reserve(tokens.size() - 3);
  for (std::size_t i = 3; i < tokens.size(); ++i) coeffs.push_back(parse_integer(tokens[i]));

  if (exact) {
    if (coeffs.empty()) {
      if (min_exp != 0 || order != -1) throw ParseError("zero polynomial must read `0 -1 1`");
      return LaurentSeries::zero();
    }
    if (coeffs.front() == 0 || coeffs.back() == 0)
      throw ParseError("exact series must not carry leading or trailing zeros");
    if (order != min_exp + static_cast<int>(coeffs.size()) - 1)
      throw ParseError("exact series order field must equal its degree");
    return LaurentSeries::polynomial(min_exp, std::move(coeffs));
  }
  if (!coeffs.empty() && static_cast<long>(min_exp) + static_cast<long>(coeffs.size()) - 1 > order)
    throw ParseError("coefficients beyond the truncation order");
  return LaurentSeries::truncated_series(min_exp, std::move(coeffs), order);
}

}  // namespace qseries
