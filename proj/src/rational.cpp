#include "ninf/rational.hpp"

#include <cctype>

#include "ninf/error.hpp"

namespace ninf {

std::string to_string(const Rational &q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string &text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::size_t begin, std::size_t end) {
    std::size_t i = begin;
    if (i < end && text[i] == '-')
      ++i;
    if (i == end)
      throw ParseError("malformed rational '" + text + "'", begin);
    for (std::size_t k = i; k < end; ++k)
      if (!std::isdigit(static_cast<unsigned char>(text[k])))
        throw ParseError("malformed rational '" + text + "'", k);
    return Integer(text.substr(begin, end - begin));
  };
  if (slash == std::string::npos)
    return Rational(parse_int(0, text.size()));
  const Integer num = parse_int(0, slash);
  const Integer den = parse_int(slash + 1, text.size());
  if (den == 0)
    throw ParseError("zero denominator in '" + text + "'", slash + 1);
  return Rational(num, den);
}

} // namespace ninf
