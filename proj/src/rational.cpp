#include "equiarbor/rational.hpp"

#include <cctype>

#include "equiarbor/errors.hpp"

namespace equiarbor {

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const BigInt& value) { return value.str(); }

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_begin = pos;
  pos = scan_digits(text, pos);
  if (pos == num_begin) throw ParseError("expected digits in rational '" + std::string(text) + "'", pos);
  BigInt numerator(std::string(text.substr(num_begin, pos - num_begin)));
  BigInt denominator(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    pos = scan_digits(text, pos);
    if (pos == den_begin) {
      throw ParseError("expected positive denominator in rational '" + std::string(text) + "'", pos);
    }
    denominator = BigInt(std::string(text.substr(den_begin, pos - den_begin)));
    if (denominator == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", den_begin);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational '" + std::string(text) + "'", pos);
  Rational r(numerator, denominator);
  return negative ? Rational(-r) : r;
}

}  // namespace equiarbor
