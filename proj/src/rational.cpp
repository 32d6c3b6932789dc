#include "moddev/rational.hpp"

#include <cctype>

#include "moddev/errors.hpp"

namespace moddev {

namespace {

BigInt parse_digits(const std::string& s, const std::string& whole) {
  if (s.empty()) throw InputError("malformed number: '" + whole + "'");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw InputError("malformed number: '" + whole + "'");
  // a leading zero would make the string constructor read octal
  const auto first = s.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(s.substr(first));
}

BigInt pow10(long e) {
  BigInt out(1);
  for (long j = 0; j < e; ++j) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  Rational out;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_digits(s.substr(0, slash), text);
    const BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator: '" + text + "'");
    out = Rational(num) / Rational(den);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
      std::string exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
        exp_negative = exp_text[0] == '-';
        exp_text = exp_text.substr(1);
      }
      if (exp_text.empty() || exp_text.size() > 6) throw InputError("malformed number: '" + text + "'");
      exponent = parse_digits(exp_text, text).convert_to<long>();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits = s;
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      digits = s.substr(0, dot) + s.substr(dot + 1);
      exponent -= static_cast<long>(s.size() - dot - 1);
    }
    out = Rational(parse_digits(digits, text));
    if (exponent >= 0) {
      out *= Rational(pow10(exponent));
    } else {
      out /= Rational(pow10(-exponent));
    }
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace moddev
