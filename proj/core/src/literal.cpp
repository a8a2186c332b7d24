#include "padicdyn/literal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace padicdyn {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

BigInt parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bare sign");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError("bad integer '" + s + "'");
    }
  }
  return BigInt(s);
}

// "d", "d*p", or "d*p^e"
void parse_digit_term(const std::string& term, const Prime& p, BigRat& acc) {
  std::size_t star = term.find("*p");
  if (star == std::string::npos) {
    if (term == "p") {
      acc += BigRat(p.value());
      return;
    }
    acc += BigRat(parse_int(term));
    return;
  }
  BigInt digit = parse_int(term.substr(0, star));
  if (digit < 0 || digit >= p.value()) throw ParseError("digit out of range in '" + term + "'");
  std::string rest = term.substr(star + 2);
  long e = 1;
  if (!rest.empty()) {
    if (rest[0] != '^') throw ParseError("expected '^' in '" + term + "'");
    e = static_cast<long>(parse_int(rest.substr(1)));
    if (e < 0) throw ParseError("negative exponent in digit term");
  }
  acc += BigRat(digit * p.pow(static_cast<unsigned>(e)));
}

BigRat parse_digit_form(const std::string& s, const Prime& p) {
  BigRat acc(0);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t plus = s.find('+', start);
    std::string term = s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw ParseError("empty digit term");
    parse_digit_term(term, p, acc);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return acc;
}

// expr := ['-'] term (('+'|'-') term)*, term := int ['/' int]
BigRat parse_rational_expr(const std::string& s) {
  BigRat acc(0);
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    sign = (s[i] == '-') ? -1 : 1;
    ++i;
  }
  while (i <= s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    std::size_t slash = term.find('/');
    BigRat v;
    if (slash == std::string::npos) {
      v = BigRat(parse_int(term));
    } else {
      BigInt den = parse_int(term.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator");
      v = BigRat(parse_int(term.substr(0, slash)), den);
    }
    acc += sign * v;
    if (j >= s.size()) break;
    sign = (s[j] == '-') ? -1 : 1;
    i = j + 1;
  }
  return acc;
}

}  // namespace

PadicNumber parse_literal(const std::string& text, const Prime& p) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty literal");

  long scale = 0;
  if (s.rfind("p^", 0) == 0) {
    std::size_t star = s.find("*(");
    if (star == std::string::npos || s.back() != ')') {
      throw ParseError("malformed scaled literal '" + text + "'");
    }
    scale = static_cast<long>(parse_int(s.substr(2, star - 2)));
    s = s.substr(star + 2, s.size() - star - 3);
    if (s.empty()) throw ParseError("empty scaled body");
  }

  BigRat v = (s.find('p') != std::string::npos) ? parse_digit_form(s, p)
                                                : parse_rational_expr(s);
  if (scale != 0) {
    BigRat f(p.pow(static_cast<unsigned>(std::abs(scale))));
    if (scale > 0) {
      v *= f;
    } else {
      v /= f;
    }
  }
  return PadicNumber(p, v);
}

std::string to_rational_literal(const PadicNumber& x) {
  BigRat v = x.value();
  std::ostringstream os;
  os << boost::multiprecision::numerator(v);
  if (boost::multiprecision::denominator(v) != 1) {
    os << '/' << boost::multiprecision::denominator(v);
  }
  return os.str();
}

std::string to_digit_literal(const PadicNumber& x, unsigned N) {
  if (x.is_zero()) return "0";
  DigitExpansion d = x.digits(N);
  std::ostringstream os;
  if (d.valuation != 0) os << "p^" << d.valuation << "*(";
  bool first = true;
  for (unsigned i = 0; i < d.digits.size(); ++i) {
    if (d.digits[i] == 0) continue;
    if (!first) os << '+';
    os << d.digits[i];
    if (i == 1) os << "*p";
    if (i > 1) os << "*p^" << i;
    first = false;
  }
  if (first) os << '0';
  if (d.valuation != 0) os << ')';
  return os.str();
}

}  // namespace padicdyn
