#include "affcubic/algebra/rational.hpp"

#include <cctype>

#include "affcubic/error.hpp"

namespace affcubic {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty number");
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    Integer num(body.substr(0, slash), 10), den(body.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in " + s);
    value = Rational(num, den);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty()) throw Error(ErrorKind::Parse, "bad decimal " + s);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::Parse, "bad decimal " + s);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
    value = Rational(Integer(digits, 10), den);
    value.canonicalize();
  } else {
    for (char c : body)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::Parse, "bad integer " + s);
    value = Rational(Integer(body, 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace affcubic
