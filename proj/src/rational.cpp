#include "stg/rational.hpp"

#include <cctype>

namespace stg {

std::string to_string(const Rational& r) {
  return r.str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// cpp_int's string constructor takes no '+'.
BigInt big(const std::string& s) {
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    BigInt n = big(num), d = big(den);
    if (d == 0) return std::nullopt;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || !is_integer_token(whole)) return std::nullopt;
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    bool negative = whole[0] == '-';
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt value = big(whole) * scale;
    BigInt frac_part(frac);
    value += negative ? -frac_part : frac_part;
    return Rational(value, scale);
  }
  if (!is_integer_token(text)) return std::nullopt;
  return Rational(big(text));
}

}  // namespace stg
