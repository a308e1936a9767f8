#include "maxcms/rational.hpp"

#include <cctype>

#include "maxcms/errors.hpp"

namespace maxcms {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("malformed number: '" + std::string(whole) + "'");
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    result = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw ParseError("malformed number: '" + std::string(text) + "'");
    mpz_class whole = int_part.empty() ? mpz_class(0) : parse_integer(int_part, text);
    mpz_class frac = frac_part.empty() ? mpz_class(0) : parse_integer(frac_part, text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_integer(s, text));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
  mpz_class scale = 1;
  scale <<= bits;
  mpz_class scaled = q.get_num() * scale;
  mpz_class floored;
  mpz_fdiv_q(floored.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational r(floored, scale);
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) {
  return q.get_d();
}

Rational sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

}  // namespace maxcms
