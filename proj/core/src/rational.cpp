#include "macic/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace macic {

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

namespace {

Rational parse_decimal(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  mpz_class mantissa = 0;
  long exponent = 0;
  bool digits = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --exponent;
      digits = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!digits) throw std::invalid_argument("not a number: '" + s + "'");
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + s + "'");
    }
    if (used == 0) throw std::invalid_argument("bad exponent in '" + s + "'");
    exponent += e;
    pos += used;
  }
  if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
  if (exponent > 4000 || exponent < -4000) throw std::invalid_argument("exponent out of range in '" + s + "'");

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  std::string num(text.substr(0, slash));
  std::string den(text.substr(slash + 1));
  mpz_class n, d;
  if (num.empty() || den.empty() || n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0) {
    throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
  }
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational dyadic_round(double value, int bits) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  double scaled = std::nearbyint(std::ldexp(value, bits));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), scaled);
  mpz_class den = 1;
  den <<= bits;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

void normalize_max_abs(std::span<Rational> values, Rational* extra) {
  Rational scale = 0;
  for (const auto& v : values) {
    Rational a = abs(v);
    if (a > scale) scale = a;
  }
  if (scale == 0) return;
  for (auto& v : values) v /= scale;
  if (extra != nullptr) *extra /= scale;
}

std::vector<Rational> to_rationals(std::span<const double> values, int bits) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(dyadic_round(v, bits));
  return out;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace macic
