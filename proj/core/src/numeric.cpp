#include "tropical/numeric.hpp"

#include "tropical/error.hpp"

#include <cctype>

namespace tropical {

std::string to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::parse_error: return "parse_error";
    case ErrorCategory::validation_error: return "validation_error";
    case ErrorCategory::dimension_mismatch: return "dimension_mismatch";
    case ErrorCategory::precondition_failed: return "precondition_failed";
    case ErrorCategory::internal_error: return "internal_error";
  }
  return "internal_error";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("malformed integer '" + std::string(s) + "'");
  std::string owned(s[0] == '+' ? s.substr(1) : s);
  return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector primitive_or_zero(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return v;
  }
  if (g == 0) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(const IntVector& v) {
  if (is_zero(v)) throw PreconditionError("primitive() of the zero vector");
  return primitive_or_zero(v);
}

IntVector integer_direction(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive_or_zero(out);
}

RatVector to_rational(const IntVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

IntVector negated(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RatVector negated(const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVector scaled(const RatVector& a, const Rational& s) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rational(v[i]);
  }
  return s + ")";
}

}  // namespace tropical
