#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" exactly; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// Divides by the gcd of the entries, preserving sign. Throws on the zero vector.
IntVector primitive(const IntVector& v);
/// Same as primitive() but maps the zero vector to itself.
IntVector primitive_or_zero(const IntVector& v);

/// Smallest positive integer multiple of `v` (scaled by the lcm of denominators,
/// then made primitive). Zero maps to zero.
IntVector integer_direction(const RatVector& v);

RatVector to_rational(const IntVector& v);
IntVector negated(const IntVector& v);
RatVector negated(const RatVector& v);

RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scaled(const RatVector& a, const Rational& s);
IntVector add(const IntVector& a, const IntVector& b);

Integer factorial(unsigned n);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace tropical
