#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gelfand {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense vector of exact rationals.
using Vector = std::vector<Rational>;

/// Canonical text form: "p" or "p/q" with q > 0.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

Rational make_rational(long num, long den = 1);

bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

Rational dot(const Vector& a, const Vector& b);

/// Scales v to coprime integer entries whose first nonzero entry is positive.
Vector primitive(const Vector& v);

Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace gelfand
