#include "gelfand/rational.hpp"

#include <stdexcept>

namespace gelfand {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::size_t slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (text[i] < '0' || text[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits(start, text.size()))
      throw std::invalid_argument("malformed rational: " + text);
  } else if (!digits(start, slash) || !digits(slash + 1, text.size())) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vector primitive(const Vector& v) {
  Integer den = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    ints[i] = v[i].get_num() * (den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  int sign = 1;
  for (const auto& x : v)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r[i] = Rational(ints[i] / g * sign);
  return r;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace gelfand
