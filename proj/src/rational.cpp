#include "walg/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace walg {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) {
  Integer n = numerator_of(value);
  Integer d = denominator_of(value);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::string to_string(const Integer& value) { return value.str(); }

Integer floor_of(const Rational& r) {
  Integer n = numerator_of(r);
  Integer d = denominator_of(r);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil_of(const Rational& r) { return -floor_of(Rational(-r)); }

long long to_int64(const Integer& z) {
  if (z > std::numeric_limits<long long>::max() ||
      z < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + z.str());
  return z.convert_to<long long>();
}

long long to_int64(const Rational& r) {
  if (!is_integer(r))
    throw std::overflow_error("not an integer: " + to_string(r));
  return to_int64(numerator_of(r));
}

Integer gcd_of(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer lcm_of(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Integer isqrt_floor(const Integer& value) {
  if (value < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(value);
}

std::size_t hash_value(const Rational& r) {
  const __mpq_struct* q = r.backend().data();
  const __mpz_struct* num = mpq_numref(q);
  const __mpz_struct* den = mpq_denref(q);
  std::size_t h = static_cast<std::size_t>(num->_mp_size) * 1000003u;
  if (num->_mp_size != 0) h ^= static_cast<std::size_t>(mpz_getlimbn(num, 0));
  h = h * 31u + static_cast<std::size_t>(mpz_getlimbn(den, 0));
  return h;
}

std::string to_string(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v(i));
  }
  return out;
}

Vector parse_vector(std::string_view text) {
  std::vector<Rational> entries;
  std::string_view s = trim(text);
  if (s.empty()) return Vector(0);
  while (true) {
    auto comma = s.find(',');
    entries.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return make_vector(entries);
}

Vector make_vector(const std::vector<Rational>& entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = entries[i];
  return v;
}

}  // namespace walg
