#pragma once

// Exact scalar types and the dense Eigen aliases used throughout walg.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

namespace walg {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Parses "p/q", "-p/q" or "n". Throws std::invalid_argument on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p/q" in lowest terms, or "n" when integral.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

/// Exact conversion to long long; throws std::overflow_error when the value
/// is not an integer representable in 64 bits.
long long to_int64(const Rational& r);
long long to_int64(const Integer& z);

Integer gcd_of(const Integer& a, const Integer& b);
Integer lcm_of(const Integer& a, const Integer& b);

/// Largest integer r with r*r <= value (value >= 0).
Integer isqrt_floor(const Integer& value);

std::size_t hash_value(const Rational& r);

template <typename Derived>
std::size_t hash_range(const Eigen::DenseBase<Derived>& m) {
  std::size_t seed = static_cast<std::size_t>(m.rows() * 31 + m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      seed ^= hash_value(m(i, j)) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
  return seed;
}

/// Renders a vector as comma-separated exact rationals.
std::string to_string(const Vector& v);

/// Parses comma-separated rationals; an empty string yields an empty vector.
Vector parse_vector(std::string_view text);

Vector make_vector(const std::vector<Rational>& entries);

}  // namespace walg
