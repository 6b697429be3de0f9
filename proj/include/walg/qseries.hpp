#pragma once

// Truncated q-series  sum_k a_k q^{offset + k*step}  with exact rational
// coefficients. A series with N+1 stored coefficients is exact through the
// exponent offset + N*step; arithmetic keeps only what both operands determine.

#include <string>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

class QSeries {
 public:
  QSeries() = default;
  QSeries(Rational offset, Rational step, std::vector<Rational> coefficients);

  /// 1 + a_1 q + ... from integer coefficients, offset 0, step 1.
  static QSeries from_integers(const std::vector<long long>& coefficients);

  const Rational& offset() const { return offset_; }
  const Rational& step() const { return step_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool empty() const { return coefficients_.empty(); }
  /// Highest exponent known exactly (only when !empty()).
  Rational top() const;
  /// Coefficient of q^exponent; 0 below the offset or off the lattice.
  /// Throws std::out_of_range above top().
  Rational coefficient_at(const Rational& exponent) const;

  /// Multiplication by c q^shift.
  QSeries scaled(const Rational& c, const Rational& shift = Rational(0)) const;
  /// Same series on the finer lattice of step new_step (step/new_step must be integral).
  QSeries refined(const Rational& new_step) const;
  /// Keeps exponents <= max_exponent.
  QSeries truncated(const Rational& max_exponent) const;

  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);

  bool operator==(const QSeries& other) const {
    return offset_ == other.offset_ && step_ == other.step_ && coefficients_ == other.coefficients_;
  }

  /// "q^{1/48}(1 + q + q^2 + 2q^3 + O(q^4))"; the empty series renders "0".
  std::string to_string() const;

 private:
  Rational offset_{0};
  Rational step_{1};
  std::vector<Rational> coefficients_;
};

/// Common lattice step of two steps (both must be positive).
Rational common_step(const Rational& a, const Rational& b);

}  // namespace walg
