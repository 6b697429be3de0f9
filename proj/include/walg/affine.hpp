#pragma once

// Affine weights lambda = finite + level*Lambda_0 + delta_coeff*delta, real affine
// roots alpha + n delta, and the extended affine Weyl group W-bar x| P^vee.
//
// Form conventions: (Lambda_0, delta) = 1, (delta, delta) = (Lambda_0, Lambda_0) = 0.
// An ExtendedWeylElement (v, mu) acts as t_mu o v, so
//   (v1, mu1) * (v2, mu2) = (v1 v2, mu1 + v1 mu2).

#include <cstddef>
#include <string>

#include "walg/rational.hpp"
#include "walg/root_system.hpp"

namespace walg {

struct AffineWeight {
  Vector finite;
  Rational level;
  Rational delta_coeff;

  bool operator==(const AffineWeight& other) const {
    return finite == other.finite && level == other.level && delta_coeff == other.delta_coeff;
  }
};

/// The weight lambda_bar + (kappa - h^vee) Lambda_0, i.e. the weight of level
/// kappa - h^vee whose shift by rho has level kappa.
AffineWeight weight_at_kappa(const RootSystem& rs, const Vector& finite, const Rational& kappa);

/// rho = rho_bar + h^vee Lambda_0.
AffineWeight affine_rho(const RootSystem& rs);

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator-(const AffineWeight& a, const AffineWeight& b);

/// Real affine root alpha_bar + degree * delta.
struct AffineRealRoot {
  Vector finite;
  long long degree = 0;

  bool operator==(const AffineRealRoot& other) const {
    return degree == other.degree && finite == other.finite;
  }
};

bool is_positive(const RootSystem& rs, const AffineRealRoot& alpha);
AffineRealRoot negate(const AffineRealRoot& alpha);
std::string to_string(const AffineRealRoot& alpha);

/// <lambda, alpha^vee> = <lambda_bar, alpha_bar^vee> + n (2/(alpha_bar,alpha_bar)) level.
Rational affine_pairing(const RootSystem& rs, const AffineWeight& lam, const AffineRealRoot& alpha);

/// Coroot pairing between two real roots (an integer for roots of one system).
Rational root_pairing(const RootSystem& rs, const AffineRealRoot& a, const AffineRealRoot& b);

Rational norm_sq_finite(const RootSystem& rs, const AffineWeight& lam);
Rational norm_sq_affine(const RootSystem& rs, const AffineWeight& lam);

class ExtendedWeylElement {
 public:
  /// Identity of a rank-n group.
  explicit ExtendedWeylElement(int rank = 0);
  /// Throws std::invalid_argument when translation is not in the coweight lattice.
  ExtendedWeylElement(const RootSystem& rs, Matrix finite, Vector translation);

  static ExtendedWeylElement identity(int rank) { return ExtendedWeylElement(rank); }
  static ExtendedWeylElement translation_by(const RootSystem& rs, const Vector& mu);
  static ExtendedWeylElement finite_word(const RootSystem& rs, const std::vector<int>& word);
  static ExtendedWeylElement longest_finite(const RootSystem& rs);
  /// s_alpha for a real affine root: (s_alpha_bar, -n alpha_bar^vee).
  static ExtendedWeylElement reflection(const RootSystem& rs, const AffineRealRoot& alpha);

  const Matrix& finite() const { return finite_; }
  const Vector& translation() const { return translation_; }
  int rank() const { return static_cast<int>(translation_.size()); }

  bool is_identity() const;
  bool operator==(const ExtendedWeylElement& other) const {
    return translation_ == other.translation_ && finite_ == other.finite_;
  }
  std::size_t hash() const { return hash_range(finite_) * 1000003u ^ hash_range(translation_); }

 private:
  friend ExtendedWeylElement group_op(const ExtendedWeylElement&, const ExtendedWeylElement&);
  friend ExtendedWeylElement invert(const RootSystem&, const ExtendedWeylElement&);
  struct Unchecked {};
  ExtendedWeylElement(Unchecked, Matrix finite, Vector translation)
      : finite_(std::move(finite)), translation_(std::move(translation)) {}

  Matrix finite_;
  Vector translation_;
};

ExtendedWeylElement group_op(const ExtendedWeylElement& a, const ExtendedWeylElement& b);
ExtendedWeylElement invert(const RootSystem& rs, const ExtendedWeylElement& a);

inline ExtendedWeylElement operator*(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
  return group_op(a, b);
}

/// t_mu(lambda) = lambda + k mu - ((lambda, mu) + |mu|^2 k / 2) delta, after the finite part.
AffineWeight weyl_apply(const RootSystem& rs, const ExtendedWeylElement& w, const AffineWeight& lam);

/// w o lambda = w(lambda + rho) - rho.
AffineWeight dot_apply(const RootSystem& rs, const ExtendedWeylElement& w, const AffineWeight& lam);

/// w(alpha_bar + n delta) = v alpha_bar + (n - (v alpha_bar, mu)) delta.
AffineRealRoot root_action(const RootSystem& rs, const ExtendedWeylElement& w,
                           const AffineRealRoot& alpha);

/// Highest weight of the "-" reduction of a Verma module: the finite part.
Vector minus_reduction_hw(const AffineWeight& lam);
/// Highest weight of the "+" reduction: the finite part of t_{-rho^vee} o lambda.
Vector plus_reduction_hw(const RootSystem& rs, const AffineWeight& lam);
/// lambda_bar -> -w0(lambda_bar).
Vector dual_hw_map(const RootSystem& rs, const Vector& lam_bar);

}  // namespace walg

template <>
struct std::hash<walg::ExtendedWeylElement> {
  std::size_t operator()(const walg::ExtendedWeylElement& w) const { return w.hash(); }
};
