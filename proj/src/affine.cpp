#include "walg/affine.hpp"

#include <stdexcept>

namespace walg {

AffineWeight weight_at_kappa(const RootSystem& rs, const Vector& finite, const Rational& kappa) {
  if (finite.size() != rs.rank())
    throw std::invalid_argument("weight has " + std::to_string(finite.size()) +
                                " coordinates, rank is " + std::to_string(rs.rank()));
  return {finite, kappa - rs.dual_coxeter(), Rational(0)};
}

AffineWeight affine_rho(const RootSystem& rs) {
  return {rs.rho(), Rational(rs.dual_coxeter()), Rational(0)};
}

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
  return {a.finite + b.finite, a.level + b.level, a.delta_coeff + b.delta_coeff};
}

AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
  return {a.finite - b.finite, a.level - b.level, a.delta_coeff - b.delta_coeff};
}

bool is_positive(const RootSystem& rs, const AffineRealRoot& alpha) {
  return alpha.degree > 0 || (alpha.degree == 0 && rs.is_positive(alpha.finite));
}

AffineRealRoot negate(const AffineRealRoot& alpha) { return {-alpha.finite, -alpha.degree}; }

std::string to_string(const AffineRealRoot& alpha) {
  return "(" + to_string(alpha.finite) + ")+" + std::to_string(alpha.degree) + "d";
}

Rational affine_pairing(const RootSystem& rs, const AffineWeight& lam, const AffineRealRoot& alpha) {
  const Rational len = rs.norm_sq(alpha.finite);
  return Rational(2) * rs.form(lam.finite, alpha.finite) / len +
         Rational(alpha.degree) * Rational(2) / len * lam.level;
}

Rational root_pairing(const RootSystem& rs, const AffineRealRoot& a, const AffineRealRoot& b) {
  return pairing_finite(rs, a.finite, b.finite);
}

Rational norm_sq_finite(const RootSystem& rs, const AffineWeight& lam) {
  return rs.norm_sq(lam.finite);
}

Rational norm_sq_affine(const RootSystem& rs, const AffineWeight& lam) {
  return rs.norm_sq(lam.finite) + 2 * lam.level * lam.delta_coeff;
}

ExtendedWeylElement::ExtendedWeylElement(int rank)
    : finite_(Matrix::Identity(rank, rank)), translation_(Vector::Zero(rank)) {}

ExtendedWeylElement::ExtendedWeylElement(const RootSystem& rs, Matrix finite, Vector translation)
    : finite_(std::move(finite)), translation_(std::move(translation)) {
  if (finite_.rows() != rs.rank() || finite_.cols() != rs.rank() ||
      translation_.size() != rs.rank())
    throw std::invalid_argument("extended Weyl element has the wrong rank");
  if (!rs.is_coweight(translation_))
    throw std::invalid_argument("translation (" + to_string(translation_) +
                                ") is not in the coweight lattice");
}

ExtendedWeylElement ExtendedWeylElement::translation_by(const RootSystem& rs, const Vector& mu) {
  return ExtendedWeylElement(rs, Matrix::Identity(rs.rank(), rs.rank()), mu);
}

ExtendedWeylElement ExtendedWeylElement::finite_word(const RootSystem& rs,
                                                     const std::vector<int>& word) {
  return ExtendedWeylElement(rs, rs.word_matrix(word), Vector::Zero(rs.rank()));
}

ExtendedWeylElement ExtendedWeylElement::longest_finite(const RootSystem& rs) {
  return ExtendedWeylElement(rs, rs.w0(), Vector::Zero(rs.rank()));
}

ExtendedWeylElement ExtendedWeylElement::reflection(const RootSystem& rs,
                                                    const AffineRealRoot& alpha) {
  return ExtendedWeylElement(rs, rs.reflection(alpha.finite),
                             rs.coroot(alpha.finite) * Rational(-alpha.degree));
}

bool ExtendedWeylElement::is_identity() const {
  return translation_.isZero() && finite_ == Matrix::Identity(rank(), rank());
}

ExtendedWeylElement group_op(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
  return ExtendedWeylElement(ExtendedWeylElement::Unchecked{}, a.finite_ * b.finite_,
                             a.translation_ + a.finite_ * b.translation_);
}

ExtendedWeylElement invert(const RootSystem& rs, const ExtendedWeylElement& a) {
  // Weyl matrices are isometries of the form: v^{-1} = G^{-1} v^T G.
  Matrix inv = rs.gram().fullPivLu().solve(Matrix(a.finite_.transpose() * rs.gram()));
  Vector t = -(inv * a.translation_);
  return ExtendedWeylElement(ExtendedWeylElement::Unchecked{}, std::move(inv), std::move(t));
}

AffineWeight weyl_apply(const RootSystem& rs, const ExtendedWeylElement& w, const AffineWeight& lam) {
  const Vector& mu = w.translation();
  Vector moved = w.finite() * lam.finite;
  AffineWeight out;
  out.level = lam.level;
  out.delta_coeff =
      lam.delta_coeff - (rs.form(moved, mu) + rs.norm_sq(mu) * lam.level / 2);
  out.finite = moved + mu * lam.level;
  return out;
}

AffineWeight dot_apply(const RootSystem& rs, const ExtendedWeylElement& w, const AffineWeight& lam) {
  const AffineWeight rho = affine_rho(rs);
  return weyl_apply(rs, w, lam + rho) - rho;
}

AffineRealRoot root_action(const RootSystem& rs, const ExtendedWeylElement& w,
                           const AffineRealRoot& alpha) {
  Vector moved = w.finite() * alpha.finite;
  Rational shift = rs.form(moved, w.translation());
  return {moved, alpha.degree - to_int64(shift)};
}

Vector minus_reduction_hw(const AffineWeight& lam) { return lam.finite; }

Vector plus_reduction_hw(const RootSystem& rs, const AffineWeight& lam) {
  auto shift = ExtendedWeylElement::translation_by(rs, -rs.rho_check());
  return dot_apply(rs, shift, lam).finite;
}

Vector dual_hw_map(const RootSystem& rs, const Vector& lam_bar) { return -(rs.w0() * lam_bar); }

}  // namespace walg
