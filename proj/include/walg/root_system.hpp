#pragma once

// Finite simple root systems (types A-G) with the normalized invariant form,
// and the finite Weyl group acting on weights.
//
// Coordinates: every weight and root is a column vector in the basis of
// fundamental weights, so <lambda, alpha_i^vee> is the i-th coordinate.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

struct LieType {
  char family = 'A';
  int rank = 1;

  /// Parses "A1", "E6", "g2", ... Throws std::invalid_argument for an
  /// unknown family or a rank the family does not admit.
  static LieType parse(std::string_view text);
  std::string name() const;
  bool operator==(const LieType&) const = default;
};

/// Throws std::invalid_argument unless (family, rank) names a simple Lie algebra.
void validate(const LieType& type);

class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// A(i,j) = <alpha_i, alpha_j^vee>.
  const Eigen::MatrixXi& cartan_matrix() const { return cartan_; }
  /// Gram matrix of (.,.) on the fundamental weights; long roots have norm 2.
  const Matrix& gram() const { return gram_; }

  /// Simple root alpha_i (1-based).
  const Vector& simple_root(int i) const { return simple_roots_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Vector>& simple_roots() const { return simple_roots_; }

  /// Positive roots sorted by height, then by simple-root coefficients.
  const std::vector<Vector>& positive_roots() const { return positive_; }
  const std::vector<Eigen::VectorXi>& positive_root_coefficients() const { return coefficients_; }
  /// All roots: the positive roots followed by their negatives (same order).
  const std::vector<Vector>& roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  const Vector& rho() const { return rho_; }
  const Vector& rho_check() const { return rho_check_; }
  const Vector& highest_root() const { return highest_; }
  int dual_coxeter() const { return dual_coxeter_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int dimension() const { return rank() + 2 * num_positive_roots(); }

  /// Longest element of the finite Weyl group as a matrix, and a reduced word
  /// for it (applied right to left, as in finite_weyl_apply).
  const Matrix& w0() const { return w0_; }
  const std::vector<int>& w0_word() const { return w0_word_; }

  template <typename DA, typename DB>
  Rational form(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) const {
    return a.dot(gram_ * b);
  }
  template <typename D>
  Rational norm_sq(const Eigen::MatrixBase<D>& a) const { return form(a, a); }

  /// Index into roots(), or nullopt when v is not a root.
  std::optional<int> root_index(const Vector& v) const;
  bool is_root(const Vector& v) const { return root_index(v).has_value(); }
  /// Sign test for a root vector: positive iff its height is positive.
  bool is_positive(const Vector& root) const { return form(root, rho_check_) > 0; }

  /// Reflection s_i on weight coordinates (1-based index).
  const Matrix& simple_reflection(int i) const;
  /// Reflection along an arbitrary (nonzero) vector of the weight space.
  Matrix reflection(const Vector& root) const;
  /// Matrix of s_{i_1} ... s_{i_k} (1-based indices).
  Matrix word_matrix(const std::vector<int>& word) const;

  /// Fundamental coweight: the vector with <alpha_j, v> = delta_ij.
  Vector fundamental_coweight(int i) const;
  /// Coweight lattice membership: <alpha_i, v> integral for every simple root.
  bool is_coweight(const Vector& v) const;
  /// alpha^vee = 2 alpha / (alpha, alpha), as a vector in weight coordinates.
  Vector coroot(const Vector& root) const { return root * (Rational(2) / norm_sq(root)); }

 private:
  LieType type_;
  Eigen::MatrixXi cartan_;
  Matrix gram_;
  std::vector<Vector> simple_roots_;
  std::vector<Vector> positive_;
  std::vector<Eigen::VectorXi> coefficients_;
  std::vector<Vector> roots_;
  std::unordered_map<std::string, int> index_;
  std::vector<Matrix> reflections_;
  Vector rho_, rho_check_, highest_;
  int dual_coxeter_ = 0;
  std::vector<int> exponents_;
  Matrix w0_;
  std::vector<int> w0_word_;
};

RootSystem build_root_system(const LieType& type);

/// <root, rho^vee>. Throws std::invalid_argument when the vector is not a root.
int height(const RootSystem& rs, const Vector& root);

/// 2 (weight, root) / (root, root).
template <typename DW, typename DR>
Rational pairing_finite(const RootSystem& rs, const Eigen::MatrixBase<DW>& weight,
                        const Eigen::MatrixBase<DR>& root) {
  return Rational(2) * rs.form(weight, root) / rs.norm_sq(root);
}

/// Applies s_{i_1} o ... o s_{i_k} to the weight (rightmost reflection first).
/// Throws std::out_of_range for an index outside 1..rank.
Vector finite_weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Vector& weight);

/// The dominant element of the W-orbit of v, reached by reflecting at simple
/// roots with negative pairing.
Vector dominant_representative(const RootSystem& rs, Vector v);

/// True iff mu + rho lies in W(lam + rho).
bool same_infinitesimal_character(const RootSystem& rs, const Vector& lam, const Vector& mu);

/// The finite Weyl group as a Coxeter system, elements stored as matrices.
class FiniteCoxeterSystem {
 public:
  using element_type = Matrix;

  explicit FiniteCoxeterSystem(const RootSystem& rs) : rs_(&rs) {}

  int rank() const { return rs_->rank(); }
  Matrix identity() const { return Matrix::Identity(rank(), rank()); }
  int length(const Matrix& w) const;
  bool is_right_descent(const Matrix& w, int s) const;
  Matrix right_multiply(const Matrix& w, int s) const { return w * rs_->simple_reflection(s); }
  Matrix left_multiply(int s, const Matrix& w) const { return rs_->simple_reflection(s) * w; }
  std::size_t hash(const Matrix& w) const { return hash_range(w); }

 private:
  const RootSystem* rs_;
};

}  // namespace walg
