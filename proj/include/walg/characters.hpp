#pragma once

// Central charge, conformal weights and normalized characters of W-algebra
// modules: eta powers, Verma characters, the vacuum graded dimension and the
// two Kazhdan-Lusztig type formulas for irreducible characters.
//
// The Lambda_0 coefficient of every affine weight is kappa - h^vee; all q-series
// are normalized so that series.offset = Delta - c/24.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "walg/affine.hpp"
#include "walg/integral_weyl.hpp"
#include "walg/qseries.hpp"
#include "walg/root_system.hpp"

namespace walg {

/// A violated hypothesis of a formula; condition() names it
/// ("critical-level", "degenerate", "domain-plus", "domain-minus",
/// "kappa-positive", "not-longest-in-coset", "not-shortest-in-coset").
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string condition, const std::string& message)
      : std::domain_error(message), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

enum class Reduction { Plus, Minus, Verma };
std::string to_string(Reduction r);

struct CharacterResult {
  QSeries series;
  Rational central_charge;
  Rational conformal_weight;
  // metadata
  LieType algebra;
  Rational kappa;
  Vector Lambda_finite;     // finite part of Lambda (the Verma weight for Reduction::Verma)
  Vector highest_weight;    // finite part of w o Lambda
  std::vector<int> word;    // w in the integral generators
  Reduction reduction = Reduction::Verma;
  std::vector<std::string> warnings;
};

struct CharacterOptions {
  /// Degree bound for the integral root slice (default chosen by the context).
  std::optional<long long> slice_bound;
  /// Extra q-units added to the norm bound of the "+" enumeration.
  long long margin = 2;
};

/// c(kappa) = l - 12 (kappa |rho^vee|^2 - 2 <rho, rho^vee> + |rho|^2 / kappa).
Rational central_charge(const RootSystem& rs, const Rational& kappa);

/// Delta = |lam + rho|^2 / 2 kappa - l/24 + c(kappa)/24.
Rational conformal_weight(const RootSystem& rs, const Vector& lam_bar, const Rational& kappa);

/// eta^{-l} = q^{-l/24} prod (1 - q^n)^{-l}, coefficients through q^order above the offset.
QSeries eta_inverse_power(int l, int order);

/// q^{|lam + rho|^2 / 2 kappa} / eta^l.
CharacterResult verma_character(const RootSystem& rs, const Vector& lam_bar, const Rational& kappa,
                                int order);

/// prod_i prod_{m >= d_i + 1} (1 - q^m)^{-1}, offset 0.
QSeries vacuum_algebra_character(const RootSystem& rs, int order);

/// Sum over y <= w of (-1)^{l(y)-l(w)} P_{y,w}(1) q^{|y(Lambda+rho)|^2/2 kappa}, over eta^l.
/// Requires Lambda non-degenerate in Dom_-, w shortest in w W^Lambda_0.
CharacterResult irreducible_character_minus(const RootSystem& rs, const AffineWeight& Lambda,
                                            const std::vector<int>& w, int order,
                                            const CharacterOptions& options = {});

/// Sum over y >= w of (-1)^{l(y)-l(w)} Q_{w,y}(1) q^{|y(Lambda+rho)|^2/2 kappa}, over eta^l.
/// Requires kappa > 0, Lambda non-degenerate in Dom_+, w longest in w W^Lambda_0.
CharacterResult irreducible_character_plus(const RootSystem& rs, const AffineWeight& Lambda,
                                           const std::vector<int>& w, int order,
                                           const CharacterOptions& options = {});

}  // namespace walg
