#pragma once

// The integral root system R^Lambda = { alpha real : <Lambda + rho, alpha^vee> in Z },
// its simple system, the integral Weyl group W^Lambda as a Coxeter system, and
// the domain predicates of the character formulas.
//
// All integrality questions reduce to one linear congruence per finite root:
// along alpha_bar + n delta the shifted pairing is offset + n * slope with
// slope = 2 kappa / (alpha_bar, alpha_bar), and the integral n form an
// arithmetic progression (or nothing).

#include <optional>
#include <vector>

#include "walg/affine.hpp"
#include "walg/kazhdan_lusztig.hpp"
#include "walg/root_system.hpp"

namespace walg {

/// Integral degrees along one finite root.
struct RootProgression {
  Rational offset;  // <Lambda_bar + rho_bar, alpha_bar^vee>
  Rational slope;   // 2 kappa / (alpha_bar, alpha_bar)
  bool empty = true;
  long long first = 0;   // representative in [0, period)
  long long period = 0;  // n integral iff n = first (mod period)

  bool contains(long long n) const;
  /// Smallest integral degree >= n (only when !empty).
  long long next_at_or_after(long long n) const;
  /// Number of integral degrees in [lo, hi].
  long long count_in(long long lo, long long hi) const;
};

/// kappa = level(Lambda) + h^vee. Throws std::domain_error at the critical level.
Rational kappa_of(const RootSystem& rs, const AffineWeight& Lambda);

/// One progression per entry of rs.roots().
std::vector<RootProgression> integrality_table(const RootSystem& rs, const AffineWeight& Lambda);

/// All integral alpha_bar + n delta with |n| <= degree_bound: positive roots
/// (by degree, then root order) followed by negative roots (same order).
std::vector<AffineRealRoot> integral_root_slice(const RootSystem& rs, const AffineWeight& Lambda,
                                                long long degree_bound);

/// <Lambda, alpha_bar^vee> not integral for every finite root.
bool is_nondegenerate(const RootSystem& rs, const AffineWeight& Lambda);

/// <Lambda, alpha^vee> not integral for alpha = -alpha_bar + n delta,
/// alpha_bar > 0, 1 <= n <= ht(alpha_bar).
bool satisfies_cond_plus(const RootSystem& rs, const AffineWeight& Lambda);
/// Positive real roots alpha with t_{-rho^vee}(alpha) negative, found by
/// applying root_action over a degree window.
std::vector<AffineRealRoot> cond_plus_obstruction_set(const RootSystem& rs);
/// The set form: no root of the obstruction set is integral for Lambda.
bool satisfies_cond_plus_set_form(const RootSystem& rs, const AffineWeight& Lambda);

/// <Lambda + rho, alpha^vee> is never a positive integer for alpha > 0.
bool is_antidominant(const RootSystem& rs, const AffineWeight& Lambda);

enum class DomainSign { Plus, Minus };

/// Plus: no positive real root pairs to a negative integer.
/// Minus: no positive real root pairs to a positive integer.
/// With require_nondegenerate the "nondeg" subdomain is tested.
bool domain_membership(const RootSystem& rs, const AffineWeight& Lambda, DomainSign sign,
                       bool require_nondegenerate = false);

class IntegralCoxeterContext {
 public:
  using element_type = ExtendedWeylElement;

  /// Finds the simple system by the reflection criterion and verifies closure
  /// on a degree slice (default bound 4 * den(kappa) * max height, doubled up
  /// to twice on failure). Throws std::domain_error at the critical level and
  /// std::runtime_error when closure cannot be established.
  IntegralCoxeterContext(const RootSystem& rs, const AffineWeight& Lambda,
                         std::optional<long long> degree_bound = std::nullopt);

  const RootSystem& root_system() const { return rs_; }
  const AffineWeight& Lambda() const { return Lambda_; }
  const Rational& kappa() const { return kappa_; }
  const std::vector<RootProgression>& table() const { return table_; }
  /// Simple roots sorted by degree, then by finite root order.
  const std::vector<AffineRealRoot>& simple_roots() const { return simple_; }
  const std::vector<ExtendedWeylElement>& generator_reflections() const { return generators_; }
  /// m(i,j) with 0 standing for infinity.
  const Eigen::MatrixXi& coxeter_matrix() const { return coxeter_; }
  long long slice_bound() const { return slice_bound_; }

  /// <Lambda + rho, alpha^vee>.
  Rational shifted_pairing(const AffineRealRoot& alpha) const;
  bool is_integral(const AffineRealRoot& alpha) const;

  // Coxeter system interface (generators 1..rank()).
  int rank() const { return static_cast<int>(simple_.size()); }
  ExtendedWeylElement identity() const { return ExtendedWeylElement::identity(rs_.rank()); }
  /// #{alpha in R^Lambda_+ : w(alpha) < 0}, counted exactly by progressions.
  int length(const ExtendedWeylElement& w) const;
  bool is_right_descent(const ExtendedWeylElement& w, int s) const;
  bool is_left_descent(const ExtendedWeylElement& w, int s) const;
  ExtendedWeylElement right_multiply(const ExtendedWeylElement& w, int s) const;
  ExtendedWeylElement left_multiply(int s, const ExtendedWeylElement& w) const;
  std::size_t hash(const ExtendedWeylElement& w) const { return w.hash(); }

  /// Product of the generator reflections s_{i_1} ... s_{i_k}.
  ExtendedWeylElement element_of(const std::vector<int>& word) const;
  /// Finite part of w(Lambda + rho).
  Vector moved_finite_part(const ExtendedWeylElement& w) const;
  /// |finite part of w(Lambda + rho)|^2.
  Rational finite_norm(const ExtendedWeylElement& w) const;

 private:
  bool closure_holds(long long bound) const;

  RootSystem rs_;
  AffineWeight Lambda_;
  AffineWeight shifted_;  // Lambda + rho
  Rational kappa_;
  std::vector<RootProgression> table_;
  std::vector<AffineRealRoot> simple_;
  std::vector<ExtendedWeylElement> generators_;
  Eigen::MatrixXi coxeter_;
  long long slice_bound_ = 0;
};

IntegralCoxeterContext integral_simple_system(const RootSystem& rs, const AffineWeight& Lambda,
                                              std::optional<long long> degree_bound = std::nullopt);

struct IntegralWeylElement {
  ExtendedWeylElement element;
  std::vector<int> word;
  int length = 0;
};

struct LengthAndDescents {
  int length = 0;
  std::vector<int> descents;  // right descents, ascending
};

/// Greedy smallest-right-descent word; throws std::invalid_argument when w is
/// not in W^Lambda.
std::vector<int> reduced_word(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& w);
bool is_member(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& w);
LengthAndDescents length_and_descents(const IntegralCoxeterContext& ctx,
                                      const ExtendedWeylElement& w);
IntegralWeylElement make_integral_element(const IntegralCoxeterContext& ctx,
                                          const ExtendedWeylElement& w);

bool bruhat_leq(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& x,
                const ExtendedWeylElement& y);

/// All elements of length <= max_length, sorted by (length, word).
std::vector<IntegralWeylElement> generate_ball(const IntegralCoxeterContext& ctx, int max_length);

/// All y <= w, sorted by (length, word).
std::vector<IntegralWeylElement> generate_interval_below(const IntegralCoxeterContext& ctx,
                                                         const ExtendedWeylElement& w);

/// Upper bound on l_Lambda(y) for every y with finite_norm(y) <= norm_bound.
long long length_cap(const IntegralCoxeterContext& ctx, const Rational& norm_bound);

/// All y >= w with finite_norm(y) <= norm_bound, sorted by (length, word).
/// Requires kappa > 0 (std::domain_error otherwise).
std::vector<IntegralWeylElement> generate_above_norm_bounded(const IntegralCoxeterContext& ctx,
                                                             const ExtendedWeylElement& w,
                                                             const Rational& norm_bound);

struct StabilizerCoset {
  std::vector<AffineRealRoot> generators;  // positive roots with zero shifted pairing
  std::vector<ExtendedWeylElement> group;  // all of W^Lambda_0
  bool is_longest = true;
  bool is_shortest = true;
};

StabilizerCoset stabilizer_and_coset(const IntegralCoxeterContext& ctx,
                                     const ExtendedWeylElement& w);

}  // namespace walg
