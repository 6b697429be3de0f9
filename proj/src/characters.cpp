#include "walg/characters.hpp"

#include <algorithm>

#include "walg/kazhdan_lusztig.hpp"

namespace walg {

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::Plus: return "plus";
    case Reduction::Minus: return "minus";
    case Reduction::Verma: return "verma";
  }
  return "verma";
}

namespace {

void require_noncritical(const Rational& kappa) {
  if (kappa == 0) throw PreconditionError("critical-level", "kappa = 0 is the critical level");
}

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

// One signed term c * q^exponent of a character numerator.
struct Term {
  Rational exponent;
  Integer coefficient;
};

// (sum of terms) * eta^{-l}, exact through q^{base + order - l/24}.
QSeries assemble(const std::vector<Term>& terms, const Rational& base, int l, int order) {
  Integer den = 1;
  for (const auto& t : terms) den = lcm_of(den, denominator_of(Rational(t.exponent - base)));
  Rational step(Integer(1), den);
  const long long slots = static_cast<long long>(order) * to_int64(den) + 1;
  std::vector<Rational> numerator(static_cast<std::size_t>(slots), Rational(0));
  for (const auto& t : terms) {
    Rational k = (t.exponent - base) * Rational(den);
    if (k < 0) throw std::logic_error("character term below the leading exponent");
    if (k >= slots) continue;
    numerator[static_cast<std::size_t>(to_int64(k))] += Rational(t.coefficient);
  }
  QSeries top(base, step, std::move(numerator));
  return top * eta_inverse_power(l, order);
}

// The common frame of both formulas: context, KL session and the checks on w.
struct FormulaSetup {
  IntegralCoxeterContext ctx;
  ExtendedWeylElement w;
  Rational kappa;
};

FormulaSetup prepare(const RootSystem& rs, const AffineWeight& Lambda, const std::vector<int>& word,
                     const CharacterOptions& options, DomainSign sign) {
  const Rational kappa = Lambda.level + rs.dual_coxeter();
  require_noncritical(kappa);
  if (sign == DomainSign::Plus && kappa < 0)
    throw PreconditionError("kappa-positive", "the \"+\" formula needs kappa > 0");
  if (!is_nondegenerate(rs, Lambda))
    throw PreconditionError("degenerate", "Lambda is degenerate: some finite root pairs integrally");
  if (!domain_membership(rs, Lambda, sign))
    throw PreconditionError(sign == DomainSign::Plus ? "domain-plus" : "domain-minus",
                            sign == DomainSign::Plus ? "Lambda is not in Dom_+" : "Lambda is not in Dom_-");
  IntegralCoxeterContext ctx(rs, Lambda, options.slice_bound);
  ExtendedWeylElement w = ctx.element_of(word);
  StabilizerCoset coset = stabilizer_and_coset(ctx, w);
  if (sign == DomainSign::Plus && !coset.is_longest)
    throw PreconditionError("not-longest-in-coset", "w is not the longest element of w W^Lambda_0");
  if (sign == DomainSign::Minus && !coset.is_shortest)
    throw PreconditionError("not-shortest-in-coset", "w is not the shortest element of w W^Lambda_0");
  return {std::move(ctx), std::move(w), kappa};
}

CharacterResult finish(const RootSystem& rs, const FormulaSetup& setup, const AffineWeight& Lambda,
                       const std::vector<Term>& terms, const Rational& base, int order) {
  CharacterResult out;
  out.series = assemble(terms, base, rs.rank(), order);
  out.central_charge = central_charge(rs, setup.kappa);
  out.highest_weight = dot_apply(rs, setup.w, Lambda).finite;
  out.conformal_weight = conformal_weight(rs, out.highest_weight, setup.kappa);
  out.algebra = rs.type();
  out.kappa = setup.kappa;
  out.Lambda_finite = Lambda.finite;
  return out;
}

}  // namespace

Rational central_charge(const RootSystem& rs, const Rational& kappa) {
  require_noncritical(kappa);
  const Vector& r = rs.rho();
  const Vector& rc = rs.rho_check();
  Rational bracket = kappa * rs.norm_sq(rc) - 2 * rs.form(r, rc) + rs.norm_sq(r) / kappa;
  return Rational(rs.rank()) - 12 * bracket;
}

Rational conformal_weight(const RootSystem& rs, const Vector& lam_bar, const Rational& kappa) {
  require_noncritical(kappa);
  if (lam_bar.size() != rs.rank()) throw std::invalid_argument("weight has the wrong number of coordinates");
  Rational h = rs.norm_sq(Vector(lam_bar + rs.rho())) / (2 * kappa);
  return h - Rational(rs.rank(), 24) + central_charge(rs, kappa) / 24;
}

QSeries eta_inverse_power(int l, int order) {
  require_order(order);
  if (l < 0) throw std::invalid_argument("eta power must be nonnegative");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] = 1;
  for (int copy = 0; copy < l; ++copy)
    for (int m = 1; m <= order; ++m)
      for (int n = m; n <= order; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - m)];
  std::vector<Rational> coefficients(c.begin(), c.end());
  return QSeries(Rational(-l, 24), Rational(1), std::move(coefficients));
}

CharacterResult verma_character(const RootSystem& rs, const Vector& lam_bar, const Rational& kappa,
                                int order) {
  require_noncritical(kappa);
  require_order(order);
  if (lam_bar.size() != rs.rank()) throw std::invalid_argument("weight has the wrong number of coordinates");
  Rational h = rs.norm_sq(Vector(lam_bar + rs.rho())) / (2 * kappa);
  CharacterResult out;
  out.series = eta_inverse_power(rs.rank(), order).scaled(Rational(1), h);
  out.central_charge = central_charge(rs, kappa);
  out.conformal_weight = conformal_weight(rs, lam_bar, kappa);
  out.algebra = rs.type();
  out.kappa = kappa;
  out.Lambda_finite = lam_bar;
  out.highest_weight = lam_bar;
  out.reduction = Reduction::Verma;
  return out;
}

QSeries vacuum_algebra_character(const RootSystem& rs, int order) {
  require_order(order);
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer(0));
  c[0] = 1;
  for (int d : rs.exponents())
    for (int m = d + 1; m <= order; ++m)
      for (int n = m; n <= order; ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - m)];
  return QSeries(Rational(0), Rational(1), std::vector<Rational>(c.begin(), c.end()));
}

CharacterResult irreducible_character_minus(const RootSystem& rs, const AffineWeight& Lambda,
                                            const std::vector<int>& word, int order,
                                            const CharacterOptions& options) {
  require_order(order);
  FormulaSetup setup = prepare(rs, Lambda, word, options, DomainSign::Minus);
  const auto& ctx = setup.ctx;
  KLSession<IntegralCoxeterContext> session(ctx);
  const auto wid = session.intern(setup.w);
  const Rational two_kappa = 2 * setup.kappa;

  std::vector<Term> terms;
  for (auto yid : session.below(wid)) {
    Integer value = session.kl(yid, wid).at_one();
    if ((session.length(wid) - session.length(yid)) % 2 != 0) value = -value;
    terms.push_back({ctx.finite_norm(session.element(yid)) / two_kappa, value});
  }
  const Rational base = ctx.finite_norm(setup.w) / two_kappa;
  CharacterResult out = finish(rs, setup, Lambda, terms, base, order);
  out.word = session.canonical_word(wid);
  out.reduction = Reduction::Minus;
  if (setup.kappa > 0)
    out.warnings.push_back("kappa > 0 in Dom_-: the integral Weyl group is trivial and the sum has a single term");
  return out;
}

CharacterResult irreducible_character_plus(const RootSystem& rs, const AffineWeight& Lambda,
                                           const std::vector<int>& word, int order,
                                           const CharacterOptions& options) {
  require_order(order);
  if (Lambda.level + rs.dual_coxeter() <= 0) {
    require_noncritical(Lambda.level + rs.dual_coxeter());
    throw PreconditionError("kappa-positive", "the \"+\" formula needs kappa > 0");
  }
  FormulaSetup setup = prepare(rs, Lambda, word, options, DomainSign::Plus);
  const auto& ctx = setup.ctx;
  const Rational two_kappa = 2 * setup.kappa;
  const Rational base = ctx.finite_norm(setup.w) / two_kappa;
  const Rational norm_bound = two_kappa * (base + Rational(order) + Rational(options.margin));

  KLSession<IntegralCoxeterContext> session(ctx);
  const auto wid = session.intern(setup.w);
  std::vector<Term> terms;
  for (const auto& y : generate_above_norm_bounded(ctx, setup.w, norm_bound)) {
    const auto yid = session.intern(y.element);
    Integer value = session.inverse_kl(wid, yid).at_one();
    if ((session.length(yid) - session.length(wid)) % 2 != 0) value = -value;
    terms.push_back({ctx.finite_norm(y.element) / two_kappa, value});
  }
  CharacterResult out = finish(rs, setup, Lambda, terms, base, order);
  out.word = session.canonical_word(wid);
  out.reduction = Reduction::Plus;
  return out;
}

}  // namespace walg
