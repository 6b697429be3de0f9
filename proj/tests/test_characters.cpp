#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "walg/characters.hpp"

using namespace walg;

namespace {

const RootSystem& a1() {
  static const RootSystem rs = build_root_system({'A', 1});
  return rs;
}

// The A1 weight whose shift by rho pairs to b with the finite coroot.
AffineWeight a1_weight(const Rational& kappa, const Rational& b) {
  return weight_at_kappa(a1(), make_vector({Rational(b - 1)}), kappa);
}

std::vector<long long> as_integers(const QSeries& s, int order) {
  std::vector<long long> out;
  for (int n = 0; n <= order; ++n) {
    const Rational& c = s.coefficient_at(s.offset() + n);
    REQUIRE(is_integer(c));
    out.push_back(to_int64(c));
  }
  return out;
}

std::string condition_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.condition();
  }
  return "";
}

// Position of the simple root alpha_bar + degree delta in the integral generators.
int generator_index(const IntegralCoxeterContext& ctx, int sign, long long degree) {
  for (std::size_t i = 0; i < ctx.simple_roots().size(); ++i) {
    const auto& r = ctx.simple_roots()[i];
    if (r.degree == degree && r.finite(0) * sign > 0) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace

TEST_CASE("central charge closed forms") {
  gen::Source src(51);
  for (int trial = 0; trial < 50; ++trial) {
    Rational k = src.nonzero_rational(30, 9);
    CHECK(central_charge(a1(), k) == 1 - 6 * (k - 1) * (k - 1) / k);
    // Simply laced: c = l (1 - h (h + 1) (k - 1)^2 / k).
    for (const char* name : {"A2", "A3", "D4", "E6"}) {
      RootSystem rs = build_root_system(LieType::parse(name));
      const long long h = rs.dual_coxeter();
      CHECK(central_charge(rs, k) == rs.rank() * (1 - Rational(h * (h + 1)) * (k - 1) * (k - 1) / k));
    }
  }
  CHECK(central_charge(a1(), Rational(4, 3)) == Rational(1, 2));
  CHECK(central_charge(a1(), Rational(5, 4)) == Rational(7, 10));
  CHECK_THROWS_AS(central_charge(a1(), Rational(0)), PreconditionError);
}

TEST_CASE("conformal weights against the minimal-model table") {
  for (auto [p, pp] : {std::pair{4LL, 3LL}, {5, 4}, {5, 2}, {7, 3}}) {
    oracle::MinimalModel mm{p, pp};
    Rational kappa(p, pp);
    CHECK(central_charge(a1(), kappa) == mm.central_charge());
    for (long long r = 1; r < pp; ++r)
      for (long long s = 1; s < p; ++s) {
        // b = r - s kappa; then |lam + rho|^2 / 2 kappa = b^2 / 4 kappa.
        Rational b = Rational(r) - Rational(s) * kappa;
        CHECK(conformal_weight(a1(), make_vector({Rational(b - 1)}), kappa) == mm.weight(s, r));
      }
  }
}

TEST_CASE("eta powers count coloured partitions") {
  for (int l : {1, 2, 3}) {
    QSeries e = eta_inverse_power(l, 10);
    CHECK(e.offset() == Rational(-l, 24));
    for (int n = 0; n <= 10; ++n) CHECK(e.coefficients()[static_cast<std::size_t>(n)] == oracle::colored_partitions(l, n));
  }
  CHECK(eta_inverse_power(0, 3) == QSeries(Rational(0), Rational(1), {Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK_THROWS_AS(eta_inverse_power(1, -1), std::invalid_argument);
}

TEST_CASE("vacuum graded dimension") {
  QSeries v1 = vacuum_algebra_character(a1(), 12);
  for (int n = 0; n <= 12; ++n) CHECK(v1.coefficients()[static_cast<std::size_t>(n)] == oracle::count_partitions(n, 2));
  QSeries v2 = vacuum_algebra_character(build_root_system({'A', 2}), 12);
  for (int n = 0; n <= 12; ++n) {
    long long want = 0;
    for (int k = 0; k <= n; ++k) want += oracle::count_partitions(k, 2) * oracle::count_partitions(n - k, 3);
    CHECK(v2.coefficients()[static_cast<std::size_t>(n)] == want);
  }
}

TEST_CASE("property: Verma characters") {
  gen::Source src(52);
  for (int trial = 0; trial < 20; ++trial) {
    RootSystem rs = build_root_system(src.small_type());
    Rational kappa = src.nonzero_rational(12, 5);
    Vector lam = src.weight(rs.rank());
    CharacterResult v = verma_character(rs, lam, kappa, 6);
    CHECK(v.series.offset() == v.conformal_weight - v.central_charge / 24);
    CHECK(v.reduction == Reduction::Verma);
    for (int n = 0; n <= 6; ++n)
      CHECK(v.series.coefficient_at(v.series.offset() + n) == oracle::colored_partitions(rs.rank(), n));
    // The weight and its dual give the same module data.
    CHECK(verma_character(rs, dual_hw_map(rs, lam), kappa, 6).series == v.series);
  }
}

TEST_CASE("Ising characters through q^10") {
  oracle::MinimalModel ising{4, 3};
  const Rational kappa(4, 3);
  struct Case {
    Rational b;
    long long r, s;
  };
  for (const Case& c : {Case{Rational(1, 3), 1, 1}, Case{Rational(2, 3), 1, 2}, Case{Rational(5, 3), 2, 1}}) {
    CAPTURE(to_string(c.b));
    CharacterResult chi = irreducible_character_plus(a1(), a1_weight(kappa, c.b), {}, 10);
    CHECK(chi.central_charge == Rational(1, 2));
    CHECK(chi.conformal_weight == ising.weight(c.r, c.s));
    CHECK(chi.series.offset() == ising.weight(c.r, c.s) - Rational(1, 48));
    CHECK(chi.series.step() == 1);
    CHECK(as_integers(chi.series, 10) == ising.character(c.r, c.s, 10));
    CHECK(chi.reduction == Reduction::Plus);
    CHECK(chi.warnings.empty());
  }
}

TEST_CASE("other unitary and non-unitary minimal models") {
  for (auto [p, pp] : {std::pair{5LL, 4LL}, {5, 2}}) {
    oracle::MinimalModel mm{p, pp};
    const Rational kappa(p, pp);
    // b = |r - kappa| is positive and non-integral, hence in Dom_+.
    for (long long r = 1; r < pp; ++r) {
      Rational b = Rational(r) - kappa;
      if (b < 0) b = -b;
      CharacterResult chi = irreducible_character_plus(a1(), a1_weight(kappa, b), {}, 8);
      CHECK(as_integers(chi.series, 8) == mm.character(1, r, 8));
    }
  }
}

TEST_CASE("minus formula at negative level") {
  const Rational kappa(-4, 3);
  AffineWeight Lambda = a1_weight(kappa, Rational(2, 3));
  IntegralCoxeterContext ctx(a1(), Lambda);
  REQUIRE(ctx.rank() == 2);
  for (int s : {1, 2}) {
    // A length-one element: its own Verma minus the Verma of Lambda.
    CharacterResult chi = irreducible_character_minus(a1(), Lambda, {s}, 10);
    auto w = ctx.element_of({s});
    QSeries top = verma_character(a1(), dot_apply(a1(), w, Lambda).finite, kappa, 10).series;
    QSeries bottom = verma_character(a1(), Lambda.finite, kappa, 10).series;
    CHECK(chi.series.truncated(top.top()) == (top - bottom).truncated(top.top()));
    CHECK(chi.warnings.empty());
    CHECK(chi.highest_weight == dot_apply(a1(), w, Lambda).finite);
  }
  // The identity gives the Verma module itself.
  CharacterResult e = irreducible_character_minus(a1(), Lambda, {}, 6);
  CHECK(e.series == verma_character(a1(), Lambda.finite, kappa, 6).series);
}

TEST_CASE("property: minus characters are alternating sums over Bruhat intervals") {
  const Rational kappa(-4, 3);
  AffineWeight Lambda = a1_weight(kappa, Rational(2, 3));
  IntegralCoxeterContext ctx(a1(), Lambda);
  auto ball = generate_ball(ctx, 4);
  for (const auto& w : ball) {
    CharacterResult chi = irreducible_character_minus(a1(), Lambda, w.word, 8);
    QSeries want;
    for (const auto& y : ball) {
      if (!oracle::subword_leq(ctx, y.element, w.word)) continue;
      QSeries v = verma_character(a1(), dot_apply(a1(), y.element, Lambda).finite, kappa, 8).series;
      want = want.empty() ? v.scaled(Rational((w.length - y.length) % 2 == 0 ? 1 : -1))
                          : want + v.scaled(Rational((w.length - y.length) % 2 == 0 ? 1 : -1));
    }
    QSeries got = chi.series.truncated(chi.series.offset() + 8);
    CHECK(got.offset() == want.offset());
    for (int n = 0; n <= 8; ++n) CHECK(got.coefficient_at(got.offset() + n) == want.coefficient_at(got.offset() + n));
    for (const auto& c : got.coefficients()) CHECK(c >= 0);
  }
}

TEST_CASE("a trivial integral Weyl group reduces both formulas to Verma characters") {
  gen::Source src(53);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    RootSystem rs = build_root_system(src.coin() ? LieType{'A', 2} : LieType{'B', 2});
    // kappa with a large prime denominator keeps every shifted pairing non-integral.
    Rational kappa(src.integer(1, 40) * (src.coin() ? 1 : -1), 97);
    Vector lam = src.weight(rs.rank(), 5, 7) + Vector::Constant(rs.rank(), Rational(1, 101));
    AffineWeight Lambda = weight_at_kappa(rs, lam, kappa);
    if (!integral_root_slice(rs, Lambda, 6).empty()) continue;
    ++checked;
    QSeries verma = verma_character(rs, lam, kappa, 5).series;
    if (kappa > 0)
      CHECK(irreducible_character_plus(rs, Lambda, {}, 5).series == verma);
    CHECK(irreducible_character_minus(rs, Lambda, {}, 5).series == verma);
  }
  CHECK(checked >= 20);
}

TEST_CASE("precondition failures name the violated hypothesis") {
  CHECK(condition_of([] { irreducible_character_plus(a1(), a1_weight(Rational(0), Rational(1, 2)), {}, 3); }) ==
        "critical-level");
  CHECK(condition_of([] { irreducible_character_minus(a1(), a1_weight(Rational(0), Rational(1, 2)), {}, 3); }) ==
        "critical-level");
  CHECK(condition_of([] { irreducible_character_plus(a1(), a1_weight(Rational(4, 3), Rational(2)), {}, 3); }) ==
        "degenerate");
  CHECK(condition_of([] { irreducible_character_plus(a1(), a1_weight(Rational(-4, 3), Rational(2, 3)), {}, 3); }) ==
        "kappa-positive");
  // b = -7/3 at kappa = 4/3: the root alpha + delta pairs to -1.
  CHECK(condition_of([] { irreducible_character_plus(a1(), a1_weight(Rational(4, 3), Rational(-7, 3)), {}, 3); }) ==
        "domain-plus");
  CHECK(condition_of([] { irreducible_character_minus(a1(), a1_weight(Rational(4, 3), Rational(1, 3)), {}, 3); }) ==
        "domain-minus");
  CHECK_THROWS_AS(verma_character(a1(), make_vector({Rational(1)}), Rational(0), 3), PreconditionError);
  CHECK_THROWS_AS(irreducible_character_plus(a1(), a1_weight(Rational(4, 3), Rational(1, 3)), {}, -1),
                  std::invalid_argument);
}

TEST_CASE("coset extremality") {
  SUBCASE("plus: the stabilizer of b = 4/3 at kappa = 4/3 is generated by -alpha + delta") {
    AffineWeight Lambda = a1_weight(Rational(4, 3), Rational(4, 3));
    IntegralCoxeterContext ctx(a1(), Lambda);
    int s = generator_index(ctx, -1, 1);
    REQUIRE(s != 0);
    CHECK(condition_of([&] { irreducible_character_plus(a1(), Lambda, {}, 3); }) == "not-longest-in-coset");
    CharacterResult chi = irreducible_character_plus(a1(), Lambda, {s}, 6);
    for (const auto& c : chi.series.coefficients()) CHECK(c >= 0);
    CHECK(chi.series.coefficients().front() == 1);
  }
  SUBCASE("minus: the stabilizer of b = 4/3 at kappa = -4/3 is generated by alpha + delta") {
    AffineWeight Lambda = a1_weight(Rational(-4, 3), Rational(4, 3));
    IntegralCoxeterContext ctx(a1(), Lambda);
    int s = generator_index(ctx, 1, 1);
    REQUIRE(s != 0);
    CHECK(condition_of([&] { irreducible_character_minus(a1(), Lambda, {s}, 3); }) == "not-shortest-in-coset");
    CHECK_NOTHROW(irreducible_character_minus(a1(), Lambda, {}, 3));
  }
}

TEST_CASE("the minus formula warns in the trivial positive-level case") {
  // kappa > 0 and Dom_-: only possible when no integral root is positive-paired.
  AffineWeight Lambda = a1_weight(Rational(4, 3), Rational(1, 5));
  CharacterResult chi = irreducible_character_minus(a1(), Lambda, {}, 4);
  CHECK(chi.warnings.size() == 1);
  CHECK(chi.series == verma_character(a1(), Lambda.finite, Rational(4, 3), 4).series);
}

TEST_CASE("results do not depend on the slice bound or the enumeration margin") {
  struct Scenario {
    LieType type;
    std::vector<Rational> weight;
    Rational kappa;
  };
  for (const auto& sc : {Scenario{{'A', 1}, {Rational(-2, 3)}, Rational(4, 3)},
                         Scenario{{'A', 1}, {Rational(-1, 2)}, Rational(5, 2)},
                         Scenario{{'A', 2}, {Rational(-5, 4), Rational(1, 2)}, Rational(5, 2)}}) {
    RootSystem rs = build_root_system(sc.type);
    AffineWeight Lambda = weight_at_kappa(rs, make_vector(sc.weight), sc.kappa);
    CAPTURE(sc.type.name());
    CharacterResult base = irreducible_character_plus(rs, Lambda, {}, 6);
    CharacterOptions wide;
    wide.slice_bound = 64;
    wide.margin = 6;
    CHECK(irreducible_character_plus(rs, Lambda, {}, 6, wide).series == base.series);
    CharacterOptions tight;
    tight.margin = 0;
    CHECK(irreducible_character_plus(rs, Lambda, {}, 6, tight).series == base.series);
  }
}

TEST_CASE("duality leaves plus characters unchanged") {
  RootSystem a2 = build_root_system({'A', 2});
  Vector lam = make_vector({Rational(-1, 2), Rational(1, 4)});
  CHECK(dual_hw_map(a2, lam) == make_vector({Rational(1, 4), Rational(-1, 2)}));
  const Rational kappa(3, 2);
  auto chi = [&](const Vector& v) {
    AffineWeight Lambda = weight_at_kappa(a2, v, kappa);
    return irreducible_character_plus(a2, Lambda, {}, 5).series;
  };
  CHECK(chi(lam) == chi(dual_hw_map(a2, lam)));
  CHECK(IntegralCoxeterContext(a2, weight_at_kappa(a2, lam, kappa)).rank() == 2);
}

TEST_CASE("property: plus characters are positive with the expected leading term") {
  gen::Source src(54);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 200; ++trial) {
    RootSystem rs = build_root_system(src.coin() ? LieType{'A', 1} : (src.coin() ? LieType{'A', 2} : LieType{'B', 2}));
    Rational kappa(src.integer(1, 12), src.integer(1, 5));
    Vector lam = src.weight(rs.rank(), 4, 3);
    AffineWeight Lambda = weight_at_kappa(rs, lam, kappa);
    if (!is_nondegenerate(rs, Lambda) || !domain_membership(rs, Lambda, DomainSign::Plus)) continue;
    CharacterResult chi;
    try {
      chi = irreducible_character_plus(rs, Lambda, {}, 4);
    } catch (const PreconditionError& e) {
      // Only a non-trivial stabilizer can stop the identity here.
      CHECK(e.condition() == "not-longest-in-coset");
      continue;
    }
    ++checked;
    CAPTURE(rs.type().name());
    CAPTURE(to_string(kappa));
    CAPTURE(to_string(lam));
    CHECK(chi.series.offset() == chi.conformal_weight - chi.central_charge / 24);
    CHECK(chi.conformal_weight == conformal_weight(rs, lam, kappa));
    CHECK(chi.series.coefficients().front() == 1);
    for (const auto& c : chi.series.coefficients()) {
      CHECK(is_integer(c));
      CHECK(c >= 0);
    }
    // Bounded above by the Verma character.
    QSeries verma = verma_character(rs, lam, kappa, 4).series;
    QSeries gap = verma - chi.series;
    for (const auto& c : gap.coefficients()) CHECK(c >= 0);
  }
  CHECK(checked >= 200);
}
