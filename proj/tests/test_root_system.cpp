#include <doctest.h>

#include "generators.hpp"
#include "walg/root_system.hpp"

using namespace walg;

namespace {

struct TypeData {
  const char* name;
  int positive_roots;
  int dual_coxeter;
  std::vector<int> exponents;
};

const std::vector<TypeData>& type_table() {
  static const std::vector<TypeData> table = {
      {"A1", 1, 2, {1}},
      {"A2", 3, 3, {1, 2}},
      {"A4", 10, 5, {1, 2, 3, 4}},
      {"B2", 4, 3, {1, 3}},
      {"B3", 9, 5, {1, 3, 5}},
      {"C3", 9, 4, {1, 3, 5}},
      {"C4", 16, 5, {1, 3, 5, 7}},
      {"D4", 12, 6, {1, 3, 3, 5}},
      {"D5", 20, 8, {1, 3, 4, 5, 7}},
      {"E6", 36, 12, {1, 4, 5, 7, 8, 11}},
      {"E7", 63, 18, {1, 5, 7, 9, 11, 13, 17}},
      {"E8", 120, 30, {1, 7, 11, 13, 17, 19, 23, 29}},
      {"F4", 24, 9, {1, 5, 7, 11}},
      {"G2", 6, 4, {1, 5}},
  };
  return table;
}

}  // namespace

TEST_CASE("type parsing and validation") {
  CHECK(LieType::parse("A1").name() == "A1");
  CHECK(LieType::parse("e6") == LieType{'E', 6});
  CHECK_THROWS_AS(LieType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("X2"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("A"), std::invalid_argument);
}

TEST_CASE("Cartan matrices of rank two") {
  Eigen::MatrixXi a2(2, 2), b2(2, 2), c2(2, 2), g2(2, 2);
  a2 << 2, -1, -1, 2;
  b2 << 2, -2, -1, 2;
  c2 << 2, -1, -2, 2;
  g2 << 2, -1, -3, 2;
  CHECK(build_root_system({'A', 2}).cartan_matrix() == a2);
  // A(i,j) = <alpha_i, alpha_j^vee> with alpha_2 short in B2, long in C2.
  CHECK(build_root_system({'B', 2}).cartan_matrix() == b2);
  CHECK(build_root_system({'C', 2}).cartan_matrix() == c2);
  CHECK(build_root_system({'G', 2}).cartan_matrix() == g2);
}

TEST_CASE("root counts, dual Coxeter numbers and exponents") {
  for (const auto& t : type_table()) {
    CAPTURE(t.name);
    RootSystem rs = build_root_system(LieType::parse(t.name));
    CHECK(rs.num_positive_roots() == t.positive_roots);
    CHECK(rs.dual_coxeter() == t.dual_coxeter);
    CHECK(rs.exponents() == t.exponents);
    // The exponents sum to the number of positive roots.
    int sum = 0;
    for (int e : rs.exponents()) sum += e;
    CHECK(sum == t.positive_roots);
  }
}

TEST_CASE("strange formula |rho|^2 = h^vee dim / 12") {
  for (const auto& t : type_table()) {
    CAPTURE(t.name);
    RootSystem rs = build_root_system(LieType::parse(t.name));
    CHECK(rs.norm_sq(rs.rho()) == Rational(rs.dual_coxeter() * rs.dimension(), 12));
    // Long roots have norm 2 and theta is long.
    CHECK(rs.norm_sq(rs.highest_root()) == 2);
  }
}

TEST_CASE("rho and rho check pair with simple roots") {
  for (const auto& t : type_table()) {
    RootSystem rs = build_root_system(LieType::parse(t.name));
    for (int i = 1; i <= rs.rank(); ++i) {
      CHECK(pairing_finite(rs, rs.rho(), rs.simple_root(i)) == 1);
      CHECK(rs.form(rs.simple_root(i), rs.rho_check()) == 1);
      CHECK(height(rs, rs.simple_root(i)) == 1);
    }
    // Coxeter number h = 2 #positive roots / rank = ht(theta) + 1.
    CHECK(height(rs, rs.highest_root()) + 1 == 2 * rs.num_positive_roots() / rs.rank());
  }
}

TEST_CASE("the root set is closed under simple reflections") {
  for (const auto& t : type_table()) {
    CAPTURE(t.name);
    RootSystem rs = build_root_system(LieType::parse(t.name));
    CHECK(static_cast<int>(rs.roots().size()) == 2 * rs.num_positive_roots());
    for (int i = 1; i <= rs.rank(); ++i)
      for (const auto& r : rs.roots()) CHECK(rs.is_root(Vector(rs.simple_reflection(i) * r)));
  }
}

TEST_CASE("longest element") {
  for (const auto& t : type_table()) {
    CAPTURE(t.name);
    RootSystem rs = build_root_system(LieType::parse(t.name));
    CHECK(Vector(rs.w0() * rs.rho()) == Vector(-rs.rho()));
    CHECK(static_cast<int>(rs.w0_word().size()) == rs.num_positive_roots());
    CHECK(rs.word_matrix(rs.w0_word()) == rs.w0());
  }
  RootSystem a2 = build_root_system({'A', 2});
  Vector v = make_vector({Rational(1), Rational(0)});
  CHECK(Vector(a2.w0() * v) == make_vector({Rational(0), Rational(-1)}));
}

TEST_CASE("reflections are form-preserving involutions") {
  gen::Source src(11);
  for (int trial = 0; trial < 200; ++trial) {
    RootSystem rs = build_root_system(src.small_type());
    Vector a = src.weight(rs.rank()), b = src.weight(rs.rank());
    auto word = src.word(rs.rank(), 8);
    Matrix m = rs.word_matrix(word);
    CHECK(rs.form(Vector(m * a), Vector(m * b)) == rs.form(a, b));
    CHECK(finite_weyl_apply(rs, word, a) == Vector(m * a));
    int i = static_cast<int>(src.integer(1, rs.rank()));
    CHECK(Matrix(rs.simple_reflection(i) * rs.simple_reflection(i)) == Matrix::Identity(rs.rank(), rs.rank()));
    // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i
    CHECK(Vector(rs.simple_reflection(i) * a) == Vector(a - rs.simple_root(i) * a(i - 1)));
  }
}

TEST_CASE("dominant representatives and infinitesimal characters") {
  gen::Source src(5);
  for (int trial = 0; trial < 100; ++trial) {
    RootSystem rs = build_root_system(src.small_type());
    Vector a = src.weight(rs.rank());
    Vector d = dominant_representative(rs, a);
    for (int i = 0; i < rs.rank(); ++i) CHECK(d(i) >= 0);
    Vector b = finite_weyl_apply(rs, src.word(rs.rank(), 6), a);
    CHECK(dominant_representative(rs, b) == d);
    Vector shifted = finite_weyl_apply(rs, src.word(rs.rank(), 6), Vector(a + rs.rho())) - rs.rho();
    CHECK(same_infinitesimal_character(rs, a, shifted));
    if (a != b && !same_infinitesimal_character(rs, a, b)) CHECK(dominant_representative(rs, Vector(a + rs.rho())) != dominant_representative(rs, Vector(b + rs.rho())));
  }
}

TEST_CASE("coweights") {
  RootSystem rs = build_root_system({'B', 2});
  for (int i = 1; i <= 2; ++i) {
    Vector c = rs.fundamental_coweight(i);
    for (int j = 1; j <= 2; ++j) CHECK(rs.form(rs.simple_root(j), c) == (i == j ? 1 : 0));
    CHECK(rs.is_coweight(c));
  }
  CHECK_FALSE(rs.is_coweight(make_vector({Rational(1, 3), Rational(0)})));
  for (const auto& r : rs.roots()) CHECK(rs.is_coweight(rs.coroot(r)));
}

TEST_CASE("errors") {
  RootSystem rs = build_root_system({'A', 2});
  CHECK_THROWS_AS(rs.simple_reflection(0), std::out_of_range);
  CHECK_THROWS_AS(rs.simple_reflection(3), std::out_of_range);
  CHECK_THROWS_AS(height(rs, make_vector({Rational(1), Rational(0)})), std::invalid_argument);
}
