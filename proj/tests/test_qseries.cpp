#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "walg/qseries.hpp"

using namespace walg;

namespace {

// Sparse model: exponent -> coefficient, together with the exactness limit.
struct Sparse {
  std::map<Rational, Rational> terms;
  Rational top;
};

Sparse sparse(const QSeries& s) {
  Sparse out{{}, s.top()};
  for (std::size_t k = 0; k < s.coefficients().size(); ++k)
    if (s.coefficients()[k] != 0) out.terms[s.offset() + s.step() * Rational(static_cast<long long>(k))] += s.coefficients()[k];
  return out;
}

QSeries random_series(gen::Source& src) {
  Rational step(1, src.integer(1, 4));
  Rational offset = step * Rational(src.integer(-6, 6)) + Rational(src.integer(0, 2), 5);
  std::vector<Rational> c;
  for (long long k = 0, n = src.integer(1, 9); k < n; ++k) c.push_back(src.rational(5, 3));
  return QSeries(offset, step, c);
}

}  // namespace

TEST_CASE("rendering") {
  CHECK(QSeries().to_string() == "0");
  CHECK(QSeries::from_integers({1, 1, 0, 2}).to_string() == "(1 + q + 2q^3 + O(q^4))");
  QSeries s(Rational(1, 24), Rational(1), {Rational(1), Rational(-1), Rational(1, 2)});
  CHECK(s.to_string() == "q^{1/24}(1 - q + 1/2q^2 + O(q^3))");
  QSeries half(Rational(-1, 48), Rational(1, 2), {Rational(2), Rational(0), Rational(3)});
  CHECK(half.to_string() == "q^{-1/48}(2 + 3q + O(q^{3/2}))");
  QSeries zero(Rational(0), Rational(1), {Rational(0), Rational(0)});
  CHECK(zero.to_string() == "(O(q^2))");
}

TEST_CASE("coefficient lookup and truncation") {
  QSeries s(Rational(1, 3), Rational(1, 2), {Rational(1), Rational(2), Rational(3)});
  CHECK(s.top() == Rational(4, 3));
  CHECK(s.coefficient_at(Rational(1, 3)) == 1);
  CHECK(s.coefficient_at(Rational(5, 6)) == 2);
  CHECK(s.coefficient_at(Rational(2, 3)) == 0);
  CHECK(s.coefficient_at(Rational(-5)) == 0);
  CHECK_THROWS_AS(s.coefficient_at(Rational(2)), std::out_of_range);
  CHECK(s.truncated(Rational(1)).coefficients().size() == 2);
  CHECK(s.truncated(Rational(0)).empty());
  CHECK(s.truncated(Rational(10)) == s);
  CHECK_THROWS_AS(QSeries(Rational(0), Rational(0), {}), std::invalid_argument);
  CHECK_THROWS_AS(s.refined(Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("common steps") {
  CHECK(common_step(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
  CHECK(common_step(Rational(2), Rational(3)) == Rational(1));
  CHECK(common_step(Rational(2, 3), Rational(4, 9)) == Rational(2, 9));
}

TEST_CASE("a geometric series inverts 1 - q") {
  QSeries geometric = QSeries::from_integers({1, 1, 1, 1, 1, 1});
  QSeries one_minus_q = QSeries::from_integers({1, -1, 0, 0, 0, 0});
  CHECK(geometric * one_minus_q == QSeries::from_integers({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("offsets on incompatible lattices cannot be added") {
  QSeries a(Rational(0), Rational(1), {Rational(1)});
  QSeries b(Rational(1, 2), Rational(1), {Rational(1)});
  CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("property: arithmetic agrees with the sparse model") {
  gen::Source src(41);
  for (int trial = 0; trial < 300; ++trial) {
    QSeries a = random_series(src), b = random_series(src);
    Sparse sa = sparse(a), sb = sparse(b);

    QSeries prod = a * b;
    Rational top = std::min(sa.top + b.offset(), sb.top + a.offset());
    CHECK(prod.top() == top);
    std::map<Rational, Rational> want;
    for (const auto& [ea, ca] : sa.terms)
      for (const auto& [eb, cb] : sb.terms)
        if (ea + eb <= top) want[ea + eb] += ca * cb;
    CHECK(sparse(prod).terms == [&] {
      std::map<Rational, Rational> nz;
      for (const auto& [e, c] : want)
        if (c != 0) nz[e] = c;
      return nz;
    }());

    // Sums are defined when the offsets share a lattice.
    QSeries c = random_series(src);
    QSeries shifted(a.offset() + c.step() * Rational(src.integer(-3, 3)), c.step(), c.coefficients());
    QSeries sum = a + shifted;
    Rational sum_top = std::min(a.top(), shifted.top());
    for (Rational e = sum.offset(); e <= sum_top; e += sum.step())
      CHECK(sum.coefficient_at(e) == a.coefficient_at(e) + shifted.coefficient_at(e));
    CHECK((a - a).coefficients() == std::vector<Rational>(a.coefficients().size(), Rational(0)));

    // Refinement and scaling do not change the function.
    QSeries fine = a.refined(a.step() / 3);
    for (Rational e = a.offset(); e <= a.top(); e += fine.step()) CHECK(fine.coefficient_at(e) == a.coefficient_at(e));
    Rational k = src.nonzero_rational(4, 3);
    QSeries moved = a.scaled(k, Rational(1, 7));
    CHECK(moved.coefficient_at(a.offset() + Rational(1, 7)) == k * a.coefficients().front());
  }
}
