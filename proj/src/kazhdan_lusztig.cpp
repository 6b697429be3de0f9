#include "walg/kazhdan_lusztig.hpp"

namespace walg {

KLPolynomial::KLPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

KLPolynomial KLPolynomial::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(degree + 1), Integer(0));
  v.back() = c;
  return KLPolynomial(std::move(v));
}

Integer KLPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Integer KLPolynomial::at_one() const {
  Integer sum = 0;
  for (const auto& c : c_) sum += c;
  return sum;
}

KLPolynomial& KLPolynomial::operator+=(const KLPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Integer(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

KLPolynomial& KLPolynomial::operator-=(const KLPolynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), Integer(0));
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return KLPolynomial(std::move(out));
}

KLPolynomial operator*(const Integer& k, const KLPolynomial& p) {
  std::vector<Integer> out = p.c_;
  for (auto& c : out) c *= k;
  return KLPolynomial(std::move(out));
}

KLPolynomial KLPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) throw std::invalid_argument("negative shift of a polynomial");
  std::vector<Integer> out(static_cast<std::size_t>(k), Integer(0));
  out.insert(out.end(), c_.begin(), c_.end());
  return KLPolynomial(std::move(out));
}

std::string KLPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Integer& c = c_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

void KLPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace walg
