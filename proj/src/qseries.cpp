#include "walg/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace walg {

QSeries::QSeries(Rational offset, Rational step, std::vector<Rational> coefficients)
    : offset_(std::move(offset)), step_(std::move(step)), coefficients_(std::move(coefficients)) {
  if (step_ <= 0) throw std::invalid_argument("q-series step must be positive");
}

QSeries QSeries::from_integers(const std::vector<long long>& coefficients) {
  std::vector<Rational> c;
  for (long long v : coefficients) c.emplace_back(v);
  return QSeries(Rational(0), Rational(1), std::move(c));
}

Rational QSeries::top() const {
  if (empty()) throw std::logic_error("empty q-series has no top exponent");
  return offset_ + step_ * Rational(static_cast<long long>(coefficients_.size()) - 1);
}

Rational QSeries::coefficient_at(const Rational& exponent) const {
  if (empty() || exponent < offset_) return 0;
  if (exponent > top()) throw std::out_of_range("exponent beyond the truncation order");
  Rational k = (exponent - offset_) / step_;
  if (!is_integer(k)) return 0;
  return coefficients_[static_cast<std::size_t>(to_int64(k))];
}

QSeries QSeries::scaled(const Rational& c, const Rational& shift) const {
  std::vector<Rational> out = coefficients_;
  for (auto& v : out) v *= c;
  return QSeries(offset_ + shift, step_, std::move(out));
}

QSeries QSeries::refined(const Rational& new_step) const {
  Rational ratio = step_ / new_step;
  if (!is_integer(ratio) || ratio <= 0)
    throw std::invalid_argument("refined step must divide the current step");
  long long r = to_int64(ratio);
  if (r == 1) return *this;
  std::vector<Rational> out;
  if (!empty()) out.assign((coefficients_.size() - 1) * static_cast<std::size_t>(r) + 1, Rational(0));
  for (std::size_t k = 0; k < coefficients_.size(); ++k)
    out[k * static_cast<std::size_t>(r)] = coefficients_[k];
  return QSeries(offset_, new_step, std::move(out));
}

QSeries QSeries::truncated(const Rational& max_exponent) const {
  if (empty()) return *this;
  Rational k = floor_of(Rational((max_exponent - offset_) / step_));
  if (k < 0) return QSeries(offset_, step_, {});
  std::size_t keep = std::min(coefficients_.size(), static_cast<std::size_t>(to_int64(k)) + 1);
  return QSeries(offset_, step_, {coefficients_.begin(), coefficients_.begin() + static_cast<long>(keep)});
}

Rational common_step(const Rational& a, const Rational& b) {
  // gcd of two positive rationals: gcd(numerators) / lcm(denominators).
  return Rational(gcd_of(numerator_of(a), numerator_of(b)),
                  lcm_of(denominator_of(a), denominator_of(b)));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.empty() || b.empty()) return QSeries(a.offset_ + b.offset_, common_step(a.step_, b.step_), {});
  Rational step = common_step(a.step_, b.step_);
  QSeries x = a.refined(step), y = b.refined(step);
  Rational top = std::min(x.top() + y.offset_, y.top() + x.offset_);
  Rational offset = x.offset_ + y.offset_;
  long long n = to_int64(Rational((top - offset) / step)) + 1;
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < x.coefficients_.size() && static_cast<long long>(i) < n; ++i) {
    if (x.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coefficients_.size() && static_cast<long long>(i + j) < n; ++j)
      out[i + j] += x.coefficients_[i] * y.coefficients_[j];
  }
  return QSeries(offset, step, std::move(out));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Rational step = common_step(a.step_, b.step_);
  if (!is_integer(Rational((a.offset_ - b.offset_) / step)))
    throw std::invalid_argument("q-series offsets lie on different lattices");
  QSeries x = a.refined(step), y = b.refined(step);
  Rational offset = std::min(x.offset_, y.offset_);
  Rational top = std::min(x.top(), y.top());
  if (top < offset) return QSeries(offset, step, {});
  long long n = to_int64(Rational((top - offset) / step)) + 1;
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  for (long long k = 0; k < n; ++k) {
    Rational e = offset + step * Rational(k);
    out[static_cast<std::size_t>(k)] = x.coefficient_at(e) + y.coefficient_at(e);
  }
  return QSeries(offset, step, std::move(out));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.scaled(Rational(-1)); }

namespace {

std::string power_of_q(const Rational& e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  std::string s = to_string(e);
  if (is_integer(e) && e > 0) return "q^" + s;
  return "q^{" + s + "}";
}

}  // namespace

std::string QSeries::to_string() const {
  if (empty()) return "0";
  std::string body;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    Rational e = step_ * Rational(static_cast<long long>(k));
    Rational mag = c < 0 ? Rational(-c) : c;
    if (body.empty())
      body += c < 0 ? "-" : "";
    else
      body += c < 0 ? " - " : " + ";
    std::string p = power_of_q(e);
    if (mag != 1 || p.empty()) body += walg::to_string(mag);
    body += p;
  }
  std::string tail = "O(" + power_of_q(step_ * Rational(static_cast<long long>(coefficients_.size()))) + ")";
  body = body.empty() ? tail : body + " + " + tail;
  std::string prefix = power_of_q(offset_);
  return prefix.empty() ? "(" + body + ")" : prefix + "(" + body + ")";
}

}  // namespace walg
