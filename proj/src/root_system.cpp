#include "walg/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <stdexcept>

namespace walg {

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2)
    throw std::invalid_argument("malformed Lie type: '" + std::string(text) + "'");
  LieType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string digits(text.substr(1));
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("malformed Lie type: '" + std::string(text) + "'");
  t.rank = std::stoi(digits);
  validate(t);
  return t;
}

std::string LieType::name() const { return std::string(1, family) + std::to_string(rank); }

void validate(const LieType& t) {
  bool ok = false;
  switch (t.family) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 4; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("invalid Lie type " + t.name());
}

namespace {

// Symmetric matrix (alpha_i, alpha_j) of the simple roots, long roots of norm 2.
Matrix simple_root_form(const LieType& t) {
  const int n = t.rank;
  Matrix b = Matrix::Zero(n, n);
  auto link = [&](int i, int j, const Rational& v) {
    b(i, j) = v;
    b(j, i) = v;
  };
  switch (t.family) {
    case 'A':
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      b(n - 1, n - 1) = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) b(i, i) = 1;
      b(n - 1, n - 1) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      for (int i = 0; i < n; ++i) b(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b(0, 0) = 2;
      b(1, 1) = 2;
      b(2, 2) = 1;
      b(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      break;
    case 'G':
      b(0, 0) = Rational(2, 3);
      b(1, 1) = 2;
      link(0, 1, -1);
      break;
    default:
      throw std::invalid_argument("invalid Lie type " + t.name());
  }
  return b;
}

std::string key_of(const Vector& v) { return to_string(v); }

}  // namespace

RootSystem::RootSystem(LieType type) : type_(type) {
  validate(type_);
  const int n = type_.rank;
  const Matrix b = simple_root_form(type_);

  cartan_.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_(i, j) = to_int64(Rational(2 * b(i, j) / b(j, j)));

  Matrix a(n, n);
  Matrix d = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = b(i, i) / 2;
    for (int j = 0; j < n; ++j) a(i, j) = cartan_(i, j);
  }
  gram_ = a.fullPivLu().inverse() * d;

  for (int i = 0; i < n; ++i) simple_roots_.push_back(a.row(i).transpose());

  // Root closure by alpha-strings, processed in order of height.
  std::map<std::vector<int>, bool> seen;
  std::vector<Eigen::VectorXi> layer;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    layer.push_back(e);
    seen[std::vector<int>(e.data(), e.data() + n)] = true;
  }
  auto contains = [&](const Eigen::VectorXi& c) {
    return seen.count(std::vector<int>(c.data(), c.data() + n)) > 0;
  };
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [n](const Eigen::VectorXi& x, const Eigen::VectorXi& y) {
      return std::lexicographical_compare(x.data(), x.data() + n, y.data(), y.data() + n,
                                          std::greater<int>());
    });
    for (const auto& c : layer) coefficients_.push_back(c);
    std::vector<Eigen::VectorXi> next;
    for (const auto& c : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += c(j) * cartan_(j, i);
        int p = 0;
        Eigen::VectorXi down = c;
        while (true) {
          down(i) -= 1;
          if (down(i) < 0 || !contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          Eigen::VectorXi up = c;
          up(i) += 1;
          if (!contains(up)) {
            seen[std::vector<int>(up.data(), up.data() + n)] = true;
            next.push_back(up);
          }
        }
      }
    }
    layer = std::move(next);
  }

  for (const auto& c : coefficients_) {
    Vector v = Vector::Zero(n);
    for (int j = 0; j < n; ++j) v += Rational(c(j)) * simple_roots_[static_cast<std::size_t>(j)];
    positive_.push_back(v);
  }
  roots_ = positive_;
  for (const auto& v : positive_) roots_.push_back(-v);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_[key_of(roots_[k])] = static_cast<int>(k);

  rho_ = Vector::Constant(n, Rational(1));
  rho_check_.resize(n);
  for (int i = 0; i < n; ++i) rho_check_(i) = Rational(2) / b(i, i);
  highest_ = positive_.back();

  dual_coxeter_ = 1 + static_cast<int>(to_int64(form(rho_, highest_)));

  // The partition of positive roots by height is dual to the partition of exponents.
  std::vector<int> by_height;
  for (const auto& c : coefficients_) {
    int h = c.sum();
    if (static_cast<int>(by_height.size()) < h + 2) by_height.resize(static_cast<std::size_t>(h + 2), 0);
    by_height[static_cast<std::size_t>(h)] += 1;
  }
  for (std::size_t k = 1; k + 1 < by_height.size(); ++k)
    for (int m = 0; m < by_height[k] - by_height[k + 1]; ++m) exponents_.push_back(static_cast<int>(k));

  for (int i = 1; i <= n; ++i) {
    Matrix s = Matrix::Identity(n, n);
    for (int j = 0; j < n; ++j) s(j, i - 1) -= Rational(cartan_(i - 1, j));
    reflections_.push_back(s);
  }

  // Reflect rho into the antidominant chamber; the reflections used spell w0.
  Vector v = rho_;
  w0_ = Matrix::Identity(n, n);
  std::vector<int> applied;
  while (true) {
    int found = 0;
    for (int i = 0; i < n && !found; ++i)
      if (v(i) > 0) found = i + 1;
    if (!found) break;
    v = simple_reflection(found) * v;
    w0_ = simple_reflection(found) * w0_;
    applied.push_back(found);
  }
  w0_word_.assign(applied.rbegin(), applied.rend());
}

RootSystem build_root_system(const LieType& type) { return RootSystem(type); }

std::optional<int> RootSystem::root_index(const Vector& v) const {
  if (v.size() != rank()) return std::nullopt;
  auto it = index_.find(key_of(v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Matrix& RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > rank())
    throw std::out_of_range("simple reflection index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rank()));
  return reflections_[static_cast<std::size_t>(i - 1)];
}

Matrix RootSystem::reflection(const Vector& root) const {
  // s(x) = x - <x, root^vee> root, with <x, root^vee> = 2 x^T G root / |root|^2.
  Vector row = gram_ * root * (Rational(2) / norm_sq(root));
  return Matrix::Identity(rank(), rank()) - root * row.transpose();
}

Matrix RootSystem::word_matrix(const std::vector<int>& word) const {
  Matrix m = Matrix::Identity(rank(), rank());
  for (int i : word) m = m * simple_reflection(i);
  return m;
}

Vector RootSystem::fundamental_coweight(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("coweight index out of range");
  Vector v = Vector::Zero(rank());
  v(i - 1) = rho_check_(i - 1);
  return v;
}

bool RootSystem::is_coweight(const Vector& v) const {
  if (v.size() != rank()) return false;
  for (const auto& a : simple_roots_)
    if (!is_integer(form(a, v))) return false;
  return true;
}

int height(const RootSystem& rs, const Vector& root) {
  if (!rs.is_root(root)) throw std::invalid_argument("not a root: (" + to_string(root) + ")");
  return static_cast<int>(to_int64(rs.form(root, rs.rho_check())));
}

Vector finite_weyl_apply(const RootSystem& rs, const std::vector<int>& word, const Vector& weight) {
  Vector v = weight;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = rs.simple_reflection(*it) * v;
  return v;
}

Vector dominant_representative(const RootSystem& rs, Vector v) {
  while (true) {
    int found = 0;
    for (int i = 0; i < rs.rank() && !found; ++i)
      if (v(i) < 0) found = i + 1;
    if (!found) return v;
    v = rs.simple_reflection(found) * v;
  }
}

bool same_infinitesimal_character(const RootSystem& rs, const Vector& lam, const Vector& mu) {
  return dominant_representative(rs, lam + rs.rho()) == dominant_representative(rs, mu + rs.rho());
}

int FiniteCoxeterSystem::length(const Matrix& w) const {
  int count = 0;
  for (const auto& a : rs_->positive_roots())
    if (!rs_->is_positive(w * a)) ++count;
  return count;
}

bool FiniteCoxeterSystem::is_right_descent(const Matrix& w, int s) const {
  return !rs_->is_positive(w * rs_->simple_root(s));
}

}  // namespace walg
