#pragma once

// Kazhdan-Lusztig polynomials over an abstract Coxeter system.
//
// A client system supplies lengths, right descents and right multiplication by
// generators (1-based). The session interns elements, memoizes Bruhat
// comparisons, lower intervals, P_{x,y} and the inverse polynomials Q_{x,y}
// defined by
//   sum_{x <= z <= y} (-1)^{l(z)-l(x)} P_{x,z} Q_{z,y} = delta_{x,y}.
// A session is single-owner; separate sessions produce identical results.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "walg/rational.hpp"

namespace walg {

template <class S>
concept CoxeterSystem = requires(const S& sys, const typename S::element_type& w, int s) {
  { sys.rank() } -> std::convertible_to<int>;
  { sys.identity() } -> std::convertible_to<typename S::element_type>;
  { sys.length(w) } -> std::convertible_to<int>;
  { sys.is_right_descent(w, s) } -> std::convertible_to<bool>;
  { sys.right_multiply(w, s) } -> std::convertible_to<typename S::element_type>;
  { sys.hash(w) } -> std::convertible_to<std::size_t>;
  { w == w } -> std::convertible_to<bool>;
};

/// Polynomial in q with integer coefficients; index = power of q.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<Integer> coefficients);

  static KLPolynomial one() { return KLPolynomial({Integer(1)}); }
  static KLPolynomial monomial(int degree, const Integer& c = Integer(1));

  const std::vector<Integer>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coefficient(int k) const;
  Integer at_one() const;

  KLPolynomial& operator+=(const KLPolynomial& other);
  KLPolynomial& operator-=(const KLPolynomial& other);
  friend KLPolynomial operator+(KLPolynomial a, const KLPolynomial& b) { return a += b; }
  friend KLPolynomial operator-(KLPolynomial a, const KLPolynomial& b) { return a -= b; }
  friend KLPolynomial operator*(const KLPolynomial& a, const KLPolynomial& b);
  friend KLPolynomial operator*(const Integer& k, const KLPolynomial& p);
  /// Multiplication by q^k.
  KLPolynomial shifted(int k) const;

  bool operator==(const KLPolynomial& other) const { return c_ == other.c_; }

  /// "0", "1", "1 + q", "1 + 2q^2 - q^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

template <CoxeterSystem S>
class KLSession {
 public:
  using Element = typename S::element_type;
  using Id = int;

  explicit KLSession(const S& system) : sys_(&system) { identity_ = intern(sys_->identity()); }

  const S& system() const { return *sys_; }
  Id identity() const { return identity_; }

  Id intern(const Element& w) {
    auto& bucket = table_[sys_->hash(w)];
    for (Id id : bucket)
      if (elements_[static_cast<std::size_t>(id)] == w) return id;
    Id id = static_cast<Id>(elements_.size());
    elements_.push_back(w);
    lengths_.push_back(sys_->length(w));
    descents_.push_back(-1);
    right_.emplace_back(static_cast<std::size_t>(sys_->rank()), -1);
    bucket.push_back(id);
    return id;
  }

  const Element& element(Id id) const { return elements_.at(static_cast<std::size_t>(id)); }
  int length(Id id) const { return lengths_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return elements_.size(); }

  bool is_descent(Id w, int s) { return (descent_mask(w) >> (s - 1)) & 1u; }

  /// Smallest right descent, or 0 for the identity.
  int first_descent(Id w) {
    std::uint64_t mask = descent_mask(w);
    for (int s = 1; s <= sys_->rank(); ++s)
      if ((mask >> (s - 1)) & 1u) return s;
    return 0;
  }

  Id right(Id w, int s) {
    Id& slot = right_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s - 1)];
    if (slot < 0) {
      Id product = intern(sys_->right_multiply(element(w), s));
      // intern may reallocate right_; re-fetch the slot.
      right_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s - 1)] = product;
      return product;
    }
    return slot;
  }

  /// Reduced word obtained by repeatedly stripping the smallest right descent.
  std::vector<int> canonical_word(Id w) {
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
    std::vector<int> reversed;
    Id cur = w;
    while (int s = first_descent(cur)) {
      reversed.push_back(s);
      cur = right(cur, s);
    }
    if (cur != identity_)
      throw std::logic_error("element without descents is not the identity");
    std::vector<int> word(reversed.rbegin(), reversed.rend());
    words_.emplace(w, word);
    return word;
  }

  /// Orders by (length, canonical word).
  bool precedes(Id a, Id b) {
    if (length(a) != length(b)) return length(a) < length(b);
    return canonical_word(a) < canonical_word(b);
  }
  void sort(std::vector<Id>& ids) {
    for (Id id : ids) canonical_word(id);
    std::sort(ids.begin(), ids.end(), [this](Id a, Id b) { return precedes(a, b); });
  }

  /// x <= y: for a right descent s of y, x <= y iff min(x, xs) <= ys.
  bool bruhat_leq(Id x, Id y) {
    while (true) {
      if (x == y) return true;
      if (length(x) >= length(y)) return false;
      auto key = pair_key(x, y);
      if (auto it = bruhat_.find(key); it != bruhat_.end()) return it->second;
      int s = first_descent(y);
      Id ys = right(y, s);
      Id nx = is_descent(x, s) ? right(x, s) : x;
      bool result = bruhat_leq(nx, ys);
      bruhat_.emplace(key, result);
      return result;
    }
  }

  /// All z <= y, sorted by (length, canonical word).
  const std::vector<Id>& below(Id y) {
    if (auto it = below_.find(y); it != below_.end()) return it->second;
    std::vector<Id> out;
    if (y == identity_) {
      out.push_back(identity_);
    } else {
      int s = first_descent(y);
      std::vector<Id> base = below(right(y, s));
      out = base;
      for (Id z : base) out.push_back(right(z, s));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      sort(out);
    }
    return below_.emplace(y, std::move(out)).first->second;
  }

  /// All z with x <= z <= y (empty when x is not below y).
  std::vector<Id> interval(Id x, Id y) {
    std::vector<Id> out;
    if (!bruhat_leq(x, y)) return out;
    for (Id z : below(y))
      if (bruhat_leq(x, z)) out.push_back(z);
    return out;
  }

  const KLPolynomial& kl(Id x, Id y) {
    auto key = pair_key(x, y);
    if (auto it = kl_.find(key); it != kl_.end()) return it->second;
    KLPolynomial p;
    if (x == y) {
      p = KLPolynomial::one();
    } else if (bruhat_leq(x, y)) {
      p = kl_with_descent(x, y, first_descent(y));
    }
    return kl_.emplace(key, std::move(p)).first->second;
  }

  /// The descent recursion at a chosen right descent s of y (y != x):
  ///   P_{x,y} = q^{1-c} P_{xs,v} + q^c P_{x,v}
  ///             - sum_{x <= z < v, zs < z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z},
  /// with v = ys and c = 1 iff s is a descent of x.
  KLPolynomial kl_with_descent(Id x, Id y, int s) {
    if (!is_descent(y, s)) throw std::invalid_argument("generator is not a descent of y");
    if (!bruhat_leq(x, y)) return {};
    if (x == y) return KLPolynomial::one();
    Id v = right(y, s);
    int c = is_descent(x, s) ? 1 : 0;
    KLPolynomial p = kl(right(x, s), v).shifted(1 - c) + kl(x, v).shifted(c);
    for (Id z : interval(x, v)) {
      if (z == v || !is_descent(z, s)) continue;
      Integer m = mu(z, v);
      if (m == 0) continue;
      p -= m * kl(x, z).shifted((length(y) - length(z)) / 2);
    }
    return p;
  }

  /// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} for x < y, else 0.
  Integer mu(Id x, Id y) {
    if (x == y) return 0;
    int d = length(y) - length(x);
    if (d <= 0 || d % 2 == 0) return 0;
    return kl(x, y).coefficient((d - 1) / 2);
  }

  const KLPolynomial& inverse_kl(Id w, Id y) {
    auto key = pair_key(w, y);
    if (auto it = q_.find(key); it != q_.end()) return it->second;
    KLPolynomial q;
    if (w == y) {
      q = KLPolynomial::one();
    } else if (bruhat_leq(w, y)) {
      for (Id z : interval(w, y)) {
        if (z == w) continue;
        KLPolynomial term = kl(w, z) * inverse_kl(z, y);
        if ((length(z) - length(w)) % 2 == 0)
          q -= term;
        else
          q += term;
      }
    }
    return q_.emplace(key, std::move(q)).first->second;
  }

 private:
  static std::uint64_t pair_key(Id a, Id b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  std::uint64_t descent_mask(Id w) {
    auto& cached = descents_[static_cast<std::size_t>(w)];
    if (cached < 0) {
      std::int64_t mask = 0;
      for (int s = 1; s <= sys_->rank(); ++s)
        if (sys_->is_right_descent(element(w), s)) mask |= std::int64_t{1} << (s - 1);
      descents_[static_cast<std::size_t>(w)] = mask;
      return static_cast<std::uint64_t>(mask);
    }
    return static_cast<std::uint64_t>(cached);
  }

  const S* sys_;
  Id identity_ = 0;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::vector<std::int64_t> descents_;
  std::vector<std::vector<Id>> right_;
  std::unordered_map<std::size_t, std::vector<Id>> table_;
  std::unordered_map<Id, std::vector<int>> words_;
  std::unordered_map<std::uint64_t, bool> bruhat_;
  std::unordered_map<Id, std::vector<Id>> below_;
  std::unordered_map<std::uint64_t, KLPolynomial> kl_;
  std::unordered_map<std::uint64_t, KLPolynomial> q_;
};

template <CoxeterSystem S>
KLPolynomial kl_polynomial(KLSession<S>& session, const typename S::element_type& x,
                           const typename S::element_type& y) {
  return session.kl(session.intern(x), session.intern(y));
}

template <CoxeterSystem S>
Integer mu_coefficient(KLSession<S>& session, const typename S::element_type& x,
                       const typename S::element_type& y) {
  return session.mu(session.intern(x), session.intern(y));
}

template <CoxeterSystem S>
KLPolynomial inverse_kl(KLSession<S>& session, const typename S::element_type& w,
                        const typename S::element_type& y) {
  return session.inverse_kl(session.intern(w), session.intern(y));
}

template <CoxeterSystem S>
std::vector<typename S::element_type> bruhat_interval(KLSession<S>& session,
                                                      const typename S::element_type& x,
                                                      const typename S::element_type& y) {
  std::vector<typename S::element_type> out;
  for (auto id : session.interval(session.intern(x), session.intern(y)))
    out.push_back(session.element(id));
  return out;
}

/// Element spelled by a word of generators, built by right multiplication.
template <CoxeterSystem S>
typename S::element_type element_of_word(const S& sys, const std::vector<int>& word) {
  auto w = sys.identity();
  for (int s : word) w = sys.right_multiply(w, s);
  return w;
}

}  // namespace walg
