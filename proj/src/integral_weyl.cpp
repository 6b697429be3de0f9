#include "walg/integral_weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace walg {

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer out;
  if (mpz_invert(out.backend().data(), a.backend().data(), m.backend().data()) == 0)
    throw std::logic_error("modular inverse does not exist");
  return out;
}

// Integral n of offset + n * slope, i.e. the solutions of A + n T = 0 (mod D).
RootProgression solve_progression(const Rational& offset, const Rational& slope) {
  RootProgression p;
  p.offset = offset;
  p.slope = slope;
  Integer d = lcm_of(denominator_of(offset), denominator_of(slope));
  Integer a = numerator_of(Rational(offset * d));
  Integer t = numerator_of(Rational(slope * d));
  Integer g = gcd_of(t, d);
  if (a % g != 0) return p;
  Integer m = d / g;
  p.empty = false;
  p.period = to_int64(m);
  if (m == 1) {
    p.first = 0;
    return p;
  }
  Integer inv = mod_inverse(mod_floor(Integer(t / g), m), m);
  p.first = to_int64(mod_floor(Integer(-(a / g) * inv), m));
  return p;
}

// Positivity threshold for alpha_bar + n delta: n >= 0 for positive alpha_bar, n >= 1 otherwise.
long long min_positive_degree(const RootSystem& rs, std::size_t root_index) {
  return root_index < static_cast<std::size_t>(rs.num_positive_roots()) ? 0 : 1;
}

void sort_elements(std::vector<IntegralWeylElement>& v) {
  std::sort(v.begin(), v.end(), [](const IntegralWeylElement& a, const IntegralWeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
}

}  // namespace

bool RootProgression::contains(long long n) const {
  if (empty) return false;
  long long r = n % period;
  if (r < 0) r += period;
  return r == first;
}

long long RootProgression::next_at_or_after(long long n) const {
  long long r = (first - n) % period;
  if (r < 0) r += period;
  return n + r;
}

long long RootProgression::count_in(long long lo, long long hi) const {
  if (empty || lo > hi) return 0;
  long long start = next_at_or_after(lo);
  if (start > hi) return 0;
  return (hi - start) / period + 1;
}

Rational kappa_of(const RootSystem& rs, const AffineWeight& Lambda) {
  Rational kappa = Lambda.level + rs.dual_coxeter();
  if (kappa == 0) throw std::domain_error("critical level: kappa = 0");
  return kappa;
}

std::vector<RootProgression> integrality_table(const RootSystem& rs, const AffineWeight& Lambda) {
  const Rational kappa = kappa_of(rs, Lambda);
  const Vector shifted = Lambda.finite + rs.rho();
  std::vector<RootProgression> table;
  table.reserve(rs.roots().size());
  for (const auto& root : rs.roots())
    table.push_back(solve_progression(pairing_finite(rs, shifted, root),
                                      Rational(2) * kappa / rs.norm_sq(root)));
  return table;
}

std::vector<AffineRealRoot> integral_root_slice(const RootSystem& rs, const AffineWeight& Lambda,
                                                long long degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const auto table = integrality_table(rs, Lambda);
  std::vector<std::pair<long long, std::size_t>> pos, neg;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& p = table[r];
    if (p.empty) continue;
    for (long long n = p.next_at_or_after(-degree_bound); n <= degree_bound; n += p.period) {
      bool positive = n >= min_positive_degree(rs, r);
      (positive ? pos : neg).emplace_back(positive ? n : -n, r);
    }
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<AffineRealRoot> out;
  for (auto [n, r] : pos) out.push_back({rs.roots()[r], n});
  for (auto [n, r] : neg) out.push_back({rs.roots()[r], -n});
  return out;
}

bool is_nondegenerate(const RootSystem& rs, const AffineWeight& Lambda) {
  for (const auto& root : rs.positive_roots())
    if (is_integer(pairing_finite(rs, Lambda.finite, root))) return false;
  return true;
}

bool satisfies_cond_plus(const RootSystem& rs, const AffineWeight& Lambda) {
  for (const auto& root : rs.positive_roots()) {
    int ht = height(rs, root);
    for (int n = 1; n <= ht; ++n)
      if (is_integer(affine_pairing(rs, Lambda, {-root, n}))) return false;
  }
  return true;
}

std::vector<AffineRealRoot> cond_plus_obstruction_set(const RootSystem& rs) {
  const auto shift = ExtendedWeylElement::translation_by(rs, -rs.rho_check());
  const long long window = height(rs, rs.highest_root()) + 1;
  std::vector<AffineRealRoot> out;
  for (long long n = -window; n <= window; ++n)
    for (const auto& root : rs.roots()) {
      AffineRealRoot alpha{root, n};
      if (is_positive(rs, alpha) && !is_positive(rs, root_action(rs, shift, alpha)))
        out.push_back(alpha);
    }
  return out;
}

bool satisfies_cond_plus_set_form(const RootSystem& rs, const AffineWeight& Lambda) {
  const AffineWeight shifted = Lambda + affine_rho(rs);
  for (const auto& alpha : cond_plus_obstruction_set(rs))
    if (is_integer(affine_pairing(rs, shifted, alpha))) return false;
  return true;
}

bool domain_membership(const RootSystem& rs, const AffineWeight& Lambda, DomainSign sign,
                       bool require_nondegenerate) {
  const auto table = integrality_table(rs, Lambda);
  for (std::size_t r = 0; r < table.size(); ++r) {
    const auto& p = table[r];
    if (p.empty) continue;
    const bool growing = p.slope > 0;
    // The pairing is monotone along the progression, so only its first
    // admissible term matters unless it runs off in the forbidden direction.
    const Rational first = p.offset + p.slope * Rational(p.next_at_or_after(min_positive_degree(rs, r)));
    if (sign == DomainSign::Plus) {
      if (!growing || first < 0) return false;
    } else {
      if (growing || first > 0) return false;
    }
  }
  return !require_nondegenerate || is_nondegenerate(rs, Lambda);
}

bool is_antidominant(const RootSystem& rs, const AffineWeight& Lambda) {
  return domain_membership(rs, Lambda, DomainSign::Minus);
}

IntegralCoxeterContext::IntegralCoxeterContext(const RootSystem& rs, const AffineWeight& Lambda,
                                               std::optional<long long> degree_bound)
    : rs_(rs), Lambda_(Lambda), shifted_(Lambda + affine_rho(rs)), kappa_(kappa_of(rs, Lambda)) {
  if (Lambda.finite.size() != rs.rank())
    throw std::invalid_argument("weight rank does not match the root system");
  table_ = integrality_table(rs_, Lambda_);

  // Only the lowest positive root above each finite root can be simple: if
  // alpha_bar + m delta is integral and positive with m < n, then s_beta for
  // beta = alpha_bar + n delta sends it to -alpha_bar + (m - 2n) delta < 0.
  std::vector<std::pair<long long, std::size_t>> found;
  for (std::size_t r = 0; r < table_.size(); ++r) {
    const auto& p = table_[r];
    if (p.empty) continue;
    long long n = p.next_at_or_after(min_positive_degree(rs_, r));
    AffineRealRoot beta{rs_.roots()[r], n};
    if (length(ExtendedWeylElement::reflection(rs_, beta)) == 1) found.emplace_back(n, r);
  }
  std::sort(found.begin(), found.end());
  for (auto [n, r] : found) {
    simple_.push_back({rs_.roots()[r], n});
    generators_.push_back(ExtendedWeylElement::reflection(rs_, simple_.back()));
  }

  const int k = rank();
  coxeter_ = Eigen::MatrixXi::Ones(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      ExtendedWeylElement prod = generators_[static_cast<std::size_t>(i)] *
                                 generators_[static_cast<std::size_t>(j)];
      ExtendedWeylElement power = prod;
      int order = 0;
      for (int m = 1; m <= 6; ++m) {
        if (power.is_identity()) {
          order = m;
          break;
        }
        power = power * prod;
      }
      coxeter_(i, j) = order;
    }

  const long long max_height = height(rs_, rs_.highest_root());
  long long bound = degree_bound.value_or(4 * to_int64(denominator_of(kappa_)) * max_height);
  if (bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  for (int attempt = 0; attempt < 3; ++attempt, bound *= 2) {
    if (closure_holds(bound)) {
      slice_bound_ = bound;
      return;
    }
  }
  throw std::runtime_error("integral root system: simple roots do not generate R^Lambda_+ up to degree " +
                           std::to_string(bound / 2));
}

bool IntegralCoxeterContext::closure_holds(long long bound) const {
  for (const auto& gamma0 : integral_root_slice(rs_, Lambda_, bound)) {
    if (!is_positive(rs_, gamma0)) continue;
    AffineRealRoot gamma = gamma0;
    // Each step subtracts a positive multiple of a simple root, so a bounded
    // number of steps reaches a simple root when gamma is in their span.
    bool reached = false;
    for (int step = 0; step < 100000 && !reached; ++step) {
      if (std::find(simple_.begin(), simple_.end(), gamma) != simple_.end()) {
        reached = true;
        break;
      }
      bool moved = false;
      for (const auto& beta : simple_) {
        Rational c = root_pairing(rs_, gamma, beta);
        if (c > 0) {
          long long m = to_int64(c);
          gamma = {gamma.finite - beta.finite * Rational(m), gamma.degree - m * beta.degree};
          moved = true;
          break;
        }
      }
      if (!moved || !is_positive(rs_, gamma)) return false;
    }
    if (!reached) return false;
  }
  return true;
}

Rational IntegralCoxeterContext::shifted_pairing(const AffineRealRoot& alpha) const {
  return affine_pairing(rs_, shifted_, alpha);
}

bool IntegralCoxeterContext::is_integral(const AffineRealRoot& alpha) const {
  return is_integer(shifted_pairing(alpha));
}

int IntegralCoxeterContext::length(const ExtendedWeylElement& w) const {
  long long count = 0;
  const auto& roots = rs_.roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto& p = table_[r];
    if (p.empty) continue;
    Vector moved = w.finite() * roots[r];
    long long c = to_int64(rs_.form(moved, w.translation()));
    // alpha_bar + n delta is positive for n >= lo; its image has degree n - c
    // and finite part `moved`, so it is negative for n <= hi.
    long long lo = min_positive_degree(rs_, r);
    long long hi = rs_.is_positive(moved) ? c - 1 : c;
    count += p.count_in(lo, hi);
  }
  return static_cast<int>(count);
}

bool IntegralCoxeterContext::is_right_descent(const ExtendedWeylElement& w, int s) const {
  return !is_positive(rs_, root_action(rs_, w, simple_.at(static_cast<std::size_t>(s - 1))));
}

bool IntegralCoxeterContext::is_left_descent(const ExtendedWeylElement& w, int s) const {
  return is_right_descent(invert(rs_, w), s);
}

ExtendedWeylElement IntegralCoxeterContext::right_multiply(const ExtendedWeylElement& w, int s) const {
  return w * generators_.at(static_cast<std::size_t>(s - 1));
}

ExtendedWeylElement IntegralCoxeterContext::left_multiply(int s, const ExtendedWeylElement& w) const {
  return generators_.at(static_cast<std::size_t>(s - 1)) * w;
}

ExtendedWeylElement IntegralCoxeterContext::element_of(const std::vector<int>& word) const {
  ExtendedWeylElement w = identity();
  for (int s : word) {
    if (s < 1 || s > rank())
      throw std::out_of_range("generator index " + std::to_string(s) + " outside 1.." +
                              std::to_string(rank()));
    w = right_multiply(w, s);
  }
  return w;
}

Vector IntegralCoxeterContext::moved_finite_part(const ExtendedWeylElement& w) const {
  return weyl_apply(rs_, w, shifted_).finite;
}

Rational IntegralCoxeterContext::finite_norm(const ExtendedWeylElement& w) const {
  return rs_.norm_sq(moved_finite_part(w));
}

IntegralCoxeterContext integral_simple_system(const RootSystem& rs, const AffineWeight& Lambda,
                                              std::optional<long long> degree_bound) {
  return IntegralCoxeterContext(rs, Lambda, degree_bound);
}

std::vector<int> reduced_word(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& w) {
  const int expected = ctx.length(w);
  std::vector<int> reversed;
  ExtendedWeylElement cur = w;
  while (!cur.is_identity()) {
    int found = 0;
    for (int s = 1; s <= ctx.rank() && !found; ++s)
      if (ctx.is_right_descent(cur, s)) found = s;
    if (!found || static_cast<int>(reversed.size()) >= expected)
      throw std::invalid_argument("element is not in the integral Weyl group");
    reversed.push_back(found);
    cur = ctx.right_multiply(cur, found);
  }
  return {reversed.rbegin(), reversed.rend()};
}

bool is_member(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& w) {
  try {
    reduced_word(ctx, w);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

LengthAndDescents length_and_descents(const IntegralCoxeterContext& ctx,
                                      const ExtendedWeylElement& w) {
  if (!is_member(ctx, w)) throw std::invalid_argument("element is not in the integral Weyl group");
  LengthAndDescents out;
  out.length = ctx.length(w);
  for (int s = 1; s <= ctx.rank(); ++s)
    if (ctx.is_right_descent(w, s)) out.descents.push_back(s);
  return out;
}

IntegralWeylElement make_integral_element(const IntegralCoxeterContext& ctx,
                                          const ExtendedWeylElement& w) {
  IntegralWeylElement out{w, reduced_word(ctx, w), 0};
  out.length = static_cast<int>(out.word.size());
  return out;
}

bool bruhat_leq(const IntegralCoxeterContext& ctx, const ExtendedWeylElement& x,
                const ExtendedWeylElement& y) {
  if (!is_member(ctx, x) || !is_member(ctx, y))
    throw std::invalid_argument("element is not in the integral Weyl group");
  ExtendedWeylElement a = x, b = y;
  while (true) {
    if (a == b) return true;
    if (ctx.length(a) >= ctx.length(b)) return false;
    int s = 0;
    for (int i = 1; i <= ctx.rank() && !s; ++i)
      if (ctx.is_right_descent(b, i)) s = i;
    if (ctx.is_right_descent(a, s)) a = ctx.right_multiply(a, s);
    b = ctx.right_multiply(b, s);
  }
}

std::vector<IntegralWeylElement> generate_ball(const IntegralCoxeterContext& ctx, int max_length) {
  std::vector<IntegralWeylElement> out;
  std::vector<ExtendedWeylElement> layer{ctx.identity()};
  for (int len = 0; len <= max_length && !layer.empty(); ++len) {
    std::unordered_set<ExtendedWeylElement> next;
    for (const auto& w : layer) {
      out.push_back(make_integral_element(ctx, w));
      if (len == max_length) continue;
      for (int s = 1; s <= ctx.rank(); ++s)
        if (!ctx.is_right_descent(w, s)) next.insert(ctx.right_multiply(w, s));
    }
    layer.assign(next.begin(), next.end());
  }
  sort_elements(out);
  return out;
}

std::vector<IntegralWeylElement> generate_interval_below(const IntegralCoxeterContext& ctx,
                                                         const ExtendedWeylElement& w) {
  if (!is_member(ctx, w)) throw std::invalid_argument("element is not in the integral Weyl group");
  KLSession<IntegralCoxeterContext> session(ctx);
  std::vector<IntegralWeylElement> out;
  for (auto id : session.below(session.intern(w))) {
    IntegralWeylElement e{session.element(id), session.canonical_word(id), session.length(id)};
    out.push_back(std::move(e));
  }
  sort_elements(out);
  return out;
}

long long length_cap(const IntegralCoxeterContext& ctx, const Rational& norm_bound) {
  // y = t_mu v: |v(Lambda_bar + rho_bar) + kappa mu| <= sqrt(N) bounds
  // |mu|^2 <= 2 (N + |Lambda_bar + rho_bar|^2) / kappa^2 =: M, and
  // l(y) <= sum_{alpha > 0} (|(alpha, mu)| + 1) with |(alpha, mu)| <= sqrt(2 M).
  const auto& rs = ctx.root_system();
  Rational r2 = rs.norm_sq(Vector(ctx.Lambda().finite + rs.rho()));
  Rational n = norm_bound > 0 ? norm_bound : Rational(0);
  Rational m = 2 * (n + r2) / (ctx.kappa() * ctx.kappa());
  Integer root = isqrt_floor(ceil_of(Rational(2 * m)));
  return static_cast<long long>(rs.num_positive_roots()) * (to_int64(root) + 2);
}

std::vector<IntegralWeylElement> generate_above_norm_bounded(const IntegralCoxeterContext& ctx,
                                                             const ExtendedWeylElement& w,
                                                             const Rational& norm_bound) {
  if (ctx.kappa() <= 0)
    throw std::domain_error("norm-bounded enumeration needs kappa > 0");
  if (!is_member(ctx, w)) throw std::invalid_argument("element is not in the integral Weyl group");
  // In Dom_+ every length-increasing step weakly raises the finite norm, so
  // every prefix of a reduced word of an admissible y is admissible too.
  const bool monotone = domain_membership(ctx.root_system(), ctx.Lambda(), DomainSign::Plus);
  const long long cap = length_cap(ctx, norm_bound);

  KLSession<IntegralCoxeterContext> session(ctx);
  const auto wid = session.intern(w);
  std::vector<IntegralWeylElement> out;
  std::vector<ExtendedWeylElement> layer{ctx.identity()};
  for (long long len = 0; len <= cap && !layer.empty(); ++len) {
    std::unordered_set<ExtendedWeylElement> next;
    for (const auto& y : layer) {
      bool admissible = ctx.finite_norm(y) <= norm_bound;
      if (admissible) {
        auto yid = session.intern(y);
        if (session.bruhat_leq(wid, yid))
          out.push_back({y, session.canonical_word(yid), session.length(yid)});
      }
      if (monotone && !admissible) continue;
      for (int s = 1; s <= ctx.rank(); ++s)
        if (!ctx.is_right_descent(y, s)) next.insert(ctx.right_multiply(y, s));
    }
    layer.assign(next.begin(), next.end());
  }
  sort_elements(out);
  return out;
}

StabilizerCoset stabilizer_and_coset(const IntegralCoxeterContext& ctx,
                                     const ExtendedWeylElement& w) {
  const auto& rs = ctx.root_system();
  StabilizerCoset out;
  for (std::size_t r = 0; r < ctx.table().size(); ++r) {
    const auto& p = ctx.table()[r];
    Rational n = -p.offset / p.slope;
    if (!is_integer(n)) continue;
    AffineRealRoot alpha{rs.roots()[r], to_int64(n)};
    if (is_positive(rs, alpha)) out.generators.push_back(alpha);
  }

  std::vector<ExtendedWeylElement> reflections;
  for (const auto& a : out.generators) reflections.push_back(ExtendedWeylElement::reflection(rs, a));
  std::unordered_set<ExtendedWeylElement> seen{ctx.identity()};
  std::vector<ExtendedWeylElement> frontier{ctx.identity()};
  out.group.push_back(ctx.identity());
  while (!frontier.empty()) {
    std::vector<ExtendedWeylElement> next;
    for (const auto& u : frontier)
      for (const auto& s : reflections) {
        ExtendedWeylElement v = s * u;
        if (seen.insert(v).second) {
          next.push_back(v);
          out.group.push_back(v);
          if (out.group.size() > 1000000)
            throw std::runtime_error("stabilizer subgroup is unexpectedly large");
        }
      }
    frontier = std::move(next);
  }

  const int lw = ctx.length(w);
  for (const auto& u : out.group) {
    int l = ctx.length(w * u);
    if (l > lw) out.is_longest = false;
    if (l < lw) out.is_shortest = false;
  }
  return out;
}

}  // namespace walg
