#ifndef BIRATIO_UPOLY_HPP
#define BIRATIO_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "biratio/errors.hpp"
#include "biratio/rational.hpp"

namespace biratio {

/// Dense univariate polynomial over a commutative ring R, coefficients
/// stored low to high with no trailing zeros. R needs +, -, *, and the free
/// functions is_zero, divexact (exact division) and ring_gcd. Nesting
/// UPoly<UPoly<Rational>> gives Q[y][x], the recursive view used by the
/// bivariate gcd and resultant.
template <typename R>
class UPoly {
 public:
  using coefficient_type = R;

  UPoly() = default;
  explicit UPoly(R constant) {
    if (!is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(R coeff, int degree) {
    if (is_zero(coeff)) return {};
    std::vector<R> c(degree + 1);
    c[degree] = std::move(coeff);
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(R(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  bool constant() const { return c_.size() <= 1; }

  R coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : R(); }
  const R& lead() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<R>& coeffs() const { return c_; }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const R& s) {
    if (is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator*(UPoly a, const R& s) { return a *= s; }
  friend UPoly operator*(const R& s, UPoly a) { return a *= s; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Horner evaluation at any T that R converts into.
  template <typename T>
  T operator()(const T& at) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  /// x^deg * p(1/x) for the formal degree `deg` >= degree().
  UPoly reversed(int deg) const {
    std::vector<R> r(deg + 1);
    for (int i = 0; i <= degree(); ++i) r[deg - i] = c_[i];
    return UPoly(std::move(r));
  }

  UPoly shifted(int k) const {
    if (zero()) return {};
    std::vector<R> r(k, R());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <typename R>
bool is_zero(const UPoly<R>& p) {
  return p.zero();
}

template <typename R>
bool is_one(const UPoly<R>& p) {
  return p.degree() == 0 && is_one(p.lead());
}

template <typename R>
UPoly<R> pow(const UPoly<R>& base, unsigned e) {
  UPoly<R> acc(R(1)), b = base;
  while (e) {
    if (e & 1u) acc = acc * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return acc;
}

template <typename R>
R pow(const R& base, unsigned e)
  requires(!std::is_arithmetic_v<R>)
{
  R acc(1), b = base;
  while (e) {
    if (e & 1u) acc *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return acc;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, division-free.
template <typename R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.zero()) throw Error(ErrorKind::ZeroDenominator, "pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const R& lb = b.lead();
  int e = a.degree() - b.degree() + 1;
  UPoly<R> r = a;
  while (!r.zero() && r.degree() >= b.degree()) {
    UPoly<R> t = UPoly<R>::monomial(r.lead(), r.degree() - b.degree());
    r = r * lb - t * b;
    --e;
  }
  return r * pow(lb, static_cast<unsigned>(e));
}

/// Division with remainder; requires the leading coefficient of b to divide
/// exactly (always true over a field).
template <typename R>
std::pair<UPoly<R>, UPoly<R>> divrem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<R>(), a};
  std::vector<R> q(a.degree() - b.degree() + 1);
  UPoly<R> r = a;
  while (!r.zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    R c = divexact(r.lead(), b.lead());
    r -= UPoly<R>::monomial(c, k) * b;
    q[k] = std::move(c);
  }
  return {UPoly<R>(std::move(q)), r};
}

/// a / b when b divides a; throws otherwise.
template <typename R>
UPoly<R> divexact(const UPoly<R>& a, const UPoly<R>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.zero()) throw Error(ErrorKind::ZeroDenominator, "inexact polynomial division");
  return q;
}

template <typename R>
UPoly<R> divexact_scalar(UPoly<R> a, const R& s) {
  std::vector<R> c = a.coeffs();
  for (auto& x : c) x = divexact(x, s);
  return UPoly<R>(std::move(c));
}

/// Content over the coefficient ring (gcd of all coefficients).
template <typename R>
R content(const UPoly<R>& p) {
  R g;
  for (const auto& c : p.coeffs()) {
    g = ring_gcd(g, c);
    if (is_one(g)) break;
  }
  return g;
}

template <typename R>
UPoly<R> primitive_part(const UPoly<R>& p) {
  if (p.zero()) return p;
  return divexact_scalar(p, content(p));
}

/// Monic normalization (coefficients in a field).
template <typename F>
UPoly<F> monic(const UPoly<F>& p) {
  if (p.zero()) return p;
  return divexact_scalar(p, p.lead());
}

/// gcd in D[x] for a gcd domain D by the subresultant remainder sequence
/// (Collins/Brown); the result is primitive up to the content gcd.
template <typename R>
UPoly<R> gcd_subresultant(UPoly<R> a, UPoly<R> b) {
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  R ca = content(a), cb = content(b);
  R d = ring_gcd(ca, cb);
  if (b.degree() == 0) return UPoly<R>(d);
  a = divexact_scalar(a, ca);
  b = divexact_scalar(b, cb);
  R g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    UPoly<R> r = prem(a, b);
    if (r.zero()) break;
    if (r.degree() == 0) {
      b = UPoly<R>(R(1));
      break;
    }
    a = std::move(b);
    b = divexact_scalar(r, R(g * pow(h, static_cast<unsigned>(delta))));
    g = a.lead();
    if (delta == 0) {
      // h stays
    } else {
      h = divexact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_part(b) * d;
}

/// Resultant of a and b as elements of D[x], via the subresultant
/// algorithm. Res(c, b) = c^deg(b) for a constant c; zero if either is zero.
template <typename R>
R resultant(UPoly<R> a, UPoly<R> b) {
  if (a.zero() || b.zero()) return R();
  if (a.degree() == 0) return pow(a.lead(), static_cast<unsigned>(b.degree()));
  if (b.degree() == 0) return pow(b.lead(), static_cast<unsigned>(a.degree()));
  int s = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    std::swap(a, b);
  }
  R ca = content(a), cb = content(b);
  R t = pow(ca, static_cast<unsigned>(b.degree())) * pow(cb, static_cast<unsigned>(a.degree()));
  a = divexact_scalar(a, ca);
  b = divexact_scalar(b, cb);
  R g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    UPoly<R> r = prem(a, b);
    if (r.zero()) return R();
    a = std::move(b);
    b = divexact_scalar(r, R(g * pow(h, static_cast<unsigned>(delta))));
    g = a.lead();
    if (delta != 0)
      h = divexact(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    if (b.degree() == 0) {
      int da = a.degree();
      R hb = divexact(pow(b.lead(), static_cast<unsigned>(da)), pow(h, static_cast<unsigned>(da - 1)));
      R out = t * hb;
      return s < 0 ? R(-out) : out;
    }
  }
}

/// Euclid over a field, monic result (0 if both inputs are 0).
template <typename F>
UPoly<F> gcd_field(UPoly<F> a, UPoly<F> b) {
  while (!b.zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended Euclid over a field: returns (g, s, t) with s a + t b = g monic.
template <typename F>
struct ExtendedGcd {
  UPoly<F> gcd, s, t;
};

template <typename F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!r1.zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) return {r0, s0, t0};
  F inv = divexact(F(1), r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Square-free part p / gcd(p, p') over a field, monic.
template <typename F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() <= 0) return monic(p);
  UPoly<F> g = gcd_field(p, p.derivative());
  return monic(divexact(p, g));
}

/// ring_gcd for polynomial coefficient rings: the monic field gcd when the
/// inner coefficients form a field (Q, Q(i)).
template <typename F>
UPoly<F> ring_gcd(const UPoly<F>& a, const UPoly<F>& b)
  requires requires(F f) { f.get_num(); } || requires(F f) { f.re; }
{
  if (a.zero()) return monic(b);
  if (b.zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return UPoly<F>(F(1));
  return gcd_field(a, b);
}

/// gcd in Z[x], positive leading coefficient.
inline UPoly<Integer> ring_gcd(const UPoly<Integer>& a, const UPoly<Integer>& b) {
  UPoly<Integer> g = a.zero() ? b : b.zero() ? a : gcd_subresultant(a, b);
  if (!g.zero() && sgn(g.lead()) < 0) g = -g;
  return g;
}

}  // namespace biratio

#endif  // BIRATIO_UPOLY_HPP
