#ifndef BIRATIO_BIPOLY_HPP
#define BIRATIO_BIPOLY_HPP

#include <complex>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "biratio/errors.hpp"
#include "biratio/gauss_rational.hpp"
#include "biratio/rational.hpp"
#include "biratio/upoly.hpp"

namespace biratio {

enum class Var { x, y };

/// Converts an exact scalar into T (double, complex<double>, GaussRational...).
template <typename T, typename S>
T scalar_cast(const S& s) {
  if constexpr (std::is_same_v<S, T>) {
    return s;
  } else if constexpr (std::is_same_v<S, Rational>) {
    if constexpr (std::is_same_v<T, double>) return s.get_d();
    else if constexpr (std::is_same_v<T, std::complex<double>>) return {s.get_d(), 0.0};
    else if constexpr (std::is_same_v<T, std::complex<long double>>)
      return {static_cast<long double>(s.get_d()), 0.0L};
    else return T(s);
  } else if constexpr (std::is_same_v<S, GaussRational>) {
    if constexpr (std::is_same_v<T, std::complex<double>>) return s.to_complex();
    else return T(s);
  } else {
    return T(s);
  }
}

/// Sparse polynomial in x and y over Q or Q(i); zero terms are never stored.
template <typename S>
class BiPoly {
 public:
  using scalar_type = S;
  using Monomial = std::pair<int, int>;  // (x exponent, y exponent)
  using Terms = std::map<Monomial, S>;
  using InX = UPoly<UPoly<S>>;  // Q[y][x]

  BiPoly() = default;
  explicit BiPoly(S constant) {
    if (!is_zero(constant)) t_.emplace(Monomial{0, 0}, std::move(constant));
  }

  static BiPoly monomial(S c, int i, int j) {
    BiPoly p;
    if (!is_zero(c)) p.t_.emplace(Monomial{i, j}, std::move(c));
    return p;
  }
  static BiPoly x() { return monomial(S(1), 1, 0); }
  static BiPoly y() { return monomial(S(1), 0, 1); }

  const Terms& terms() const { return t_; }
  bool zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  S coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? S() : it->second;
  }

  /// -1 for the zero polynomial.
  int deg_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.second);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
    return d;
  }

  /// Graded lex with x > y: highest total degree, ties broken by x exponent.
  Monomial leading_monomial() const {
    Monomial best{-1, -1};
    for (const auto& [m, c] : t_) {
      int tm = m.first + m.second, tb = best.first + best.second;
      if (tm > tb || (tm == tb && m.first > best.first)) best = m;
    }
    return best;
  }
  const S& leading_coeff() const { return t_.at(leading_monomial()); }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  BiPoly& operator*=(const S& s) {
    if (is_zero(s)) {
      t_.clear();
      return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) {
    for (auto& [m, c] : a.t_) c = -c;
    return a;
  }
  friend BiPoly operator*(BiPoly a, const S& s) { return a *= s; }
  friend BiPoly operator*(const S& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) out.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  template <typename T>
  T operator()(const T& x, const T& y) const {
    T acc{};
    for (const auto& [m, c] : t_) acc = acc + scalar_cast<T>(c) * ipow(x, m.first) * ipow(y, m.second);
    return acc;
  }

  BiPoly swapped() const {
    BiPoly out;
    for (const auto& [m, c] : t_) out.t_.emplace(Monomial{m.second, m.first}, c);
    return out;
  }

  BiPoly derivative(Var v) const {
    BiPoly out;
    for (const auto& [m, c] : t_) {
      int e = v == Var::x ? m.first : m.second;
      if (e == 0) continue;
      Monomial n = v == Var::x ? Monomial{m.first - 1, m.second} : Monomial{m.first, m.second - 1};
      out.add_term(n, c * S(e));
    }
    return out;
  }

  /// Recursive view with `v` as the main variable.
  InX recursive(Var v) const {
    int n = v == Var::x ? deg_x() : deg_y();
    if (n < 0) return {};
    std::vector<std::vector<S>> rows(n + 1);
    for (const auto& [m, c] : t_) {
      int outer = v == Var::x ? m.first : m.second;
      int inner = v == Var::x ? m.second : m.first;
      auto& row = rows[outer];
      if (static_cast<int>(row.size()) <= inner) row.resize(inner + 1);
      row[inner] = c;
    }
    std::vector<UPoly<S>> coeffs;
    coeffs.reserve(rows.size());
    for (auto& r : rows) coeffs.emplace_back(std::move(r));
    return InX(std::move(coeffs));
  }

  static BiPoly from_recursive(const InX& p, Var v) {
    BiPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
      const auto& inner = p.coeffs()[i];
      for (int j = 0; j <= inner.degree(); ++j) {
        if (is_zero(inner.coeffs()[j])) continue;
        Monomial m = v == Var::x ? Monomial{i, j} : Monomial{j, i};
        out.t_.emplace(m, inner.coeffs()[j]);
      }
    }
    return out;
  }

  /// Univariate polynomial in `v`; the other variable must not occur.
  static BiPoly from_univariate(const UPoly<S>& p, Var v) {
    BiPoly out;
    for (int i = 0; i <= p.degree(); ++i)
      if (!is_zero(p.coeffs()[i])) out.t_.emplace(v == Var::x ? Monomial{i, 0} : Monomial{0, i}, p.coeffs()[i]);
    return out;
  }
  UPoly<S> univariate(Var v) const {
    int n = v == Var::x ? deg_x() : deg_y();
    std::vector<S> c(std::max(n + 1, 0));
    for (const auto& [m, s] : t_) {
      if ((v == Var::x ? m.second : m.first) != 0)
        throw Error(ErrorKind::PositiveDimensionalLocus, "polynomial is not univariate");
      c[v == Var::x ? m.first : m.second] = s;
    }
    return UPoly<S>(std::move(c));
  }

  /// Substitutes a value for one variable, leaving a polynomial in the other.
  UPoly<S> specialize(Var v, const S& value) const {
    Var other = v == Var::x ? Var::y : Var::x;
    auto rec = recursive(other);
    std::vector<S> c;
    c.reserve(rec.coeffs().size());
    for (const auto& inner : rec.coeffs()) c.push_back(inner(value));
    return UPoly<S>(std::move(c));
  }

 private:
  template <typename T>
  static T ipow(const T& b, int e) {
    T acc = scalar_cast<T>(S(1));
    for (int i = 0; i < e; ++i) acc = acc * b;
    return acc;
  }

  void add_term(const Monomial& m, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }

  Terms t_;
};

template <typename S>
bool is_zero(const BiPoly<S>& p) {
  return p.zero();
}

template <typename S>
BiPoly<S> pow(const BiPoly<S>& base, unsigned e) {
  BiPoly<S> acc(S(1)), b = base;
  while (e) {
    if (e & 1u) acc = acc * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return acc;
}

/// Unit that brings `lead_of` into canonical form: over Q the factor making
/// the union of coefficients of `polys` coprime integers with a positive
/// leading coefficient of `lead_of`; over Q(i) the inverse leading coefficient.
template <typename S>
S canonical_unit(const std::vector<const BiPoly<S>*>& polys, const BiPoly<S>& lead_of) {
  if (lead_of.zero()) return S(1);
  if constexpr (std::is_same_v<S, Rational>) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto* p : polys)
      for (const auto& [m, c] : p->terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      }
    Rational unit(den_lcm, num_gcd);
    unit.canonicalize();
    if (sgn(lead_of.leading_coeff()) < 0) unit = -unit;
    return unit;
  } else {
    return S(1) / lead_of.leading_coeff();
  }
}

/// Content-primitive normal form with positive graded-lex leading
/// coefficient (monic over Q(i)).
template <typename S>
BiPoly<S> normalize(const BiPoly<S>& p) {
  return p * canonical_unit<S>({&p}, p);
}

/// a / b, which must be exact.
template <typename S>
BiPoly<S> divexact(const BiPoly<S>& a, const BiPoly<S>& b) {
  if (b.zero()) throw Error(ErrorKind::ZeroDenominator, "bivariate division by zero");
  if (a.zero()) return a;
  auto q = divexact(a.recursive(Var::x), b.recursive(Var::x));
  return BiPoly<S>::from_recursive(q, Var::x);
}

namespace detail {

/// Certifies that gcd(p, q) is constant from two univariate specializations,
/// chosen where a leading coefficient of p stays nonzero. Returns false when
/// no certificate was found (the gcd may or may not be trivial).
template <typename S>
bool coprime_by_specialization(const BiPoly<S>& p, const BiPoly<S>& q) {
  for (Var v : {Var::x, Var::y}) {
    Var other = v == Var::x ? Var::y : Var::x;
    auto lc = p.recursive(v).lead();  // polynomial in `other`
    bool certified = false;
    for (int k = 0; k < 6 && !certified; ++k) {
      S at = S(k * 7 + 3);
      if (is_zero(lc(at))) continue;
      auto g = gcd_field(p.specialize(other, at), q.specialize(other, at));
      certified = g.degree() == 0;
      if (!certified) break;  // a shared root along this slice; fall back
    }
    if (!certified) return false;
  }
  return true;
}

}  // namespace detail

/// Greatest common divisor in normal form; gcd(p, 0) = normalize(p).
template <typename S>
BiPoly<S> gcd(const BiPoly<S>& p, const BiPoly<S>& q) {
  if (p.zero()) return normalize(q);
  if (q.zero()) return normalize(p);
  if (p.total_degree() == 0 || q.total_degree() == 0) return BiPoly<S>(S(1));
  if (detail::coprime_by_specialization(p, q)) return BiPoly<S>(S(1));
  auto g = gcd_subresultant(p.recursive(Var::x), q.recursive(Var::x));
  return normalize(BiPoly<S>::from_recursive(g, Var::x));
}

/// Resultant eliminating `v`; a polynomial in the other variable.
template <typename S>
BiPoly<S> resultant(const BiPoly<S>& p, const BiPoly<S>& q, Var v) {
  if (p.zero() && q.zero()) throw Error(ErrorKind::BothZero, "resultant of two zero polynomials");
  if (p.zero() || q.zero()) return {};
  UPoly<S> r = resultant(p.recursive(v), q.recursive(v));
  return BiPoly<S>::from_univariate(r, v == Var::x ? Var::y : Var::x);
}

/// Readable print: "3*x^2*y - x + 1/2". The grammar of the expression parser
/// accepts it back.
template <typename S>
std::string to_string(const BiPoly<S>& p) {
  if (p.zero()) return "0";
  // Descending graded lex.
  std::vector<std::pair<typename BiPoly<S>::Monomial, S>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta > tb;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    S mag = c;
    bool negative = false;
    if constexpr (std::is_same_v<S, Rational>) {
      negative = sgn(c) < 0;
      if (negative) mag = -c;
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    var("x", m.first);
    var("y", m.second);
    if (factors.empty()) out += to_string(mag);
    else if (is_one(mag)) out += factors;
    else out += to_string(mag) + "*" + factors;
  }
  return out;
}

}  // namespace biratio

#endif  // BIRATIO_BIPOLY_HPP
