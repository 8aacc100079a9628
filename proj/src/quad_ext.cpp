#include "biratio/quad_ext.hpp"

#include <cmath>

namespace biratio {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

/// Largest s with s^2 | n, by trial division; fine for the radicands this
/// library meets (d^2 + 1 with d ~ 10^4 has ~9 digits).
std::pair<Integer, Integer> split_square(Integer n) {
  Integer outside = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      outside *= p;
    }
  }
  return {outside, n};
}

}  // namespace

QuadExt::QuadExt(Integer d, Rational a, Rational b) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
  if (d_ < 1) throw Error(ErrorKind::MixedField, "radicand must be positive");
  if (is_perfect_square(d_)) {
    a_ += b_ * Rational(isqrt(d_));
    b_ = 0;
    d_ = 1;
  }
}

QuadExt QuadExt::sqrt_of(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::MixedField, "sqrt of a negative integer");
  auto [outside, core] = split_square(n);
  if (core == 1) return QuadExt(Rational(outside));
  return QuadExt(core, Rational(0), Rational(outside));
}

void QuadExt::adopt_field(const QuadExt& o) {
  if (o.is_rational()) return;
  if (is_rational()) {
    d_ = o.d_;
    return;
  }
  if (d_ != o.d_)
    throw Error(ErrorKind::MixedField, "Q(sqrt(" + d_.get_str() + ")) vs Q(sqrt(" + o.d_.get_str() + "))");
}

int QuadExt::sign() const {
  int sa = sign_of(a_);
  int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D.
  int c = cmp(a_ * a_, b_ * b_ * d_);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw Error(ErrorKind::ZeroDenominator, "inverse of 0 in a quadratic field");
  return QuadExt(d_, a_ / n, -b_ / n);
}

double QuadExt::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

std::pair<Rational, Rational> QuadExt::enclosure(unsigned digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits + 4);
  // floor(sqrt(D) * scale) <= sqrt(D) * scale < that + 1
  Integer root = isqrt(d_ * scale * scale);
  Rational lo_root(root, scale), hi_root(root + 1, scale);
  Rational lo = a_, hi = a_;
  if (sgn(b_) >= 0) {
    lo += b_ * lo_root;
    hi += b_ * hi_root;
  } else {
    lo += b_ * hi_root;
    hi += b_ * lo_root;
  }
  // Widen outward to `digits` places.
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, digits);
  Integer l, h;
  Rational ls = lo * out, hs = hi * out;
  mpz_fdiv_q(l.get_mpz_t(), ls.get_num_mpz_t(), ls.get_den_mpz_t());
  mpz_cdiv_q(h.get_mpz_t(), hs.get_num_mpz_t(), hs.get_den_mpz_t());
  return {make_rational(l, out), make_rational(h, out)};
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt_field(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d_;
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  return *this;
}

bool operator==(const QuadExt& u, const QuadExt& v) { return quad_cmp(u, v) == 0; }

std::strong_ordering operator<=>(const QuadExt& u, const QuadExt& v) { return quad_cmp(u, v); }

std::strong_ordering quad_cmp(const QuadExt& u, const QuadExt& v) {
  int s = (u - v).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const QuadExt& q) {
  if (q.is_rational()) return to_string(q.rational_part());
  return to_string(q.rational_part()) + "+" + to_string(q.surd_part()) + "*sqrt(" + q.radicand().get_str() + ")";
}

std::string to_decimal(const Rational& q, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Rational s = abs(q) * scale;
  Integer t;
  mpz_tdiv_q(t.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  std::string body = t.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (sgn(q) < 0 ? "-" : "") + body;
}

}  // namespace biratio
