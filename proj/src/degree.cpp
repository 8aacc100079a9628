#include "biratio/degree.hpp"

namespace biratio {

namespace {

constexpr unsigned kEnclosureDigits = 30;

Integer pow10(unsigned k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
  return out;
}

}  // namespace

AmpleClass::AmpleClass(QuadExt h_coeff, QuadExt v_coeff) : h(std::move(h_coeff)), v(std::move(v_coeff)) {
  if (h.sign() <= 0 || v.sign() <= 0) throw Error(ErrorKind::Usage, "ample class needs positive coefficients");
}

QuadExt intersection(const QuadExt& a_h, const QuadExt& a_v, const QuadExt& b_h, const QuadExt& b_v) {
  return a_h * b_v + a_v * b_h;
}

QuadExt self_intersection(const AmpleClass& L) { return intersection(L.h, L.v, L.h, L.v); }

QuadExt deg_ample(const BidegreeMatrix& m, const AmpleClass& L) {
  QuadExt ml_h = QuadExt(Rational(m(0, 0))) * L.h + QuadExt(Rational(m(0, 1))) * L.v;
  QuadExt ml_v = QuadExt(Rational(m(1, 0))) * L.h + QuadExt(Rational(m(1, 1))) * L.v;
  return intersection(ml_h, ml_v, L.h, L.v);
}

QuadExt deg_ample(const SurfaceMap& f, const AmpleClass& L) { return deg_ample(bidegree_matrix(f), L); }

Integer xie_constant_squared() {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, 36);
  return 8 * p;
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, unsigned digits) {
  if (sgn(q) < 0) throw Error(ErrorKind::Usage, "square root of a negative number");
  Integer scale = pow10(digits);
  Rational scaled = q * Rational(scale * scale);
  Integer fl = scaled.get_num() / scaled.get_den();
  Integer ce = fl + (Rational(fl) == scaled ? 0 : 1);
  Integer lo = isqrt(fl);
  Integer hi = isqrt(ce);
  if (hi * hi < ce) hi += 1;
  return {make_rational(lo, scale), make_rational(hi, scale)};
}

XieVerdict xie_from_matrices(const BidegreeMatrix& mf, const BidegreeMatrix& mf2, const AmpleClass& L,
                             std::string stability) {
  XieVerdict out;
  out.stability = std::move(stability);
  out.deg_f = deg_ample(mf, L);
  out.deg_f2 = deg_ample(mf2, L);
  if (out.deg_f.sign() <= 0) throw Error(ErrorKind::DegenerateComposition, "deg_L(f) is not positive");
  out.ratio = out.deg_f2 / out.deg_f;
  const Rational c2(xie_constant_squared());
  // ratio > C  <=>  ratio > 0 and ratio^2 > C^2.
  QuadExt squared = out.ratio * out.ratio;
  bool exceeds = out.ratio.sign() > 0 && quad_cmp(squared, QuadExt(c2)) == std::strong_ordering::greater;
  out.status = exceeds ? XieStatus::Certified : XieStatus::Inconclusive;
  auto [lo2, hi2] = (squared / QuadExt(c2)).enclosure(2 * kEnclosureDigits);
  if (sgn(lo2) < 0) lo2 = 0;
  out.bound_enclosure = {sqrt_enclosure(lo2, kEnclosureDigits).first, sqrt_enclosure(hi2, kEnclosureDigits).second};
  return out;
}

XieVerdict xie_lower_bound(const SurfaceMap& f, const AmpleClass& L) {
  SurfaceMap f2 = compose(f.without_inverse(), f.without_inverse());
  return xie_from_matrices(bidegree_matrix(f), bidegree_matrix(f2), L, "explicit composition");
}

std::string exact_bound_string(const XieVerdict& v) { return "(" + to_string(v.ratio) + ")/(2^(3/2)*3^18)"; }

}  // namespace biratio
