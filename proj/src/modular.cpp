#include "biratio/modular.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace biratio {

namespace {


using u64 = std::uint64_t;
using Vec = std::vector<u64>;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1u) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1u;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec reduce(const UPoly<Integer>& a, u64 p) {
  Vec out;
  Integer pp(static_cast<unsigned long>(p));
  for (const auto& c : a.coeffs()) {
    Integer r = c % pp;
    if (r < 0) r += pp;
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

/// a mod b, in place; b nonzero.
void rem_mod(Vec& a, const Vec& b, u64 p) {
  const u64 inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 f = mul_mod(a.back(), inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - mul_mod(f, b[i], p)) % p;
    a.pop_back();
    trim(a);
  }
}

Vec monic_gcd_mod(Vec a, Vec b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = mul_mod(c, inv, p);
  return a;
}

/// Symmetric residue of x modulo m.
Integer symmetric(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

UPoly<Rational> to_rational(const UPoly<Integer>& a) {
  std::vector<Rational> c;
  for (const auto& z : a.coeffs()) c.emplace_back(z);
  return UPoly<Rational>(std::move(c));
}

bool divides(const UPoly<Integer>& d, const UPoly<Integer>& a) {
  if (a.zero()) return true;
  if (d.degree() > a.degree()) return false;
  return divrem(to_rational(a), to_rational(d)).second.zero();
}

u64 eval_mod(const Vec& a, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (mul_mod(acc, x, p) + *it) % p;
  return acc;
}

/// Res(a, b) over F_p for the actual degrees of a and b (both nonzero).
u64 resultant_mod(Vec a, Vec b, u64 p) {
  u64 acc = 1;
  while (true) {
    const std::size_t m = a.size() - 1, n = b.size() - 1;
    if (n == 0) return mul_mod(acc, pow_mod(b[0], m, p), p);
    if (m == 0) return mul_mod(acc, pow_mod(a[0], n, p), p);
    Vec r = a;
    rem_mod(r, b, p);
    if (r.empty()) return 0;
    // Res(a, b) = (-1)^(mn) lc(b)^(m - deg r) Res(b, r)
    acc = mul_mod(acc, pow_mod(b.back(), m - (r.size() - 1), p), p);
    if ((m * n) % 2 == 1) acc = (p - acc) % p;
    a = std::move(b);
    b = std::move(r);
  }
}

/// Lagrange interpolation through (xs[i], ys[i]) mod p.
Vec interpolate(const Vec& xs, const Vec& ys, u64 p) {
  const std::size_t n = xs.size();
  // master = prod (w - x_i)
  Vec master{1};
  for (u64 x : xs) {
    Vec next(master.size() + 1, 0);
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] = (next[i + 1] + master[i]) % p;
      next[i] = (next[i] + p - mul_mod(master[i], x, p)) % p;
    }
    master = std::move(next);
  }
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ys[i] == 0) continue;
    // master / (w - x_i) by synthetic division
    Vec quot(n, 0);
    u64 carry = 0;
    for (std::size_t k = n; k-- > 0;) {
      carry = (master[k + 1] + mul_mod(carry, xs[i], p)) % p;
      quot[k] = carry;
    }
    u64 denom = eval_mod(quot, xs[i], p);
    u64 scale = mul_mod(ys[i], inv_mod(denom, p), p);
    for (std::size_t k = 0; k < n; ++k) out[k] = (out[k] + mul_mod(quot[k], scale, p)) % p;
  }
  trim(out);
  return out;
}

using Recursive = std::vector<UPoly<Integer>>;

Integer one_norm(const Recursive& f) {
  Integer s = 0;
  for (const auto& inner : f)
    for (const auto& c : inner.coeffs()) s += abs(c);
  return s;
}


Recursive lift(const BiPoly<Rational>& f, Var v) {
  Integer l = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Recursive outer;
  const auto rec = f.recursive(v);
  for (const auto& inner : rec.coeffs()) {
    std::vector<Integer> cs;
    for (const auto& c : inner.coeffs()) cs.push_back(Rational(c * l).get_num());
    outer.emplace_back(std::move(cs));
  }
  return outer;
}

/// Degree bound of Res_v(P, Q) in w.
int resultant_degree_bound(const Recursive& P, const Recursive& Q) {
  const int m = static_cast<int>(P.size()) - 1, n = static_cast<int>(Q.size()) - 1;
  int dp = 0, dq = 0;
  for (const auto& c : P) dp = std::max(dp, c.degree());
  for (const auto& c : Q) dq = std::max(dq, c.degree());
  return n * dp + m * dq;
}

/// Image of Res_v(P, Q) modulo pr by evaluation and interpolation, padded to
/// bound_deg + 1 coefficients. Empty optional if a leading coefficient
/// vanishes identically mod pr.
std::optional<Vec> resultant_image(const Recursive& P, const Recursive& Q, int bound_deg, u64 pr) {
  std::vector<Vec> Pp, Qp;
  for (const auto& c : P) Pp.push_back(reduce(c, pr));
  for (const auto& c : Q) Qp.push_back(reduce(c, pr));
  if (Pp.back().empty() || Qp.back().empty()) return std::nullopt;
  Vec xs, ys;
  for (u64 w = 1; static_cast<int>(xs.size()) <= bound_deg; ++w) {
    u64 lp = eval_mod(Pp.back(), w, pr), lq = eval_mod(Qp.back(), w, pr);
    if (lp == 0 || lq == 0) continue;
    Vec a, b;
    for (const auto& c : Pp) a.push_back(eval_mod(c, w, pr));
    for (const auto& c : Qp) b.push_back(eval_mod(c, w, pr));
    xs.push_back(w);
    ys.push_back(resultant_mod(std::move(a), std::move(b), pr));
  }
  Vec image = interpolate(xs, ys, pr);
  return image;
}

/// log2 of the coefficient bound prod ||row||_1 of the Sylvester matrix.
double bound_bits(const Recursive& P, const Recursive& Q) {
  const double m = static_cast<double>(P.size()) - 1, n = static_cast<double>(Q.size()) - 1;
  auto bits = [](const Integer& z) { return static_cast<double>(mpz_sizeinbase(z.get_mpz_t(), 2)); };
  return n * bits(one_norm(P)) + m * bits(one_norm(Q)) + 1;
}

const char* const kPrimeStart = "4611686018427387847";  // just below 2^62

}  // namespace

UPoly<Integer> primitive_integer(const UPoly<Rational>& p) {
  if (p.zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c;
  for (const auto& q : p.coeffs()) c.push_back(Rational(q * l).get_num());
  UPoly<Integer> out(std::move(c));
  out = primitive_part(out);
  if (sgn(out.lead()) < 0) out = -out;
  return out;
}

UPoly<Rational> gcd_rational(const UPoly<Rational>& a, const UPoly<Rational>& b) {
  if (a.zero()) return monic(b);
  if (b.zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return UPoly<Rational>(Rational(1));
  UPoly<Integer> A = primitive_integer(a), B = primitive_integer(b);
  const Integer gamma = ring_gcd(A.lead(), B.lead());
  Integer prime(kPrimeStart);
  Integer modulus = 0;
  std::vector<Integer> acc;
  int best = std::min(A.degree(), B.degree()) + 1;
  UPoly<Integer> last;
  for (int round = 0; round < 10000; ++round) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    if (is_zero(Integer(gamma % prime))) continue;
    const u64 p = prime.get_ui();
    Vec ap = reduce(A, p), bp = reduce(B, p);
    if (static_cast<int>(ap.size()) - 1 != A.degree() || static_cast<int>(bp.size()) - 1 != B.degree()) continue;
    Vec g = monic_gcd_mod(ap, bp, p);
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg == 0) return UPoly<Rational>(Rational(1));
    if (deg > best) continue;  // unlucky prime
    const u64 gp = Integer(gamma % prime).get_ui();
    for (auto& c : g) c = mul_mod(c, gp, p);
    if (deg < best) {
      best = deg;
      modulus = prime;
      acc.assign(g.size(), Integer(0));
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = g[i];
      last = {};
      continue;
    }
    // Chinese remaindering coefficientwise.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), prime.get_mpz_t());
    for (std::size_t i = 0; i < g.size(); ++i) {
      Integer diff = (Integer(static_cast<unsigned long>(g[i])) - acc[i]) % prime;
      if (diff < 0) diff += prime;
      Integer t = (diff * inv) % prime;
      acc[i] += modulus * t;
    }
    modulus *= prime;
    std::vector<Integer> sym;
    for (const auto& c : acc) sym.push_back(symmetric(c, modulus));
    UPoly<Integer> candidate = primitive_part(UPoly<Integer>(std::move(sym)));
    if (candidate == last && divides(candidate, A) && divides(candidate, B)) return monic(to_rational(candidate));
    last = candidate;
  }
  return gcd_field(a, b);
}

UPoly<Rational> squarefree_rational(const UPoly<Rational>& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(divexact(p, gcd_rational(p, p.derivative())));
}

UPoly<Rational> resultant_up_to_unit(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Var v) {
  const Recursive P = lift(p, v), Q = lift(q, v);
  if (P.empty() || Q.empty()) return {};
  const int m = static_cast<int>(P.size()) - 1, n = static_cast<int>(Q.size()) - 1;
  if (m == 0 && n == 0) return UPoly<Rational>(Rational(1));
  const int bound_deg = resultant_degree_bound(P, Q);
  // ||Res||_1 <= prod over Sylvester rows of the row 1-norms.
  Integer bound = 1;
  {
    Integer np = one_norm(P), nq = one_norm(Q);
    for (int i = 0; i < n; ++i) bound *= np;
    for (int i = 0; i < m; ++i) bound *= nq;
  }
  const Integer needed = 2 * bound + 1;
  Integer prime(kPrimeStart);
  Integer modulus = 1;
  std::vector<Integer> acc(bound_deg + 1, Integer(0));
  while (modulus < needed) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    auto image = resultant_image(P, Q, bound_deg, prime.get_ui());
    if (!image) continue;
    image->resize(bound_deg + 1, 0);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), prime.get_mpz_t());
    for (int i = 0; i <= bound_deg; ++i) {
      Integer diff = (Integer(static_cast<unsigned long>((*image)[i])) - acc[i]) % prime;
      if (diff < 0) diff += prime;
      acc[i] += modulus * Integer((diff * inv) % prime);
    }
    modulus *= prime;
  }
  std::vector<Rational> out;
  for (const auto& c : acc) out.emplace_back(symmetric(c, modulus));
  return UPoly<Rational>(std::move(out));
}

double elimination_work(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Var v) {
  const Recursive P = lift(p, v), Q = lift(q, v);
  if (P.empty() || Q.empty()) return 0.0;
  const double m = static_cast<double>(P.size()) - 1, n = static_cast<double>(Q.size()) - 1;
  const double points = resultant_degree_bound(P, Q) + 1.0;
  const double primes = bound_bits(P, Q) / 62.0 + 1.0;
  return primes * points * ((m + n) * (m + n) + points);
}

ModularCertificate modular_disjointness(const BiPoly<Rational>& p1, const BiPoly<Rational>& q1,
                                        const BiPoly<Rational>& p2, const BiPoly<Rational>& q2) {
  ModularCertificate cert;
  Integer prime(kPrimeStart);
  for (int attempt = 0; attempt < 3; ++attempt) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 pr = prime.get_ui();
    for (Var v : {Var::y, Var::x}) {
      const Recursive P1 = lift(p1, v), Q1 = lift(q1, v), P2 = lift(p2, v), Q2 = lift(q2, v);
      if (P1.empty() || Q1.empty() || P2.empty() || Q2.empty()) continue;
      if (P1.size() == 1 && Q1.size() == 1) continue;
      if (P2.size() == 1 && Q2.size() == 1) continue;
      const int b1 = resultant_degree_bound(P1, Q1), b2 = resultant_degree_bound(P2, Q2);
      auto r1 = resultant_image(P1, Q1, b1, pr), r2 = resultant_image(P2, Q2, b2, pr);
      if (!r1 || !r2 || r1->empty() || r2->empty()) continue;
      // A common factor over Z that loses degree mod pr shows up as a root at
      // infinity of both forms.
      const bool both_drop = static_cast<int>(r1->size()) - 1 < b1 && static_cast<int>(r2->size()) - 1 < b2;
      if (both_drop || monic_gcd_mod(*r1, *r2, pr).size() != 1) continue;
      cert.certified = true;
      cert.detail = std::string("eliminants in ") + (v == Var::x ? "y" : "x") + " coprime mod " + std::to_string(pr);
      return cert;
    }
  }
  cert.detail = "eliminants share a factor modulo every trial prime";
  return cert;
}
}  // namespace biratio
