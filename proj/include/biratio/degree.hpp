#ifndef BIRATIO_DEGREE_HPP
#define BIRATIO_DEGREE_HPP

#include <string>
#include <utility>

#include "biratio/quad_ext.hpp"
#include "biratio/surface_map.hpp"

namespace biratio {

/// Class h*H + v*V with h, v > 0.
struct AmpleClass {
  QuadExt h;
  QuadExt v;

  AmpleClass(QuadExt h_coeff, QuadExt v_coeff);
};

/// H.H = V.V = 0, H.V = 1.
QuadExt intersection(const QuadExt& a_h, const QuadExt& a_v, const QuadExt& b_h, const QuadExt& b_v);
QuadExt self_intersection(const AmpleClass& L);

/// (M L)^T J L with J the intersection form.
QuadExt deg_ample(const BidegreeMatrix& m, const AmpleClass& L);
QuadExt deg_ample(const SurfaceMap& f, const AmpleClass& L);

/// 8 * 3^36, the square of the constant C = 2^(3/2) 3^18.
Integer xie_constant_squared();

enum class XieStatus { Certified, Inconclusive };

struct XieVerdict {
  XieStatus status = XieStatus::Inconclusive;
  QuadExt deg_f;
  QuadExt deg_f2;
  /// deg_L(f^2) / deg_L(f); the certified bound is ratio / C.
  QuadExt ratio;
  /// Enclosure of ratio / C, valid whether or not it exceeds 1.
  std::pair<Rational, Rational> bound_enclosure;
  /// How (f^2)* = (f*)^2 was justified when matrices stand in for maps.
  std::string stability;
};

/// Compares deg_L(f^2) with C deg_L(f) exactly; composes f with itself.
XieVerdict xie_lower_bound(const SurfaceMap& f, const AmpleClass& L);

/// Same test from the matrices of f and f^2 only.
XieVerdict xie_from_matrices(const BidegreeMatrix& mf, const BidegreeMatrix& mf2, const AmpleClass& L,
                             std::string stability);

/// Rigorous [lo, hi] around sqrt(q), q >= 0, with `digits` fractional digits.
std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, unsigned digits);

/// "ratio/(2^(3/2)*3^18)" with ratio printed exactly.
std::string exact_bound_string(const XieVerdict& v);

}  // namespace biratio

#endif  // BIRATIO_DEGREE_HPP
