#ifndef BIRATIO_SURFACE_MAP_HPP
#define BIRATIO_SURFACE_MAP_HPP

#include <memory>
#include <string>
#include <vector>

#include "biratio/bidegree.hpp"
#include "biratio/bihom.hpp"

namespace biratio {

using MapCoordinate = BiHomPair<Rational>;

/// Birational self-map of P1 x P1 with rational coefficients (so it
/// preserves the real structure), held as two cleared coordinate pairs. An
/// explicit inverse may ride along; copies share it.
class SurfaceMap {
 public:
  SurfaceMap(MapCoordinate first, MapCoordinate second);

  static SurfaceMap identity();
  static SurfaceMap swap();
  /// (num1/den1, num2/den2) given as affine polynomials.
  static SurfaceMap from_fractions(const BiPoly<Rational>& num1, const BiPoly<Rational>& den1,
                                   const BiPoly<Rational>& num2, const BiPoly<Rational>& den2);

  const MapCoordinate& first() const { return coords_[0]; }
  const MapCoordinate& second() const { return coords_[1]; }
  const MapCoordinate& coordinate(int i) const { return coords_[i]; }

  bool has_inverse() const { return static_cast<bool>(inverse_); }
  /// Throws MissingInverse when none was attached.
  const SurfaceMap& inverse() const;
  /// Copy of this map carrying `inv` as its inverse; `inv` in turn points
  /// back at this map.
  SurfaceMap with_inverse(const SurfaceMap& inv) const;
  SurfaceMap without_inverse() const;

  /// Degree in (x0,x1) and (y0,y1) of the largest coordinate form.
  int max_degree() const;

  friend bool operator==(const SurfaceMap& a, const SurfaceMap& b) {
    return a.coords_[0] == b.coords_[0] && a.coords_[1] == b.coords_[1];
  }
  friend bool operator!=(const SurfaceMap& a, const SurfaceMap& b) { return !(a == b); }

 private:
  MapCoordinate coords_[2];
  std::shared_ptr<const SurfaceMap> inverse_;
};

/// f o g with all common factors cleared. When both carry inverses the
/// result carries g^-1 o f^-1.
SurfaceMap compose(const SurfaceMap& f, const SurfaceMap& g);

BidegreeMatrix bidegree_matrix(const SurfaceMap& f);

bool is_identity(const SurfaceMap& f);

/// "(expr1, expr2)" in the syntax accepted by parse_map.
std::string to_string(const SurfaceMap& f);

/// Cap on the largest predicted coordinate degree of a symbolic composition,
/// read from BIRATIO_MAX_DEGREE (default 512).
int max_symbolic_degree();

/// f, f^2, ..., f^N by explicit composition, with the growth estimate
/// ||M_N||^(1/N) in the Frobenius norm.
struct DegreeSequence {
  std::vector<BidegreeMatrix> matrices;
  double growth_estimate = 0.0;
};
DegreeSequence degree_sequence(const SurfaceMap& f, int iterations);

}  // namespace biratio

#endif  // BIRATIO_SURFACE_MAP_HPP
