#ifndef BIRATIO_BIDEGREE_HPP
#define BIRATIO_BIDEGREE_HPP

#include <Eigen/Core>
#include <string>

#include "biratio/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace biratio {

/// Matrix of f* on H^2(P1 x P1; Z) in the basis (H, V): row i holds the
/// bidegree (degree in x, degree in y) of coordinate i.
using BidegreeMatrix = Eigen::Matrix<Integer, 2, 2>;

inline BidegreeMatrix make_bidegree(long m11, long m12, long m21, long m22) {
  BidegreeMatrix m;
  m << Integer(m11), Integer(m12), Integer(m21), Integer(m22);
  return m;
}

inline BidegreeMatrix matrix_power(const BidegreeMatrix& a, unsigned k) {
  BidegreeMatrix acc = BidegreeMatrix::Identity(), b = a;
  while (k) {
    if (k & 1u) acc = (acc * b).eval();
    k >>= 1u;
    if (k) b = (b * b).eval();
  }
  return acc;
}

/// "[[a,b],[c,d]]"
inline std::string to_string(const BidegreeMatrix& m) {
  return "[[" + m(0, 0).get_str() + "," + m(0, 1).get_str() + "],[" + m(1, 0).get_str() + "," +
         m(1, 1).get_str() + "]]";
}

}  // namespace biratio

#endif  // BIRATIO_BIDEGREE_HPP
