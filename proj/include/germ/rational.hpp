#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <string>

namespace germ {

/// Exact coefficient type. gmpxx keeps results of arithmetic in lowest terms.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double d) { return d == 0.0; }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

/// "a" or "a/b".
inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace germ

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
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

namespace germ {

using RationalMatrix3 = Eigen::Matrix<Rational, 3, 3>;
using RationalMatrix2 = Eigen::Matrix<Rational, 2, 2>;

}  // namespace germ
