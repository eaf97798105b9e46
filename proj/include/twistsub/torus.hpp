#ifndef TWISTSUB_TORUS_HPP_
#define TWISTSUB_TORUS_HPP_

#include <cstdint>
#include <string>

#include "twistsub/algebra.hpp"

namespace twistsub::torus {

/// An unoriented essential simple closed curve on the torus: a primitive
/// integer vector up to sign. Stored with its first nonzero coordinate
/// positive.
class CurveClass {
 public:
  /// Throws std::invalid_argument unless gcd(|p|, |q|) = 1.
  CurveClass(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  IntVec2 vector() const { return {p_, q_}; }

  std::string to_string() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Geometric intersection number |det(u, v)|.
std::uint64_t intersection(const CurveClass& u, const CurveClass& v);

/// Image of w under the n-th power of the twist along v:
/// w + n * det(v, w) * v. Throws std::overflow_error past 64 bits.
CurveClass twist_action(const CurveClass& v, const CurveClass& w,
                        std::int64_t n);

/// Matrix of w -> w + det(v, w) * v acting on column vectors.
IntMat2 twist_matrix(const CurveClass& v);

/// Class of M * v for a matrix of determinant +-1.
CurveClass apply(const IntMat2& m, const CurveClass& v);

}  // namespace twistsub::torus

#endif  // TWISTSUB_TORUS_HPP_
