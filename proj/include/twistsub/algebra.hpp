#ifndef TWISTSUB_ALGEBRA_HPP_
#define TWISTSUB_ALGEBRA_HPP_

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistsub {

using BigInt = mpz_class;

class NotInvertibleError : public std::domain_error {
 public:
  explicit NotInvertibleError(const std::string& ring)
      : std::domain_error("matrix is not invertible over " + ring) {}
};

// ---------------------------------------------------------------------------
// Integer Laurent polynomials in one variable t.

class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(BigInt coefficient, std::int64_t exponent);
  static LaurentPoly t(std::int64_t exponent = 1) {
    return monomial(1, exponent);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t exponent) const;

  /// If this is a unit of Z[t, t^-1] (that is, +-t^n), its inverse.
  std::optional<LaurentPoly> unit_inverse() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) {
    return p += q;
  }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) {
    return p -= q;
  }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.terms_ == q.terms_;
  }

  /// Highest exponent first, e.g. "-t^2 + 3t - 1 + t^-1"; zero is "0".
  std::string to_string() const;

 private:
  void add_term(std::int64_t exponent, const BigInt& coefficient);

  Terms terms_;  // never stores a zero coefficient
};

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

// ---------------------------------------------------------------------------
// 2x2 matrices over a commutative ring.

std::optional<BigInt> unit_inverse(const BigInt& x);
inline std::optional<LaurentPoly> unit_inverse(const LaurentPoly& x) {
  return x.unit_inverse();
}

std::string to_string(const BigInt& x);
inline std::string to_string(const LaurentPoly& x) { return x.to_string(); }

template <typename Ring>
struct RingName;
template <>
struct RingName<BigInt> {
  static constexpr const char* value = "Z";
};
template <>
struct RingName<LaurentPoly> {
  static constexpr const char* value = "Z[t, t^-1]";
};

/// Row-major 2x2 matrix: [[e(0,0), e(0,1)], [e(1,0), e(1,1)]].
template <typename Ring>
class Mat2 {
 public:
  Mat2() : entries_{Ring(0), Ring(0), Ring(0), Ring(0)} {}
  Mat2(Ring a, Ring b, Ring c, Ring d)
      : entries_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 identity() { return {Ring(1), Ring(0), Ring(0), Ring(1)}; }
  static Mat2 scalar(const Ring& s) { return {s, Ring(0), Ring(0), s}; }

  const Ring& operator()(int row, int col) const {
    return entries_[2 * row + col];
  }

  Ring det() const {
    return entries_[0] * entries_[3] - entries_[1] * entries_[2];
  }
  Ring trace() const { return entries_[0] + entries_[3]; }

  Mat2 inverse() const {
    auto inv = unit_inverse(det());
    if (!inv) throw NotInvertibleError(RingName<Ring>::value);
    const Ring& s = *inv;
    return {s * entries_[3], -(s * entries_[1]), -(s * entries_[2]),
            s * entries_[0]};
  }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    const auto& e = x.entries_;
    const auto& f = y.entries_;
    return {e[0] * f[0] + e[1] * f[2], e[0] * f[1] + e[1] * f[3],
            e[2] * f[0] + e[3] * f[2], e[2] * f[1] + e[3] * f[3]};
  }
  Mat2& operator*=(const Mat2& y) { return *this = *this * y; }
  Mat2 operator-() const {
    return {-entries_[0], -entries_[1], -entries_[2], -entries_[3]};
  }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    for (int i = 0; i < 4; ++i) {
      if (!(x.entries_[i] == y.entries_[i])) return false;
    }
    return true;
  }

  /// "[[a, b], [c, d]]"
  std::string to_string() const {
    using twistsub::to_string;
    return "[[" + to_string(entries_[0]) + ", " + to_string(entries_[1]) +
           "], [" + to_string(entries_[2]) + ", " + to_string(entries_[3]) +
           "]]";
  }

 private:
  std::array<Ring, 4> entries_;
};

using IntMat2 = Mat2<BigInt>;
using LaurentMat2 = Mat2<LaurentPoly>;

template <typename Ring>
Mat2<Ring> mat_mul(const Mat2<Ring>& x, const Mat2<Ring>& y) {
  return x * y;
}
template <typename Ring>
Mat2<Ring> mat_inv(const Mat2<Ring>& m) {
  return m.inverse();
}
template <typename Ring>
Ring mat_det(const Mat2<Ring>& m) {
  return m.det();
}

/// Binary powering; negative exponents go through the inverse.
template <typename Ring>
Mat2<Ring> mat_pow(Mat2<Ring> base, std::int64_t n) {
  if (n < 0) {
    base = base.inverse();
    n = -n;
  }
  auto result = Mat2<Ring>::identity();
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Indices that may be infinite.

class Index {
 public:
  static Index finite(std::uint64_t n) { return Index(n); }
  static Index infinite() { return Index(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: is_finite().
  std::uint64_t value() const { return *value_; }

  /// Decimal value or "Infinite".
  std::string to_string() const;

  friend bool operator==(const Index&, const Index&) = default;

 private:
  Index() = default;
  explicit Index(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

using IntVec2 = std::pair<std::int64_t, std::int64_t>;

/// Index in Z^2 of the lattice spanned by v1 and v2: |det(v1, v2)|, or
/// Infinite when the two vectors are linearly dependent.
Index lattice_index(IntVec2 v1, IntVec2 v2);

}  // namespace twistsub

#endif  // TWISTSUB_ALGEBRA_HPP_
