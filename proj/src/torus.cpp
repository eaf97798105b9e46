#include "twistsub/torus.hpp"

#include <numeric>
#include <stdexcept>

namespace twistsub::torus {

namespace {

std::int64_t checked(const BigInt& x) {
  if (!x.fits_slong_p()) {
    throw std::overflow_error("torus curve coordinate exceeds 64 bits");
  }
  return x.get_si();
}

BigInt det(const CurveClass& u, const CurveClass& v) {
  return BigInt(u.p()) * BigInt(v.q()) - BigInt(u.q()) * BigInt(v.p());
}

}  // namespace

CurveClass::CurveClass(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("curve vector (" + std::to_string(p) + ", " +
                                std::to_string(q) + ") is not primitive");
  }
  if (p_ < 0 || (p_ == 0 && q_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string CurveClass::to_string() const {
  return "(" + std::to_string(p_) + ", " + std::to_string(q_) + ")";
}

std::uint64_t intersection(const CurveClass& u, const CurveClass& v) {
  const BigInt d = abs(det(u, v));
  if (!d.fits_ulong_p()) {
    throw std::overflow_error("intersection number exceeds 64 bits");
  }
  return d.get_ui();
}

CurveClass twist_action(const CurveClass& v, const CurveClass& w,
                        std::int64_t n) {
  const BigInt scale = BigInt(n) * det(v, w);
  return CurveClass(checked(w.p() + scale * v.p()),
                    checked(w.q() + scale * v.q()));
}

IntMat2 twist_matrix(const CurveClass& v) {
  // Column j is e_j + det(v, e_j) v, with det(v, e1) = -q and det(v, e2) = p.
  const BigInt p(v.p());
  const BigInt q(v.q());
  return {BigInt(1 - p * q), BigInt(p * p), BigInt(-q * q), BigInt(1 + p * q)};
}

CurveClass apply(const IntMat2& m, const CurveClass& v) {
  return CurveClass(checked(m(0, 0) * v.p() + m(0, 1) * v.q()),
                    checked(m(1, 0) * v.p() + m(1, 1) * v.q()));
}

}  // namespace twistsub::torus
