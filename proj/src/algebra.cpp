#include "twistsub/algebra.hpp"

#include <cstdlib>

namespace twistsub {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, std::int64_t exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [exponent, coeff] = *terms_.begin();
  if (coeff != 1 && coeff != -1) return std::nullopt;
  return monomial(coeff, -exponent);
}

void LaurentPoly::add_term(std::int64_t exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly out;
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) {
      out.add_term(e1 + e2, BigInt(c1 * c2));
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    BigInt magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly laurent_add(const LaurentPoly& p, const LaurentPoly& q) {
  return p + q;
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) {
  return p * q;
}

std::optional<BigInt> unit_inverse(const BigInt& x) {
  if (x == 1 || x == -1) return x;
  return std::nullopt;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string Index::to_string() const {
  return value_ ? std::to_string(*value_) : "Infinite";
}

Index lattice_index(IntVec2 v1, IntVec2 v2) {
  const BigInt det = BigInt(v1.first) * BigInt(v2.second) -
                     BigInt(v1.second) * BigInt(v2.first);
  if (det == 0) return Index::infinite();
  const BigInt magnitude = abs(det);
  if (!magnitude.fits_ulong_p()) {
    throw std::overflow_error("lattice index exceeds 64 bits");
  }
  return Index::finite(magnitude.get_ui());
}

}  // namespace twistsub
