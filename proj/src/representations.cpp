#include "twistsub/representations.hpp"

#include <stdexcept>

namespace twistsub {

namespace {

const IntMat2& sl2_generator(Letter l) {
  static const IntMat2 a{1, 1, 0, 1};
  static const IntMat2 a_inv = a.inverse();
  static const IntMat2 b{1, 0, -1, 1};
  static const IntMat2 b_inv = b.inverse();
  if (l.gen == Gen::A) return l.sign > 0 ? a : a_inv;
  return l.sign > 0 ? b : b_inv;
}

const LaurentMat2& burau_generator(Letter l) {
  static const LaurentMat2 a{-LaurentPoly::t(), 1, 0, 1};
  static const LaurentMat2 a_inv = a.inverse();
  static const LaurentMat2 b{1, 0, LaurentPoly::t(), -LaurentPoly::t()};
  static const LaurentMat2 b_inv = b.inverse();
  if (l.gen == Gen::A) return l.sign > 0 ? a : a_inv;
  return l.sign > 0 ? b : b_inv;
}

// Largest order of a torsion element of SL2(Z).
constexpr std::int64_t kMaxFiniteOrderSL2 = 12;

}  // namespace

SurfaceContext::SurfaceContext(std::uint64_t intersection, bool is_torus)
    : intersection_(intersection), is_torus_(is_torus) {
  if (is_torus && intersection == 0) {
    throw std::invalid_argument(
        "distinct curve classes on the torus always intersect");
  }
}

Oracle oracle_for(const SurfaceContext& ctx) {
  switch (ctx.intersection()) {
    case 0: return Oracle::ExponentVector;
    case 1: return ctx.is_torus() ? Oracle::SL2Z : Oracle::Burau;
    default: return Oracle::FreeReduction;
  }
}

std::string to_string(Oracle oracle) {
  switch (oracle) {
    case Oracle::ExponentVector: return "exponent-vector";
    case Oracle::SL2Z: return "sl2z";
    case Oracle::Burau: return "burau";
    case Oracle::FreeReduction: return "free-reduction";
  }
  return "?";
}

IntMat2 eval_sl2(const TwistWord& w) {
  auto m = IntMat2::identity();
  for (Letter l : w) m *= sl2_generator(l);
  return m;
}

LaurentMat2 eval_burau(const TwistWord& w) {
  auto m = LaurentMat2::identity();
  for (Letter l : w) m *= burau_generator(l);
  return m;
}

IntVec2 exponent_vector(const TwistWord& w) { return exponent_sums(w); }

bool equal_in_context(const TwistWord& w1, const TwistWord& w2,
                      const SurfaceContext& ctx) {
  switch (oracle_for(ctx)) {
    case Oracle::ExponentVector:
      return exponent_vector(w1) == exponent_vector(w2);
    case Oracle::SL2Z:
      return eval_sl2(w1) == eval_sl2(w2);
    case Oracle::Burau:
      return eval_burau(w1) == eval_burau(w2);
    case Oracle::FreeReduction:
      return free_reduce(w1) == free_reduce(w2);
  }
  return false;
}

bool is_trivial(const TwistWord& w, const SurfaceContext& ctx) {
  return equal_in_context(w, TwistWord{}, ctx);
}

Index order_of(const TwistWord& w, const SurfaceContext& ctx) {
  if (oracle_for(ctx) == Oracle::SL2Z) {
    const IntMat2 m = eval_sl2(w);
    auto power = m;
    for (std::int64_t n = 1; n <= kMaxFiniteOrderSL2; ++n) {
      if (power == IntMat2::identity()) return Index::finite(n);
      power *= m;
    }
    return Index::infinite();
  }
  // Z^2, B_3 and F_2 are torsion free.
  return is_trivial(w, ctx) ? Index::finite(1) : Index::infinite();
}

}  // namespace twistsub
