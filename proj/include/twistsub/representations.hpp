#ifndef TWISTSUB_REPRESENTATIONS_HPP_
#define TWISTSUB_REPRESENTATIONS_HPP_

#include <cstdint>
#include <string>

#include "twistsub/algebra.hpp"
#include "twistsub/word.hpp"

namespace twistsub {

/// The data that pins down the group <T_a, T_b>: the intersection number
/// i(a, b) and whether the surface is the closed torus. The two curve
/// classes are always assumed distinct.
class SurfaceContext {
 public:
  /// Throws std::invalid_argument for a torus with intersection 0 (distinct
  /// disjoint classes do not exist there).
  SurfaceContext(std::uint64_t intersection, bool is_torus = false);

  std::uint64_t intersection() const { return intersection_; }
  bool is_torus() const { return is_torus_; }

  friend bool operator==(const SurfaceContext&,
                         const SurfaceContext&) = default;

 private:
  std::uint64_t intersection_;
  bool is_torus_;
};

/// Which faithful model decides equality in a given context.
enum class Oracle : std::uint8_t {
  ExponentVector,  // i = 0: Z^2
  SL2Z,            // i = 1 on the torus
  Burau,           // i = 1 elsewhere: B_3
  FreeReduction,   // i >= 2: F_2
};

Oracle oracle_for(const SurfaceContext& ctx);
std::string to_string(Oracle oracle);

/// a -> [[1, 1], [0, 1]], b -> [[1, 0], [-1, 1]].
IntMat2 eval_sl2(const TwistWord& w);

/// Reduced Burau: a -> [[-t, 1], [0, 1]], b -> [[1, 0], [t, -t]].
LaurentMat2 eval_burau(const TwistWord& w);

IntVec2 exponent_vector(const TwistWord& w);

bool equal_in_context(const TwistWord& w1, const TwistWord& w2,
                      const SurfaceContext& ctx);

bool is_trivial(const TwistWord& w, const SurfaceContext& ctx);

/// Order of the element w in the group selected by ctx.
Index order_of(const TwistWord& w, const SurfaceContext& ctx);

}  // namespace twistsub

#endif  // TWISTSUB_REPRESENTATIONS_HPP_
