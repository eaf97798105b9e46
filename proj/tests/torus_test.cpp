#include <doctest.h>

#include <numeric>
#include <random>

#include "twistsub/representations.hpp"
#include "twistsub/torus.hpp"

using namespace twistsub;
using torus::CurveClass;

namespace {

CurveClass random_curve(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  while (true) {
    const auto p = c(rng);
    const auto q = c(rng);
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

TEST_CASE("curve classes are primitive and sign-canonical") {
  CHECK(CurveClass(-1, 0) == CurveClass(1, 0));
  CHECK(CurveClass(-2, 3) == CurveClass(2, -3));
  CHECK(CurveClass(0, -1).q() == 1);
  CHECK(CurveClass(-2, 3).p() == 2);
  CHECK_THROWS_AS(CurveClass(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(CurveClass(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(CurveClass(0, 3), std::invalid_argument);
}

TEST_CASE("intersection numbers") {
  CHECK(torus::intersection({1, 0}, {0, 1}) == 1);
  CHECK(torus::intersection({1, 0}, {1, 0}) == 0);
  CHECK(torus::intersection({1, 0}, {1, 2}) == 2);
  CHECK(torus::intersection({2, 3}, {3, 5}) == 1);
  CHECK(torus::intersection({3, 5}, {2, 3}) == 1);
}

TEST_CASE("twist action examples") {
  const CurveClass a{1, 0};
  const CurveClass b{0, 1};
  CHECK(torus::twist_action(a, b, 1) == CurveClass(1, 1));
  CHECK(torus::twist_action(a, b, 0) == b);
  CHECK(torus::intersection(torus::twist_action(a, b, 2), b) == 2);
  CHECK(torus::twist_action(a, b, -3) == CurveClass(-3, 1));
}

TEST_CASE("twist matrices") {
  CHECK(torus::twist_matrix({1, 0}) == IntMat2{1, 1, 0, 1});
  CHECK(torus::twist_matrix({0, 1}) == IntMat2{1, 0, -1, 1});
  CHECK(torus::twist_matrix({2, 3}).det() == 1);
  // Agrees with the SL2(Z) images of a and b.
  CHECK(torus::twist_matrix({1, 0}) == eval_sl2(TwistWord{kA}));
  CHECK(torus::twist_matrix({0, 1}) == eval_sl2(TwistWord{kB}));
}

TEST_CASE("twist matrix realizes the twist action") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_curve(rng, 12);
    const auto w = random_curve(rng, 12);
    CHECK(torus::apply(torus::twist_matrix(v), w) ==
          torus::twist_action(v, w, 1));
  }
}

TEST_CASE("i(T_v^n(w), w) = |n| i(v, w)^2") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> power(-20, 20);
  for (int i = 0; i < 500; ++i) {
    const auto v = random_curve(rng, 40);
    const auto w = random_curve(rng, 40);
    const auto n = power(rng);
    const auto ivw = torus::intersection(v, w);
    CHECK(torus::intersection(torus::twist_action(v, w, n), w) ==
          static_cast<std::uint64_t>(abs64(n)) * ivw * ivw);
  }
}

TEST_CASE("conjugating a twist matrix gives the twist about the image") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> length(0, 10);
  const IntMat2 gens[4] = {torus::twist_matrix({1, 0}),
                           torus::twist_matrix({1, 0}).inverse(),
                           torus::twist_matrix({0, 1}),
                           torus::twist_matrix({0, 1}).inverse()};
  for (int i = 0; i < 200; ++i) {
    IntMat2 m = IntMat2::identity();
    for (int j = length(rng); j > 0; --j) m *= gens[pick(rng)];
    const auto v = random_curve(rng, 10);
    CHECK(m * torus::twist_matrix(v) * m.inverse() ==
          torus::twist_matrix(torus::apply(m, v)));
  }
}

TEST_CASE("T_a T_b (a) = b and T_b T_a (b) = a when i(a, b) = 1") {
  const CurveClass a{1, 0};
  const CurveClass b{0, 1};
  CHECK(torus::twist_action(a, torus::twist_action(b, a, 1), 1) == b);
  CHECK(torus::twist_action(b, torus::twist_action(a, b, 1), 1) == a);
}

TEST_CASE("twist powers compose additively and stay primitive") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> power(-10, 10);
  for (int i = 0; i < 200; ++i) {
    const auto v = random_curve(rng, 15);
    const auto w = random_curve(rng, 15);
    const auto n = power(rng);
    const auto m = power(rng);
    const auto once = torus::twist_action(v, w, m);
    CHECK(torus::twist_action(v, once, n) == torus::twist_action(v, w, n + m));
    CHECK(std::gcd(once.p(), once.q()) == 1);
  }
}

TEST_CASE("coordinates past 64 bits are reported") {
  const CurveClass v{1, 0};
  const CurveClass w{3037000499LL, 3037000500LL};
  CHECK_THROWS_AS(torus::twist_action(v, w, 4'000'000'000LL),
                  std::overflow_error);
}
