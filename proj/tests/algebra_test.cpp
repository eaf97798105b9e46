#include <doctest.h>

#include <random>

#include "twistsub/algebra.hpp"

using namespace twistsub;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<std::int64_t> exponent(-4, 4);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) {
    p += LaurentPoly::monomial(coeff(rng), exponent(rng));
  }
  return p;
}

IntMat2 random_int_mat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-9, 9);
  return {entry(rng), entry(rng), entry(rng), entry(rng)};
}

}  // namespace

TEST_CASE("integer matrix products, inverses, determinants") {
  const IntMat2 id = IntMat2::identity();
  const IntMat2 u{1, 1, 0, 1};
  const IntMat2 l{1, 0, -1, 1};
  CHECK(mat_mul(id, id) == id);
  CHECK(mat_mul(u, l) == IntMat2{0, 1, -1, 1});
  CHECK(mat_det(u) == 1);
  CHECK(mat_mul(u, mat_inv(u)) == id);
  CHECK(mat_inv(u) == IntMat2{1, -1, 0, 1});
  CHECK(mat_inv(IntMat2{0, 1, 1, 0}) == IntMat2{0, 1, 1, 0});  // det -1
  CHECK(mat_pow(u, 5) == IntMat2{1, 5, 0, 1});
  CHECK(mat_pow(u, -3) == IntMat2{1, -3, 0, 1});
  CHECK(mat_pow(u, 0) == id);
  CHECK(u.to_string() == "[[1, 1], [0, 1]]");
}

TEST_CASE("non-unit determinants are rejected") {
  CHECK_THROWS_WITH_AS(mat_inv(IntMat2{2, 0, 0, 1}),
                       doctest::Contains("not invertible over Z"),
                       NotInvertibleError);
  CHECK_THROWS_AS(mat_inv(IntMat2{}), NotInvertibleError);
  const LaurentMat2 m{LaurentPoly(1) + LaurentPoly::t(), 0, 0, 1};
  CHECK_THROWS_WITH_AS(mat_inv(m), doctest::Contains("Z[t, t^-1]"),
                       NotInvertibleError);
}

TEST_CASE("entries grow without overflow") {
  const IntMat2 m = mat_pow(IntMat2{2, 1, 1, 1}, 200);
  CHECK(m.det() == 1);
  CHECK(m(0, 0).get_str().size() > 80);
}

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK(laurent_mul(t, LaurentPoly::t(-1)) == LaurentPoly(1));
  CHECK((-t) * (-t) == LaurentPoly::t(2));
  const LaurentPoly sum = laurent_add(LaurentPoly(1) + t, LaurentPoly(-1) - t);
  CHECK(sum.is_zero());
  CHECK(sum.terms().empty());
  CHECK(sum == LaurentPoly());
  CHECK((t - t).terms().empty());
  CHECK(LaurentPoly::monomial(0, 3).is_zero());
  CHECK((LaurentPoly(1) + t) * (LaurentPoly(1) - t) ==
        LaurentPoly(1) - LaurentPoly::t(2));
}

TEST_CASE("Laurent printing") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((-t).to_string() == "-t");
  CHECK((LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(3, 1) -
         LaurentPoly(1) + LaurentPoly::t(-1))
            .to_string() == "-t^2 + 3t - 1 + t^-1");
}

TEST_CASE("Laurent units") {
  CHECK(LaurentPoly::monomial(-1, 3).unit_inverse() ==
        LaurentPoly::monomial(-1, -3));
  CHECK_FALSE(LaurentPoly::monomial(2, 0).unit_inverse().has_value());
  CHECK_FALSE((LaurentPoly(1) + LaurentPoly::t()).unit_inverse().has_value());
  CHECK_FALSE(LaurentPoly().unit_inverse().has_value());
  const LaurentMat2 a{-LaurentPoly::t(), 1, 0, 1};
  CHECK(a * a.inverse() == LaurentMat2::identity());
  CHECK(a.inverse() * a == LaurentMat2::identity());
}

TEST_CASE("lattice index") {
  CHECK(lattice_index({1, 0}, {0, 5}) == Index::finite(5));
  CHECK(lattice_index({1, 0}, {3, 3}) == Index::finite(3));
  CHECK(lattice_index({1, 0}, {2, 0}) == Index::infinite());
  CHECK(lattice_index({0, 0}, {0, 0}) == Index::infinite());
  CHECK(lattice_index({2, 1}, {1, 2}) == Index::finite(3));
  CHECK(Index::infinite().to_string() == "Infinite");
  CHECK(Index::finite(7).to_string() == "7");
}

TEST_CASE("lattice index symmetry and shear invariance") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-50, 50);
  for (int i = 0; i < 300; ++i) {
    const IntVec2 v1{c(rng), c(rng)};
    const IntVec2 v2{c(rng), c(rng)};
    const std::int64_t n = c(rng);
    CHECK(lattice_index(v1, v2) == lattice_index(v2, v1));
    CHECK(lattice_index(v1, v2) ==
          lattice_index(v1, {v2.first + n * v1.first,
                             v2.second + n * v1.second}));
  }
}

TEST_CASE("matrix ring properties") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const IntMat2 x = random_int_mat(rng);
    const IntMat2 y = random_int_mat(rng);
    const IntMat2 z = random_int_mat(rng);
    CHECK(mat_det(mat_mul(x, y)) == mat_det(x) * mat_det(y));
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("Laurent ring axioms") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly p = random_poly(rng);
    const LaurentPoly q = random_poly(rng);
    const LaurentPoly r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p - p).is_zero());
    const LaurentPoly combined = p * q + r;
    for (const auto& [e, c] : combined.terms()) CHECK(c != 0);
  }
}
