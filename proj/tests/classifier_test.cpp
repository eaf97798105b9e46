#include <doctest.h>

#include "twistsub/classifier.hpp"
#include "twistsub/representations.hpp"

using namespace twistsub;

namespace {

const SurfaceContext kDisjoint{0};
const SurfaceContext kTorus{1, true};
const SurfaceContext kBraid{1};
const SurfaceContext kFree{2};

const std::vector<SurfaceContext>& grid_contexts() {
  static const std::vector<SurfaceContext> contexts = {
      {0}, {1, true}, {1}, {2}, {3}, {5}};
  return contexts;
}

TwistWord w(std::string_view text) { return parse_word(text); }

}  // namespace

TEST_CASE("classify: worked examples") {
  CHECK(classify({XForm::AB, 5}, kDisjoint) ==
        Verdict{GroupClass::Z2, ProperFiniteIndex{5}, GroupClass::Z2});
  CHECK(classify({XForm::BA, 1}, SurfaceContext{3}) ==
        Verdict{GroupClass::F2, EqualToFullGroup{}, GroupClass::F2});
  CHECK(classify({XForm::AB, 2}, kTorus) ==
        Verdict{GroupClass::SL2Z, EqualToFullGroup{}, GroupClass::SL2Z});
  CHECK(classify({XForm::AB, 3}, kTorus) ==
        Verdict{GroupClass::Z2xZ, ProperInfiniteIndex{}, GroupClass::SL2Z});
  CHECK(classify({XForm::AB, 6}, kTorus) ==
        Verdict{GroupClass::Z, ProperInfiniteIndex{}, GroupClass::SL2Z});
  CHECK(classify({XForm::BA, -3}, kBraid) ==
        Verdict{GroupClass::Z2, ProperInfiniteIndex{}, GroupClass::B3});
}

TEST_CASE("classify: edge branches") {
  for (const auto& ctx : grid_contexts()) {
    const Verdict v = classify({XForm::AB, 0}, ctx);
    CHECK(v.group_class == GroupClass::Z);
    CHECK(v.relation == Relation{ProperInfiniteIndex{}});
  }
  CHECK(classify({XForm::AB, -1}, kDisjoint).relation ==
        Relation{EqualToFullGroup{}});
  CHECK(classify({XForm::AB, -7}, kDisjoint).relation ==
        Relation{ProperFiniteIndex{7}});
  CHECK(classify({XForm::BA, -1}, kFree).relation == Relation{EqualToFullGroup{}});
  CHECK(classify({XForm::BA, 2}, kFree).relation ==
        Relation{ProperInfiniteIndex{}});
  CHECK(classify({XForm::AB, -9}, kTorus).group_class == GroupClass::Z2xZ);
  CHECK(classify({XForm::AB, -12}, kTorus).group_class == GroupClass::Z);
  CHECK(classify({XForm::AB, INT64_MIN}, kDisjoint).relation ==
        Relation{ProperFiniteIndex{9223372036854775808ULL}});
}

TEST_CASE("equal relation always carries the full group class") {
  for (const auto& ctx : grid_contexts()) {
    for (std::int64_t k = -12; k <= 12; ++k) {
      for (XForm form : {XForm::AB, XForm::BA}) {
        const Verdict v = classify({form, k}, ctx);
        if (std::holds_alternative<EqualToFullGroup>(v.relation)) {
          CHECK(v.group_class == v.full_group_class);
        }
        CHECK(v == classify({form == XForm::AB ? XForm::BA : XForm::AB, k}, ctx));
        CHECK(v == classify({form, -k}, ctx));
      }
    }
  }
}

TEST_CASE("conjugation table entries") {
  CHECK(conjugation_class({XForm::AB, 4}, ConjDirection::ByX) == ConjClass::B);
  CHECK(conjugation_class({XForm::AB, 3}, ConjDirection::ByX) == ConjClass::A);
  CHECK(conjugation_class({XForm::BA, -2}, ConjDirection::ByX) ==
        ConjClass::AinvBA);
  CHECK(conjugation_class({XForm::AB, 2}, ConjDirection::ByX) ==
        ConjClass::ABAinv);
  CHECK(conjugation_class({XForm::AB, 1}, ConjDirection::ByXInverse) ==
        ConjClass::ABAinv);
  CHECK(conjugation_class({XForm::BA, 1}, ConjDirection::ByX) ==
        ConjClass::BABinv);
  CHECK(conjugation_class({XForm::BA, 2}, ConjDirection::ByXInverse) ==
        ConjClass::AinvBA);
  // X^-1 a X with X = (ab)^-k is row (ab)^k a (ab)^-k.
  CHECK(conjugation_class({XForm::AB, -2}, ConjDirection::ByXInverse) ==
        ConjClass::ABAinv);
  CHECK_THROWS_AS(conjugation_class({XForm::AB, 0}, ConjDirection::ByX),
                  std::invalid_argument);
  CHECK(to_string(ConjClass::AinvBA) == "Aba");
}

TEST_CASE("conjugation table agrees with both i = 1 oracles") {
  for (XForm form : {XForm::AB, XForm::BA}) {
    for (std::int64_t k = -9; k <= 9; ++k) {
      if (k == 0) continue;
      const TwistWord x = expand_xform({form, k});
      const TwistWord by_x = concat({x, w("a"), invert(x)});
      const TwistWord by_inv = concat({invert(x), w("a"), x});
      for (const auto& ctx : {kBraid, kTorus}) {
        CHECK(equal_in_context(
            by_x, conj_word(conjugation_class({form, k}, ConjDirection::ByX)),
            ctx));
        CHECK(equal_in_context(
            by_inv,
            conj_word(conjugation_class({form, k}, ConjDirection::ByXInverse)),
            ctx));
      }
    }
  }
}

TEST_CASE("generation witnesses") {
  CHECK(to_string(generation_witness({XForm::AB, 4})) == "X Y X^-1");
  CHECK(to_string(generation_witness({XForm::AB, 2})) ==
        "Y^-1 X Y X^-1 Y");
  CHECK(to_string(generation_witness({XForm::BA, 1})) ==
        "Y X Y X^-1 Y^-1");
  CHECK(to_string(generation_witness({XForm::AB, -1})) ==
        "Y^-1 X Y X^-1 Y");
  CHECK(to_string(generation_witness({XForm::BA, -2})) ==
        "Y X Y X^-1 Y^-1");
  CHECK_THROWS_WITH_AS(generation_witness({XForm::AB, 6}),
                       doctest::Contains("no witness exists"), NoWitnessError);
  CHECK_THROWS_AS(generation_witness({XForm::BA, 0}), NoWitnessError);
}

TEST_CASE("witnesses produce b in both i = 1 oracles") {
  for (XForm form : {XForm::AB, XForm::BA}) {
    for (std::int64_t k = -9; k <= 9; ++k) {
      if (k % 3 == 0) continue;
      const XSpec x{form, k};
      const TwistWord image =
          free_reduce(substitute(generation_witness(x), expand_xform(x), w("a")));
      CHECK(equal_in_context(image, w("b"), kBraid));
      CHECK(equal_in_context(image, w("b"), kTorus));
    }
  }
}

TEST_CASE("substitute") {
  using S = MetaLetter::Symbol;
  const MetaWord m = {{S::X, 1}, {S::Y, -1}};
  CHECK(substitute(m, w("ab"), w("a")) == w("abA"));
  CHECK(substitute({}, w("ab"), w("a")).empty());
}

TEST_CASE("relation suite") {
  for (const auto& ctx : {kTorus, kBraid}) {
    const auto checks = verify_relations(ctx);
    CHECK(checks.size() == (ctx.is_torus() ? 7u : 6u));
    for (const auto& c : checks) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
  const auto torus = verify_relations(kTorus);
  CHECK(std::any_of(torus.begin(), torus.end(), [](const NamedCheck& c) {
    return c.name == "(ab)^6 = 1" && c.passed;
  }));
  const auto braid = verify_relations(kBraid);
  CHECK(std::any_of(braid.begin(), braid.end(), [](const NamedCheck& c) {
    return c.name == "(ab)^6 != 1" && c.passed;
  }));
  CHECK_THROWS_AS(verify_relations(kFree), std::invalid_argument);
  CHECK_THROWS_AS(verify_relations(kDisjoint), std::invalid_argument);
}

TEST_CASE("certificates agree with every verdict in the grid") {
  for (const auto& ctx : grid_contexts()) {
    for (std::int64_t k = -12; k <= 12; ++k) {
      for (XForm form : {XForm::AB, XForm::BA}) {
        INFO("k=" << k << " i=" << ctx.intersection() << " torus=" << ctx.is_torus());
        CertificateBundle b{classify({form, k}, ctx), {}};
        CHECK_NOTHROW(b = certify({form, k}, ctx));
        CHECK(b.certificates.size() >= 2);
      }
    }
  }
}

TEST_CASE("certificate contents") {
  auto find = [](const CertificateBundle& b, std::string_view prefix) {
    for (const auto& c : b.certificates) {
      if (c.name.starts_with(prefix)) return c;
    }
    FAIL("missing certificate " << prefix);
    return Certificate{};
  };
  const auto lattice = certify({XForm::AB, 5}, kDisjoint);
  CHECK(find(lattice, "lattice-index").observed == "5");
  const auto free = certify({XForm::AB, 1}, kFree);
  CHECK(find(free, "stallings-member-b").observed == "true");
  CHECK(find(free, "stallings-index").observed == "1");
  const auto torus6 = certify({XForm::AB, 6}, kTorus);
  CHECK(find(torus6, "x-order").observed == "1");
  CHECK(is_trivial(expand_xform({XForm::AB, 6}), kTorus));
  const auto torus3 = certify({XForm::AB, 3}, kTorus);
  CHECK(find(torus3, "x-order").observed == "2");
  CHECK(find(torus3, "x-central").observed == "true");
  CHECK(find(torus3, "y-order").observed == "Infinite");
  const auto braid3 = certify({XForm::BA, 3}, kBraid);
  CHECK(find(braid3, "x-y-independent").observed == "true");
  const auto witness = certify({XForm::BA, 4}, kBraid);
  CHECK(find(witness, "generation-witness").name ==
        "generation-witness Y X Y X^-1 Y^-1");
  CHECK(find(witness, "generation-witness").observed == "b");

  const auto zero = certify({XForm::AB, 0}, kDisjoint);
  CHECK(find(zero, "lattice-index").derived);
  CHECK(find(zero, "lattice-index").observed == "Infinite");
  CHECK(find(zero, "lattice-rank").observed == "1");
  CHECK(find(certify({XForm::AB, 0}, kTorus), "proper-subgroup").derived);
  CHECK(find(certify({XForm::AB, 0}, kFree), "stallings-index").derived);
  CHECK_FALSE(find(certify({XForm::AB, 3}, kFree), "stallings-index").derived);
}

TEST_CASE("a wrong verdict is caught by its certificates") {
  const Verdict wrong_index{GroupClass::Z2, ProperFiniteIndex{4}, GroupClass::Z2};
  auto certs = collect_certificates({XForm::AB, 5}, kDisjoint, wrong_index);
  CHECK(std::any_of(certs.begin(), certs.end(),
                    [](const Certificate& c) { return !c.passed; }));

  const Verdict wrong_equal{GroupClass::SL2Z, EqualToFullGroup{}, GroupClass::SL2Z};
  certs = collect_certificates({XForm::AB, 3}, kTorus, wrong_equal);
  CHECK(std::any_of(certs.begin(), certs.end(),
                    [](const Certificate& c) { return !c.passed; }));

  const Verdict wrong_free{GroupClass::F2, EqualToFullGroup{}, GroupClass::F2};
  certs = collect_certificates({XForm::BA, 2}, kFree, wrong_free);
  CHECK(std::count_if(certs.begin(), certs.end(),
                      [](const Certificate& c) { return !c.passed; }) == 2);

  const Verdict wrong_torsion{GroupClass::Z, ProperInfiniteIndex{}, GroupClass::SL2Z};
  certs = collect_certificates({XForm::AB, 9}, kTorus, wrong_torsion);
  CHECK(std::any_of(certs.begin(), certs.end(),
                    [](const Certificate& c) { return !c.passed; }));

  const Verdict wrong_full{GroupClass::B3, EqualToFullGroup{}, GroupClass::SL2Z};
  certs = collect_certificates({XForm::AB, 1}, kBraid, wrong_full);
  CHECK_FALSE(certs.front().passed);
}
