#include "twistsub/classifier.hpp"

#include "twistsub/algebra.hpp"
#include "twistsub/stallings.hpp"

namespace twistsub {

namespace {

std::uint64_t magnitude(std::int64_t k) {
  return k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
               : static_cast<std::uint64_t>(k);
}

bool commute(const TwistWord& u, const TwistWord& v,
             const SurfaceContext& ctx) {
  return equal_in_context(concat(u, v), concat(v, u), ctx);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

const TwistWord kWordA{kA};
const TwistWord kWordB{kB};

}  // namespace

std::string to_string(GroupClass g) {
  switch (g) {
    case GroupClass::Z: return "Z";
    case GroupClass::Z2: return "Z2";
    case GroupClass::F2: return "F2";
    case GroupClass::B3: return "B3";
    case GroupClass::SL2Z: return "SL2Z";
    case GroupClass::Z2xZ: return "Z2xZ";
  }
  return "?";
}

GroupClass parse_group_class(std::string_view text) {
  for (auto g : {GroupClass::Z, GroupClass::Z2, GroupClass::F2, GroupClass::B3,
                 GroupClass::SL2Z, GroupClass::Z2xZ}) {
    if (text == to_string(g)) return g;
  }
  throw std::invalid_argument("unknown group class '" + std::string(text) +
                              "'");
}

Index index_of(const Relation& r) {
  if (std::holds_alternative<EqualToFullGroup>(r)) return Index::finite(1);
  if (const auto* f = std::get_if<ProperFiniteIndex>(&r)) {
    return Index::finite(f->index);
  }
  return Index::infinite();
}

GroupClass full_group_class(const SurfaceContext& ctx) {
  switch (oracle_for(ctx)) {
    case Oracle::ExponentVector: return GroupClass::Z2;
    case Oracle::SL2Z: return GroupClass::SL2Z;
    case Oracle::Burau: return GroupClass::B3;
    case Oracle::FreeReduction: return GroupClass::F2;
  }
  return GroupClass::F2;
}

Verdict classify(const XSpec& x, const SurfaceContext& ctx) {
  const GroupClass full = full_group_class(ctx);
  const std::uint64_t k = magnitude(x.k);
  if (k == 0) return {GroupClass::Z, ProperInfiniteIndex{}, full};

  switch (oracle_for(ctx)) {
    case Oracle::ExponentVector:
      if (k == 1) return {GroupClass::Z2, EqualToFullGroup{}, full};
      return {GroupClass::Z2, ProperFiniteIndex{k}, full};
    case Oracle::FreeReduction:
      if (k == 1) return {GroupClass::F2, EqualToFullGroup{}, full};
      return {GroupClass::F2, ProperInfiniteIndex{}, full};
    case Oracle::SL2Z:
      if (k % 3 != 0) return {GroupClass::SL2Z, EqualToFullGroup{}, full};
      if (k % 6 == 3) return {GroupClass::Z2xZ, ProperInfiniteIndex{}, full};
      return {GroupClass::Z, ProperInfiniteIndex{}, full};
    case Oracle::Burau:
      if (k % 3 != 0) return {GroupClass::B3, EqualToFullGroup{}, full};
      return {GroupClass::Z2, ProperInfiniteIndex{}, full};
  }
  throw std::logic_error("unreachable oracle");
}

// ---------------------------------------------------------------------------

std::string to_string(ConjClass c) { return conj_word(c).to_string(); }

TwistWord conj_word(ConjClass c) {
  switch (c) {
    case ConjClass::A: return {kA};
    case ConjClass::B: return {kB};
    case ConjClass::ABAinv: return {kA, kB, kAInv};
    case ConjClass::BABinv: return {kB, kA, kBInv};
    case ConjClass::AinvBA: return {kAInv, kB, kA};
  }
  return {};
}

ConjClass conjugation_class(const XSpec& x, ConjDirection direction) {
  if (x.k == 0) {
    throw std::invalid_argument("conjugation table requires k != 0");
  }
  // Rows indexed by [form][positive power], columns by |k| mod 3.
  using C = ConjClass;
  static constexpr C table[2][2][3] = {
      {{C::A, C::ABAinv, C::B}, {C::A, C::B, C::ABAinv}},
      {{C::A, C::B, C::AinvBA}, {C::A, C::BABinv, C::B}},
  };
  const bool positive = (x.k > 0) == (direction == ConjDirection::ByX);
  return table[x.form == XForm::BA][positive][magnitude(x.k) % 3];
}

// ---------------------------------------------------------------------------

std::string to_string(const MetaWord& w) {
  std::string out;
  for (const auto& m : w) {
    if (!out.empty()) out += ' ';
    out += m.symbol == MetaLetter::Symbol::X ? 'X' : 'Y';
    if (m.sign < 0) out += "^-1";
  }
  return out;
}

TwistWord substitute(const MetaWord& w, const TwistWord& x,
                     const TwistWord& y) {
  TwistWord out;
  for (const auto& m : w) {
    const TwistWord& base = m.symbol == MetaLetter::Symbol::X ? x : y;
    out = concat(out, m.sign > 0 ? base : invert(base));
  }
  return out;
}

MetaWord generation_witness(const XSpec& x) {
  const std::uint64_t r = magnitude(x.k) % 3;
  if (r == 0) throw NoWitnessError();
  using S = MetaLetter::Symbol;
  const MetaWord conj = {{S::X, 1}, {S::Y, 1}, {S::X, -1}};
  const MetaWord outer_y_inv = {
      {S::Y, -1}, {S::X, 1}, {S::Y, 1}, {S::X, -1}, {S::Y, 1}};
  const MetaWord outer_y = {
      {S::Y, 1}, {S::X, 1}, {S::Y, 1}, {S::X, -1}, {S::Y, -1}};
  const bool positive = x.k > 0;
  if (x.form == XForm::AB) {
    return (r == 1) == positive ? conj : outer_y_inv;
  }
  return (r == 1) == positive ? outer_y : conj;
}

// ---------------------------------------------------------------------------

std::vector<NamedCheck> verify_relations(const SurfaceContext& ctx) {
  if (ctx.intersection() != 1) {
    throw std::invalid_argument("relation suite requires i(a, b) = 1");
  }
  const TwistWord ab3 = expand_xform({XForm::AB, 3});
  const TwistWord ba3 = expand_xform({XForm::BA, 3});
  const TwistWord ab6 = expand_xform({XForm::AB, 6});
  std::vector<NamedCheck> checks = {
      {"braid relation aba = bab",
       equal_in_context(parse_word("aba"), parse_word("bab"), ctx)},
      {"(ab)^3 = (ba)^3", equal_in_context(ab3, ba3, ctx)},
      {"(ab)^3 commutes with a", commute(ab3, kWordA, ctx)},
      {"(ab)^3 commutes with b", commute(ab3, kWordB, ctx)},
  };
  if (ctx.is_torus()) {
    checks.push_back({"(ab)^6 = 1", is_trivial(ab6, ctx)});
    checks.push_back({"(ab)^3 != 1", !is_trivial(ab3, ctx)});
    checks.push_back({"(ab)^3 has order 2", order_of(ab3, ctx) == Index::finite(2)});
  } else {
    checks.push_back({"(ab)^6 != 1", !is_trivial(ab6, ctx)});
    checks.push_back(
        {"(ab)^3 has infinite order", order_of(ab3, ctx).is_infinite()});
  }
  return checks;
}

namespace {

Certificate make(std::string name, std::string expected, std::string observed,
                 bool derived = false) {
  const bool passed = expected == observed;
  return {std::move(name), std::move(expected), std::move(observed), passed,
          derived};
}

std::string rank_claim(GroupClass g) {
  switch (g) {
    case GroupClass::Z: return "1";
    case GroupClass::Z2:
    case GroupClass::F2: return "2";
    default: return "unexpected group " + to_string(g);
  }
}

void lattice_certificates(const XSpec& x, const TwistWord& xw,
                          const Verdict& v, std::vector<Certificate>& out) {
  const IntVec2 ey = exponent_vector(kWordA);
  const IntVec2 ex = exponent_vector(xw);
  const Index index = lattice_index(ey, ex);
  out.push_back(make("lattice-index", index_of(v.relation).to_string(),
                     index.to_string(), x.k == 0));
  const IntVec2 zero{0, 0};
  const int rank = index.is_finite() ? 2 : (ey != zero || ex != zero) ? 1 : 0;
  out.push_back(
      make("lattice-rank", rank_claim(v.group_class), std::to_string(rank)));
}

void stallings_certificates(const XSpec& x, const TwistWord& xw,
                            const Verdict& v, std::vector<Certificate>& out) {
  const StallingsGraph g = build_subgroup_graph({kWordA, xw});
  const IndexAndRank ir = index_and_rank(g);
  out.push_back(make("stallings-index", index_of(v.relation).to_string(),
                     ir.index.to_string(), x.k == 0));
  out.push_back(make("stallings-member-b",
                     bool_text(std::holds_alternative<EqualToFullGroup>(
                         v.relation)),
                     bool_text(member(g, kWordB))));
  out.push_back(make("stallings-rank", rank_claim(v.group_class),
                     std::to_string(ir.rank)));
}

void witness_certificate(const XSpec& x, const TwistWord& xw,
                         const SurfaceContext& ctx, const Verdict& v,
                         std::vector<Certificate>& out) {
  const MetaWord witness = generation_witness(x);
  const TwistWord image = free_reduce(substitute(witness, xw, kWordA));
  const bool ok = equal_in_context(image, kWordB, ctx);
  const bool claims_equal = std::holds_alternative<EqualToFullGroup>(v.relation);
  out.push_back(make("generation-witness " + to_string(witness),
                     claims_equal ? "b" : "T_b not in G",
                     ok ? "b" : image.to_string()));
}

void central_certificates(const XSpec& x, const TwistWord& xw,
                          const SurfaceContext& ctx, const Verdict& v,
                          std::vector<Certificate>& out) {
  const bool central = commute(xw, kWordA, ctx) && commute(xw, kWordB, ctx);
  out.push_back(make("x-central", "true", bool_text(central)));

  std::string order_claim;
  switch (v.group_class) {
    case GroupClass::Z: order_claim = "1"; break;
    case GroupClass::Z2xZ: order_claim = "2"; break;
    case GroupClass::Z2: order_claim = "Infinite"; break;
    default: order_claim = "unexpected group " + to_string(v.group_class);
  }
  out.push_back(
      make("x-order", order_claim, order_of(xw, ctx).to_string()));
  out.push_back(
      make("y-order", "Infinite", order_of(kWordA, ctx).to_string()));

  if (v.group_class == GroupClass::Z2 && oracle_for(ctx) == Oracle::Burau) {
    // X maps to c I with c = +-t^m, m != 0, while every power of Y is upper
    // triangular with lower-right entry 1. So X^p = Y^q forces p = q = 0.
    const LaurentMat2 mx = eval_burau(xw);
    const LaurentMat2 my = eval_burau(kWordA);
    const bool scalar = mx == LaurentMat2::scalar(mx(0, 0));
    const auto& terms = mx(0, 0).terms();
    const bool nontrivial_unit = terms.size() == 1 &&
                                 terms.begin()->first != 0 &&
                                 abs(terms.begin()->second) == 1;
    const bool y_shape = my(1, 0).is_zero() && my(1, 1) == LaurentPoly(1);
    out.push_back(make("x-y-independent", "true",
                       bool_text(scalar && nontrivial_unit && y_shape)));
  }

  // G is abelian here, and a, b do not commute, so T_b is not in G.
  const bool proper = central && !commute(kWordA, kWordB, ctx);
  const bool claims_equal = std::holds_alternative<EqualToFullGroup>(v.relation);
  out.push_back(make("proper-subgroup", bool_text(!claims_equal),
                     bool_text(proper), x.k == 0));
}

}  // namespace

std::vector<Certificate> collect_certificates(const XSpec& x,
                                              const SurfaceContext& ctx,
                                              const Verdict& verdict) {
  std::vector<Certificate> out;
  out.push_back(make("full-group", to_string(verdict.full_group_class),
                     to_string(full_group_class(ctx))));
  const TwistWord xw = expand_xform(x);
  switch (oracle_for(ctx)) {
    case Oracle::ExponentVector:
      lattice_certificates(x, xw, verdict, out);
      break;
    case Oracle::FreeReduction:
      stallings_certificates(x, xw, verdict, out);
      break;
    case Oracle::SL2Z:
    case Oracle::Burau:
      if (magnitude(x.k) % 3 != 0) {
        witness_certificate(x, xw, ctx, verdict, out);
      } else {
        central_certificates(x, xw, ctx, verdict, out);
      }
      break;
  }
  return out;
}

CertificateBundle certify(const XSpec& x, const SurfaceContext& ctx) {
  CertificateBundle bundle{classify(x, ctx), {}};
  bundle.certificates = collect_certificates(x, ctx, bundle.verdict);
  std::string failures;
  for (const auto& c : bundle.certificates) {
    if (c.passed) continue;
    if (!failures.empty()) failures += "; ";
    failures += c.name + ": expected " + c.expected + ", observed " + c.observed;
  }
  if (!failures.empty()) throw ConsistencyError(failures);
  return bundle;
}

}  // namespace twistsub
