#include "twistsub/verification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "twistsub/algebra.hpp"
#include "twistsub/classifier.hpp"
#include "twistsub/representations.hpp"
#include "twistsub/torus.hpp"

namespace twistsub::verification {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

TwistWord random_word(std::mt19937_64& rng, std::size_t length) {
  constexpr Letter letters[4] = {kA, kAInv, kB, kBInv};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back(letters[pick(rng)]);
  return TwistWord(std::move(out));
}

TwistWord random_reduced_word(std::mt19937_64& rng, std::size_t length) {
  constexpr Letter letters[4] = {kA, kAInv, kB, kBInv};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> out;
  out.reserve(length);
  while (out.size() < length) {
    const Letter l = letters[pick(rng)];
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return TwistWord(std::move(out));
}

StallingsGraph random_complete_graph(std::mt19937_64& rng,
                                     std::size_t vertices) {
  if (vertices == 0) throw std::invalid_argument("graph needs a vertex");
  std::vector<std::int32_t> pa(vertices);
  std::vector<std::int32_t> pb(vertices);
  while (true) {
    std::iota(pa.begin(), pa.end(), 0);
    std::iota(pb.begin(), pb.end(), 0);
    std::shuffle(pa.begin(), pa.end(), rng);
    std::shuffle(pb.begin(), pb.end(), rng);
    std::vector<StallingsGraph::Row> rows(vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
      rows[v][static_cast<std::size_t>(EdgeLabel::A)] = pa[v];
      rows[pa[v]][static_cast<std::size_t>(EdgeLabel::AInv)] =
          static_cast<std::int32_t>(v);
      rows[v][static_cast<std::size_t>(EdgeLabel::B)] = pb[v];
      rows[pb[v]][static_cast<std::size_t>(EdgeLabel::BInv)] =
          static_cast<std::int32_t>(v);
    }
    StallingsGraph g = StallingsGraph::from_rows(std::move(rows));
    // Canonicalization drops whatever the base cannot reach.
    if (g.vertex_count() == vertices) return g;
  }
}

namespace {

using Cases = std::vector<CaseResult>;

std::string k_label(XForm form, std::int64_t k) {
  return to_string(form) + " k=" + std::to_string(k);
}

std::string ctx_label(const SurfaceContext& ctx) {
  return "i=" + std::to_string(ctx.intersection()) +
         (ctx.is_torus() ? " torus" : "");
}

const SurfaceContext kTorus{1, true};
const SurfaceContext kBraid{1, false};
const SurfaceContext kFree{2, false};

std::string relation_text(const Relation& r) {
  if (std::holds_alternative<EqualToFullGroup>(r)) return "equal";
  if (const auto* f = std::get_if<ProperFiniteIndex>(&r)) {
    return "index " + std::to_string(f->index);
  }
  return "infinite index";
}

// --- main-theorem-grid -----------------------------------------------------

Cases main_theorem_grid(const SuiteOptions& opt) {
  const std::int64_t kmax = opt.kmax.value_or(12);
  const std::vector<SurfaceContext> contexts = {
      {0, false}, {1, true}, {1, false}, {2, false}, {3, false}, {5, false}};
  Cases out;
  for (const auto& ctx : contexts) {
    for (std::int64_t k = -kmax; k <= kmax; ++k) {
      for (XForm form : {XForm::AB, XForm::BA}) {
        const XSpec x{form, k};
        CaseResult c{k_label(form, k) + " " + ctx_label(ctx), true, {}};
        try {
          const CertificateBundle b = certify(x, ctx);
          const XForm other = form == XForm::AB ? XForm::BA : XForm::AB;
          const bool symmetric = classify({other, k}, ctx) == b.verdict;
          const bool sign_invariant = classify({form, -k}, ctx) == b.verdict;
          c.passed = symmetric && sign_invariant;
          c.detail = to_string(b.verdict.group_class) + " " +
                     relation_text(b.verdict.relation) + ", " +
                     std::to_string(b.certificates.size()) + " certificates";
          if (!symmetric) c.detail += ", differs under ab <-> ba";
          if (!sign_invariant) c.detail += ", differs under k -> -k";
        } catch (const ConsistencyError& e) {
          c.passed = false;
          c.detail = e.what();
        }
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

// --- chain-relation ----------------------------------------------------------

Cases chain_relation(const SuiteOptions&) {
  const TwistWord ab3 = expand_xform({XForm::AB, 3});
  const TwistWord ab6 = expand_xform({XForm::AB, 6});
  const IntMat2 id = IntMat2::identity();
  const LaurentMat2 t6 = LaurentMat2::scalar(LaurentPoly::t(6));
  const IntMat2 s3 = eval_sl2(ab3);
  const IntMat2 s6 = eval_sl2(ab6);
  const LaurentMat2 b6 = eval_burau(ab6);
  return {
      {"sl2: (ab)^6 = I", s6 == id, s6.to_string()},
      {"sl2: (ab)^3 = -I", s3 == -id, s3.to_string()},
      {"sl2: (ab)^3 != I", !(s3 == id), {}},
      {"burau: (ab)^6 = t^6 I", b6 == t6, b6.to_string()},
      {"burau: (ab)^6 != I", !(b6 == LaurentMat2::identity()), {}},
  };
}

// --- braid-relation ----------------------------------------------------------

Cases braid_relation(const SuiteOptions&) {
  const TwistWord aba = parse_word("aba");
  const TwistWord bab = parse_word("bab");
  return {
      {"sl2: aba = bab", eval_sl2(aba) == eval_sl2(bab),
       eval_sl2(aba).to_string()},
      {"burau: aba = bab", eval_burau(aba) == eval_burau(bab),
       eval_burau(aba).to_string()},
      {"free: aba != bab", !equal_in_context(aba, bab, kFree), {}},
      {"free: aba != bab at i=3",
       !equal_in_context(aba, bab, SurfaceContext{3}), {}},
  };
}

// --- lemma-conjugation -------------------------------------------------------

struct Row {
  XForm form;
  int sign;
  const char* label;
};

constexpr Row kRows[4] = {{XForm::AB, 1, "(ab)^k a (ab)^-k"},
                          {XForm::AB, -1, "(ab)^-k a (ab)^k"},
                          {XForm::BA, 1, "(ba)^k a (ba)^-k"},
                          {XForm::BA, -1, "(ba)^-k a (ba)^k"}};

Cases lemma_conjugation(const SuiteOptions& opt) {
  const std::int64_t kmax = opt.kmax.value_or(9);
  Cases out;
  for (const Row& row : kRows) {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      const XSpec x{row.form, row.sign * k};
      const TwistWord xw = expand_xform(x);
      const TwistWord conjugate = concat({xw, TwistWord{kA}, invert(xw)});
      const ConjClass expected = conjugation_class(x, ConjDirection::ByX);
      const TwistWord target = conj_word(expected);
      const bool burau = equal_in_context(conjugate, target, kBraid);
      const bool sl2 = equal_in_context(conjugate, target, kTorus);
      std::string detail = "= " + to_string(expected);
      if (!burau) detail += ", burau mismatch";
      if (!sl2) detail += ", sl2 mismatch";
      out.push_back({std::string(row.label) + " k=" + std::to_string(k),
                     burau && sl2, detail});
    }
  }
  return out;
}

// --- prop-generation ---------------------------------------------------------

Cases prop_generation(const SuiteOptions& opt) {
  const std::int64_t kmax = opt.kmax.value_or(9);
  Cases out;
  for (const Row& row : kRows) {
    for (std::int64_t k = 1; k <= kmax; ++k) {
      if (k % 3 == 0) continue;
      const XSpec x{row.form, row.sign * k};
      const MetaWord witness = generation_witness(x);
      const TwistWord image =
          free_reduce(substitute(witness, expand_xform(x), TwistWord{kA}));
      const bool burau = equal_in_context(image, TwistWord{kB}, kBraid);
      const bool sl2 = equal_in_context(image, TwistWord{kB}, kTorus);
      std::string label = "X = (" + to_string(row.form) + ")^" +
                          std::to_string(row.sign * k);
      std::string detail = to_string(witness) + " = b";
      if (!burau) detail += ", burau mismatch";
      if (!sl2) detail += ", sl2 mismatch";
      out.push_back({std::move(label), burau && sl2, detail});
    }
  }
  return out;
}

// --- index-certificates ------------------------------------------------------

Cases index_certificates(const SuiteOptions&) {
  Cases out;
  const TwistWord y{kA};
  for (XForm form : {XForm::AB, XForm::BA}) {
    for (std::int64_t k = 1; k <= 10; ++k) {
      const Index idx = lattice_index(exponent_vector(y),
                                      exponent_vector(expand_xform({form, k})));
      out.push_back({"lattice " + k_label(form, k),
                     idx == Index::finite(static_cast<std::uint64_t>(k)),
                     "index " + idx.to_string()});
    }
  }
  for (XForm form : {XForm::AB, XForm::BA}) {
    for (std::int64_t k = -6; k <= 6; ++k) {
      if (k == 0) continue;
      const std::int64_t m = k < 0 ? -k : k;
      const StallingsGraph g = build_subgroup_graph({y, expand_xform({form, k})});
      const Index idx = index_and_rank(g).index;
      const Index expected = m == 1 ? Index::finite(1) : Index::infinite();
      out.push_back({"stallings " + k_label(form, k), idx == expected,
                     "index " + idx.to_string()});
    }
  }
  return out;
}

// --- nielsen-schreier --------------------------------------------------------

Cases nielsen_schreier(const SuiteOptions& opt) {
  const std::size_t count = opt.count.value_or(20);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  Cases out;
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t q = size(rng);
    const StallingsGraph g = random_complete_graph(rng, q);
    const std::vector<TwistWord> basis = free_basis(g);
    const StallingsGraph rebuilt = build_subgroup_graph(basis);
    const IndexAndRank ir = index_and_rank(rebuilt);
    const bool ok = rebuilt == g && ir.index == Index::finite(q) &&
                    ir.rank == q + 1 && basis.size() == q + 1;
    out.push_back({"graph " + std::to_string(n) + " q=" + std::to_string(q), ok,
                   "index " + ir.index.to_string() + ", rank " +
                       std::to_string(ir.rank)});
  }
  return out;
}

// --- centrality-torsion ------------------------------------------------------

Cases centrality_torsion(const SuiteOptions&) {
  const TwistWord ab3 = expand_xform({XForm::AB, 3});
  const LaurentMat2 z = eval_burau(ab3);
  const LaurentMat2 a = eval_burau(TwistWord{kA});
  const LaurentMat2 b = eval_burau(TwistWord{kB});
  const Index torus_order = order_of(ab3, kTorus);
  const Index braid_order = order_of(ab3, kBraid);
  return {
      {"burau: (ab)^3 commutes with a", z * a == a * z, z.to_string()},
      {"burau: (ab)^3 commutes with b", z * b == b * z, {}},
      {"torus: order of (ab)^3 = 2", torus_order == Index::finite(2),
       torus_order.to_string()},
      {"non-torus: order of (ab)^3 = Infinite", braid_order.is_infinite(),
       braid_order.to_string()},
  };
}

// --- twist-intersection ------------------------------------------------------

torus::CurveClass random_curve(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-30, 30);
  while (true) {
    const std::int64_t p = coord(rng);
    const std::int64_t q = coord(rng);
    if (std::gcd(p, q) == 1) return {p, q};
  }
}

Cases twist_intersection(const SuiteOptions& opt) {
  const std::size_t count = opt.count.value_or(200);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> power(-20, 20);
  Cases out;
  std::size_t bad = 0;
  for (std::size_t n = 0; n < count; ++n) {
    const auto v = random_curve(rng);
    const auto w = random_curve(rng);
    const std::int64_t e = power(rng);
    const std::uint64_t iv = torus::intersection(v, w);
    const std::uint64_t lhs =
        torus::intersection(torus::twist_action(v, w, e), w);
    const std::uint64_t rhs = static_cast<std::uint64_t>(e < 0 ? -e : e) * iv * iv;
    if (lhs != rhs) ++bad;
  }
  out.push_back({std::to_string(count) + " random triples", bad == 0,
                 std::to_string(bad) + " mismatches"});
  const torus::CurveClass a{1, 0};
  const torus::CurveClass b{0, 1};
  const auto i2 = torus::intersection(torus::twist_action(a, b, 2), b);
  out.push_back({"i(T_a^2(b), b) = 2", i2 == 2, std::to_string(i2)});
  return out;
}

// --- properties --------------------------------------------------------------

// Generating sets in which any two consecutive factors cancel less than half
// of either one. Then a reduced product of n factors has length at least n.
bool small_cancellation(const std::vector<TwistWord>& gens) {
  std::vector<TwistWord> sym;
  for (const auto& g : gens) {
    if (g.empty()) return false;
    sym.push_back(g);
    sym.push_back(invert(g));
  }
  for (const auto& u : sym) {
    for (const auto& v : sym) {
      if (invert(u) == v) continue;
      std::size_t c = 0;
      while (c < u.size() && c < v.size() &&
             u[u.size() - 1 - c].cancels(v[c])) {
        ++c;
      }
      if (2 * c >= u.size() || 2 * c >= v.size()) return false;
    }
  }
  return true;
}

// All freely reduced products of at most `depth` factors of length <= cap.
std::set<TwistWord> products(const std::vector<TwistWord>& gens,
                             std::size_t depth, std::size_t cap) {
  std::vector<TwistWord> sym;
  for (const auto& g : gens) {
    sym.push_back(g);
    sym.push_back(invert(g));
  }
  std::set<TwistWord> found{TwistWord{}};
  std::vector<std::pair<TwistWord, std::size_t>> frontier{{TwistWord{}, sym.size()}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::pair<TwistWord, std::size_t>> next;
    for (const auto& [w, last] : frontier) {
      for (std::size_t s = 0; s < sym.size(); ++s) {
        if (last < sym.size() && (s ^ 1u) == last) continue;
        TwistWord p = free_reduce(concat(w, sym[s]));
        if (p.size() <= cap) found.insert(p);
        next.emplace_back(std::move(p), s);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

std::vector<TwistWord> all_reduced_words(std::size_t max_length) {
  std::vector<TwistWord> out{TwistWord{}};
  std::size_t begin = 0;
  constexpr Letter letters[4] = {kA, kAInv, kB, kBInv};
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter l : letters) {
        const TwistWord& w = out[i];
        if (!w.empty() && w[w.size() - 1].cancels(l)) continue;
        out.push_back(concat(w, TwistWord{l}));
      }
    }
    begin = end;
  }
  return out;
}

Cases properties(const SuiteOptions& opt) {
  const std::size_t count = std::max<std::size_t>(opt.count.value_or(100), 1);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> length(0, 30);
  Cases out;

  std::size_t bad = 0;
  for (std::size_t n = 0; n < count; ++n) {
    const TwistWord w = random_word(rng, length(rng));
    const TwistWord r = free_reduce(w);
    if (!(free_reduce(r) == r) || !r.is_reduced() ||
        exponent_sums(r) != exponent_sums(w)) {
      ++bad;
    }
  }
  out.push_back({"free_reduce idempotent", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(count)});

  bad = 0;
  std::uniform_int_distribution<long> entry(-9, 9);
  for (std::size_t n = 0; n < count; ++n) {
    const IntMat2 x{entry(rng), entry(rng), entry(rng), entry(rng)};
    const IntMat2 y{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (mat_det(mat_mul(x, y)) != mat_det(x) * mat_det(y)) ++bad;
  }
  out.push_back({"det multiplicative", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(count)});

  bad = 0;
  std::uniform_int_distribution<std::size_t> short_length(0, 12);
  for (std::size_t n = 0; n < count; ++n) {
    const TwistWord w = random_word(rng, short_length(rng));
    const auto [sa, sb] = exponent_sums(w);
    const std::int64_t s = sa + sb;
    const LaurentPoly expected =
        LaurentPoly::monomial(s % 2 == 0 ? 1 : -1, s);
    if (!(eval_burau(w).det() == expected)) ++bad;
  }
  out.push_back({"burau det = (-t)^(exponent sum)", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(count)});

  bad = 0;
  std::uniform_int_distribution<std::size_t> ngens(1, 4);
  std::uniform_int_distribution<std::size_t> glen(1, 6);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<TwistWord> gens;
    const std::size_t m = ngens(rng);
    for (std::size_t i = 0; i < m; ++i) gens.push_back(random_word(rng, glen(rng)));
    const StallingsGraph g = build_subgroup_graph(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& x : gens) {
      if (rng() % 2) x = invert(x);
    }
    if (!(build_subgroup_graph(gens) == g)) ++bad;
  }
  out.push_back({"folding confluence", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(count)});

  bad = 0;
  const std::vector<TwistWord> words = all_reduced_words(6);
  std::uniform_int_distribution<std::size_t> short_gen(1, 3);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<TwistWord> gens;
    do {
      gens = {random_reduced_word(rng, short_gen(rng)),
              random_reduced_word(rng, short_gen(rng))};
    } while (!small_cancellation(gens));
    const std::set<TwistWord> brute = products(gens, 6, 6);
    const StallingsGraph g = build_subgroup_graph(gens);
    for (const auto& w : words) {
      if (member(g, w) != brute.contains(w)) {
        ++bad;
        break;
      }
    }
  }
  out.push_back({"membership agrees with brute force (length <= 6)", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(count)});
  return out;
}

using SuiteFn = Cases (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"main-theorem-grid", main_theorem_grid},
      {"chain-relation", chain_relation},
      {"braid-relation", braid_relation},
      {"lemma-conjugation", lemma_conjugation},
      {"prop-generation", prop_generation},
      {"index-certificates", index_certificates},
      {"nielsen-schreier", nielsen_schreier},
      {"centrality-torsion", centrality_torsion},
      {"twist-intersection", twist_intersection},
      {"properties", properties},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name,
                                   const SuiteOptions& options) {
  std::vector<SuiteReport> reports;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) reports.push_back({suite, fn(options)});
  }
  if (reports.empty()) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  return reports;
}

}  // namespace twistsub::verification
