#include "twistsub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "twistsub/algebra.hpp"
#include "twistsub/representations.hpp"
#include "twistsub/serialization.hpp"
#include "twistsub/stallings.hpp"
#include "twistsub/torus.hpp"
#include "twistsub/verification.hpp"
#include "twistsub/word.hpp"

namespace twistsub::cli {

namespace {

// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string symbol(GroupClass g) {
  switch (g) {
    case GroupClass::Z: return "ℤ";
    case GroupClass::Z2: return "ℤ²";
    case GroupClass::F2: return "F₂";
    case GroupClass::B3: return "B₃";
    case GroupClass::SL2Z: return "SL₂(ℤ)";
    case GroupClass::Z2xZ: return "ℤ₂ × ℤ";
  }
  return "?";
}

std::string human_word(const TwistWord& w) {
  return w.empty() ? "ε" : w.to_string();
}

struct Common {
  bool human = false;
  std::size_t max_letters = kDefaultMaxLetters;

  OutputMode mode() const { return human ? OutputMode::Human : OutputMode::Json; }
};

void add_common(CLI::App* sub, Common& common, bool words) {
  sub->add_flag("--human", common.human,
                "Print human-readable text instead of JSON");
  if (words) {
    sub->add_option("--max-letters", common.max_letters,
                    "Cap on letters produced by expanding powers")
        ->check(CLI::PositiveNumber);
  }
}

struct ContextArgs {
  std::uint64_t intersection = 0;
  bool torus = false;
};

void add_context(CLI::App* sub, ContextArgs& ctx) {
  sub->add_option("--i", ctx.intersection, "Intersection number i(a, b)")
      ->required();
  sub->add_flag("--torus", ctx.torus, "The surface is the closed torus (needs --i 1)");
}

SurfaceContext make_context(const ContextArgs& args) {
  if (args.torus && args.intersection != 1) {
    throw UsageError("--torus is only meaningful with --i 1");
  }
  return SurfaceContext(args.intersection, args.torus);
}

struct XArgs {
  std::string form;
  std::int64_t k = 0;
};

void add_xspec(CLI::App* sub, XArgs& x) {
  sub->add_option("--form", x.form, "X = (ab)^k or (ba)^k")
      ->required()
      ->check(CLI::IsMember({"ab", "ba"}));
  sub->add_option("--k", x.k, "Exponent k")->required();
}

XSpec make_xspec(const XArgs& x) { return {parse_xform(x.form), x.k}; }

std::vector<TwistWord> parse_words(const std::vector<std::string>& texts,
                                   const Common& common) {
  std::vector<TwistWord> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t, common.max_letters));
  return out;
}

torus::CurveClass parse_curve(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("curve '" + text + "' must be written p,q");
  }
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("curve '" + text + "' must be written p,q");
    }
    return v;
  };
  const std::string_view view(text);
  return {parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1))};
}

Json curve_json(const torus::CurveClass& c) { return Json::array({c.p(), c.q()}); }

template <typename Ring>
Json matrix_json(const Mat2<Ring>& m) {
  using twistsub::to_string;
  return Json::array({Json::array({to_string(m(0, 0)), to_string(m(0, 1))}),
                      Json::array({to_string(m(1, 0)), to_string(m(1, 1))})});
}

Outcome json_outcome(const Json& j, int code = 0) {
  return {code, dump_document(j), {}};
}

Outcome text_outcome(std::string text, int code = 0) {
  if (!text.empty() && text.back() != '\n') text += '\n';
  return {code, std::move(text), {}};
}

}  // namespace

std::string format_verdict(const Verdict& v, OutputMode mode,
                           const std::vector<Certificate>& certificates) {
  if (mode == OutputMode::Json) return dump_document(to_json(v, certificates));
  const std::string full = "⟨T_a,T_b⟩ ≅ " + symbol(v.full_group_class);
  std::string head = v.group_class == GroupClass::Z
                         ? "G = ⟨T_a⟩ ≅ ℤ"
                         : "G ≅ " + symbol(v.group_class);
  std::string line;
  if (std::holds_alternative<EqualToFullGroup>(v.relation)) {
    line = "G = " + full;
  } else if (const auto* f = std::get_if<ProperFiniteIndex>(&v.relation)) {
    line = head + ", index " + std::to_string(f->index) + " in " + full;
  } else {
    line = head + ", infinite index in " + full;
  }
  std::string out = line + "\n";
  for (const auto& c : certificates) {
    out += std::string("  [") + (c.passed ? "ok" : "MISMATCH") + "] " + c.name +
           ": " + c.observed + (c.derived ? " (derived)" : "") + "\n";
  }
  return out;
}

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Subgroups <X, T_a> of two-twist groups"};
  app.name("twistsub");
  app.require_subcommand(1);

  Common common;
  ContextArgs ctx_args;
  XArgs x_args;
  std::vector<std::string> words;

  auto* classify_cmd = app.add_subcommand("classify", "Classify G = <X, T_a>");
  add_xspec(classify_cmd, x_args);
  add_context(classify_cmd, ctx_args);
  add_common(classify_cmd, common, false);

  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two words are equal");
  add_context(eq_cmd, ctx_args);
  add_common(eq_cmd, common, true);
  eq_cmd->add_option("words", words, "Two words")->expected(2)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Freely reduce a word");
  add_common(reduce_cmd, common, true);
  reduce_cmd->add_option("words", words, "Word")->expected(1)->required();

  std::string rep_kind;
  auto* rep_cmd = app.add_subcommand("rep", "Image of a word in a representation");
  rep_cmd->add_option("--rep", rep_kind, "sl2, burau or exponent")
      ->required()
      ->check(CLI::IsMember({"sl2", "burau", "exponent"}));
  add_common(rep_cmd, common, true);
  rep_cmd->add_option("words", words, "Word")->expected(1)->required();

  auto* member_cmd = app.add_subcommand(
      "member", "Membership of a word in the subgroup of F2 generated by words");
  add_common(member_cmd, common, true);
  member_cmd->add_option("words", words, "Word followed by generators")
      ->required();

  bool lattice = false;
  bool dump = false;
  auto* index_cmd = app.add_subcommand("index", "Index and rank of a subgroup");
  index_cmd->add_flag("--lattice", lattice,
                      "Index of the exponent lattice of exactly two words in Z^2");
  index_cmd->add_flag("--dump", dump, "Include the folded graph");
  add_common(index_cmd, common, true);
  index_cmd->add_option("words", words, "Generators");

  auto* witness_cmd =
      app.add_subcommand("witness", "Word in X, Y that produces T_b");
  add_xspec(witness_cmd, x_args);
  add_common(witness_cmd, common, false);

  std::string direction = "x";
  auto* conj_cmd = app.add_subcommand("conj", "Conjugate of T_a by X or X^-1");
  add_xspec(conj_cmd, x_args);
  conj_cmd->add_option("--direction", direction, "x: X a X^-1, xinv: X^-1 a X")
      ->check(CLI::IsMember({"x", "xinv"}));
  add_common(conj_cmd, common, false);

  auto* torus_cmd = app.add_subcommand("torus", "Curves on the torus");
  torus_cmd->require_subcommand(1);
  std::string curve_u;
  std::string curve_v;
  std::string curve_w;
  std::int64_t twist_power = 1;
  auto* intersect_cmd =
      torus_cmd->add_subcommand("intersect", "Geometric intersection number");
  intersect_cmd->add_option("--u", curve_u, "Curve p,q")->required();
  intersect_cmd->add_option("--v", curve_v, "Curve p,q")->required();
  add_common(intersect_cmd, common, false);
  auto* twist_cmd = torus_cmd->add_subcommand("twist", "Twist w about v n times");
  twist_cmd->add_option("--v", curve_v, "Twist curve p,q")->required();
  twist_cmd->add_option("--w", curve_w, "Curve p,q")->required();
  twist_cmd->add_option("--n", twist_power, "Power of the twist");
  add_common(twist_cmd, common, false);
  auto* matrix_cmd =
      torus_cmd->add_subcommand("matrix", "Matrix of the twist about v");
  matrix_cmd->add_option("--v", curve_v, "Curve p,q")->required();
  add_common(matrix_cmd, common, false);

  std::string suite = "all";
  verification::SuiteOptions suite_options;
  std::int64_t kmax = 0;
  std::size_t count = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_choices = verification::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suite, "Suite name or all")
      ->check(CLI::IsMember(suite_choices));
  auto* kmax_opt = verify_cmd->add_option("--kmax", kmax, "Largest |k| tested")
                       ->check(CLI::PositiveNumber);
  auto* count_opt =
      verify_cmd->add_option("--count", count, "Randomized instances")
          ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", suite_options.seed, "Random seed");
  add_common(verify_cmd, common, false);

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str(), err.str()};
  }

  try {
    if (classify_cmd->parsed()) {
      const XSpec x = make_xspec(x_args);
      const SurfaceContext ctx = make_context(ctx_args);
      const CertificateBundle bundle = certify(x, ctx);
      return {0, format_verdict(bundle.verdict, common.mode(), bundle.certificates),
              {}};
    }

    if (eq_cmd->parsed()) {
      const SurfaceContext ctx = make_context(ctx_args);
      const auto w = parse_words(words, common);
      const bool equal = equal_in_context(w[0], w[1], ctx);
      const int code = equal ? 0 : 1;
      if (common.human) return text_outcome(equal ? "equal" : "not equal", code);
      Json j = Json::object();
      j["equal"] = equal;
      j["oracle"] = to_string(oracle_for(ctx));
      return json_outcome(j, code);
    }

    if (reduce_cmd->parsed()) {
      const TwistWord w = parse_words(words, common)[0];
      const TwistWord r = free_reduce(w);
      if (common.human) return text_outcome(human_word(r));
      Json j = Json::object();
      j["input"] = w.to_string();
      j["reduced"] = r.to_string();
      return json_outcome(j);
    }

    if (rep_cmd->parsed()) {
      const TwistWord w = parse_words(words, common)[0];
      Json j = Json::object();
      j["rep"] = rep_kind;
      std::string text;
      if (rep_kind == "sl2") {
        const IntMat2 m = eval_sl2(w);
        j["matrix"] = matrix_json(m);
        text = m.to_string();
      } else if (rep_kind == "burau") {
        const LaurentMat2 m = eval_burau(w);
        j["matrix"] = matrix_json(m);
        text = m.to_string();
      } else {
        const IntVec2 e = exponent_vector(w);
        j["exponent_vector"] = Json::array({e.first, e.second});
        text = "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
      }
      return common.human ? text_outcome(text) : json_outcome(j);
    }

    if (member_cmd->parsed()) {
      const auto w = parse_words(words, common);
      const std::vector<TwistWord> gens(w.begin() + 1, w.end());
      const bool in = member(build_subgroup_graph(gens), w[0]);
      const int code = in ? 0 : 1;
      if (common.human) return text_outcome(in ? "member" : "not a member", code);
      Json j = Json::object();
      j["member"] = in;
      return json_outcome(j, code);
    }

    if (index_cmd->parsed()) {
      const auto gens = parse_words(words, common);
      Json j = Json::object();
      if (lattice) {
        if (gens.size() != 2) throw UsageError("--lattice takes exactly two words");
        const Index idx =
            lattice_index(exponent_vector(gens[0]), exponent_vector(gens[1]));
        if (common.human) return text_outcome("index " + idx.to_string());
        j["index"] = idx.is_finite() ? Json(idx.value()) : Json("Infinite");
        return json_outcome(j);
      }
      const StallingsGraph g = build_subgroup_graph(gens);
      const IndexAndRank ir = index_and_rank(g);
      if (common.human) {
        std::string text = "index " + ir.index.to_string() + ", rank " +
                           std::to_string(ir.rank) + "\n";
        if (dump) text += g.dump();
        return text_outcome(text);
      }
      j["index"] = ir.index.is_finite() ? Json(ir.index.value()) : Json("Infinite");
      j["rank"] = ir.rank;
      j["vertices"] = g.vertex_count();
      if (dump) j["graph"] = g.dump();
      return json_outcome(j);
    }

    if (witness_cmd->parsed()) {
      const XSpec x = make_xspec(x_args);
      const MetaWord witness = generation_witness(x);
      const TwistWord image =
          substitute(witness, expand_xform(x), TwistWord{kA});
      const TwistWord reduced = free_reduce(image);
      const bool sl2 = equal_in_context(reduced, TwistWord{kB}, SurfaceContext(1, true));
      const bool burau = equal_in_context(reduced, TwistWord{kB}, SurfaceContext(1, false));
      const int code = sl2 && burau ? 0 : 1;
      if (common.human) {
        return text_outcome(to_string(witness) + " = " + human_word(reduced) +
                                " = b (sl2z: " + (sl2 ? "yes" : "no") +
                                ", burau: " + (burau ? "yes" : "no") + ")",
                            code);
      }
      Json j = Json::object();
      j["witness"] = to_string(witness);
      j["reduced"] = reduced.to_string();
      Json verified = Json::object();
      verified["sl2z"] = sl2;
      verified["burau"] = burau;
      j["equals_b"] = std::move(verified);
      return json_outcome(j, code);
    }

    if (conj_cmd->parsed()) {
      const XSpec x = make_xspec(x_args);
      const ConjClass c = conjugation_class(
          x, direction == "x" ? ConjDirection::ByX : ConjDirection::ByXInverse);
      if (common.human) return text_outcome(to_string(c));
      Json j = Json::object();
      j["conjugate"] = to_string(c);
      return json_outcome(j);
    }

    if (intersect_cmd->parsed()) {
      const auto n = torus::intersection(parse_curve(curve_u), parse_curve(curve_v));
      if (common.human) return text_outcome(std::to_string(n));
      Json j = Json::object();
      j["intersection"] = n;
      return json_outcome(j);
    }

    if (twist_cmd->parsed()) {
      const auto c =
          torus::twist_action(parse_curve(curve_v), parse_curve(curve_w), twist_power);
      if (common.human) return text_outcome(c.to_string());
      Json j = Json::object();
      j["curve"] = curve_json(c);
      return json_outcome(j);
    }

    if (matrix_cmd->parsed()) {
      const IntMat2 m = torus::twist_matrix(parse_curve(curve_v));
      if (common.human) return text_outcome(m.to_string());
      Json j = Json::object();
      j["matrix"] = matrix_json(m);
      return json_outcome(j);
    }

    if (verify_cmd->parsed()) {
      if (kmax_opt->count() > 0) suite_options.kmax = kmax;
      if (count_opt->count() > 0) suite_options.count = count;
      const auto reports = verification::run_suite(suite, suite_options);
      const bool all_passed = std::all_of(
          reports.begin(), reports.end(),
          [](const verification::SuiteReport& r) { return r.passed(); });
      const int code = all_passed ? 0 : 1;
      if (common.human) {
        std::string text;
        for (const auto& r : reports) {
          text += r.name + ": " + std::to_string(r.cases.size() - r.failures()) +
                  "/" + std::to_string(r.cases.size()) + " passed\n";
          for (const auto& c : r.cases) {
            text += std::string("  ") + (c.passed ? "PASS " : "FAIL ") + c.label;
            if (!c.detail.empty()) text += " (" + c.detail + ")";
            text += "\n";
          }
        }
        return text_outcome(text, code);
      }
      Json j = Json::object();
      j["passed"] = all_passed;
      Json suites = Json::array();
      for (const auto& r : reports) {
        Json s = Json::object();
        s["name"] = r.name;
        s["passed"] = r.passed();
        Json cases = Json::array();
        for (const auto& c : r.cases) {
          Json cj = Json::object();
          cj["label"] = c.label;
          cj["passed"] = c.passed;
          cj["detail"] = c.detail;
          cases.push_back(std::move(cj));
        }
        s["cases"] = std::move(cases);
        suites.push_back(std::move(s));
      }
      j["suites"] = std::move(suites);
      return json_outcome(j, code);
    }
  } catch (const ConsistencyError& e) {
    return {1, {}, std::string("twistsub: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    // Malformed words, out-of-range values, and inputs outside an
    // operation's preconditions.
    return {2, {}, std::string("twistsub: ") + e.what() + "\n"};
  }
  return {2, {}, "twistsub: no subcommand given\n"};
}

}  // namespace twistsub::cli
