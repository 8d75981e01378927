#include "selfref/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfref/core_shift.hpp"
#include "selfref/error.hpp"
#include "selfref/godel.hpp"
#include "selfref/json_io.hpp"
#include "selfref/lambda_fix.hpp"
#include "selfref/lawvere.hpp"
#include "selfref/lawvere_kernels.hpp"
#include "selfref/pair_text.hpp"
#include "selfref/reflexive_cat.hpp"
#include "selfref/smullyan.hpp"
#include "selfref/text_util.hpp"

namespace selfref::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaterializeLimit = 1'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool trace = false;
  std::optional<std::size_t> fuel;
  std::optional<std::size_t> max_len;
  bool materialize = false;
};

struct Outcome {
  json result;
  std::vector<std::string> lines;
  std::optional<json> trace;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// ---- pairs: shift, srt1, iterate

struct PairSource {
  std::string base;
  std::string category;
  std::string language;
  std::string arrow;
  bool lambda = false;
};

void add_pair_options(CLI::App* cmd, PairSource& src) {
  auto* b = cmd->add_option("--base", src.base, "built-in pair: " + join(shift::builtin_pair_names(), ", "));
  auto* c = cmd->add_option("--category", src.category, "pair definition file");
  auto* l = cmd->add_option("--language", src.language,
                            "formula S of the numbered language; the axiom is (code of S -> S)");
  b->excludes(c, l);
  c->excludes(l);
  cmd->add_option("--arrow", src.arrow, "reference arrow 'SRC -> DST' (default: the first axiom)");
  cmd->add_flag("--lambda", src.lambda, "treat the pair as a lambda pair");
}

godel::LMorphism parse_l_operand(std::string_view text) {
  godel::LMorphism out;
  bool first = true;
  std::string_view rest = text;
  while (true) {
    const auto at = rest.find("∘");
    const std::string_view part = text_util::trim(rest.substr(0, at));
    godel::LMorphism m;
    if (part.empty()) {
      throw Error(ErrorCode::EmptyFormula, "empty operand in '" + std::string(text) + "'");
    } else if (part == "#" || part == "♯") {
      m = godel::SharpOp{};
    } else if (part == "ε" || part == "1_O") {
      m = {};
    } else if (!part.empty() && std::isdigit(static_cast<unsigned char>(part.front()))) {
      m = godel::RunDecimal::parse_wire(part);
    } else {
      m = godel::parse(part);
    }
    out = first ? m : godel::compose_C(out, m);
    first = false;
    if (at == std::string_view::npos) break;
    rest = rest.substr(at + std::string_view("∘").size());
  }
  return out;
}

template <class Parse>
auto parse_arrow(std::string_view text, Parse&& parse_side) {
  std::string_view lhs, rhs;
  if (!text_util::split_on(text, {"->", "→"}, lhs, rhs)) {
    throw Error(ErrorCode::ParseError, "expected 'SRC -> DST', got '" + std::string(text) + "'");
  }
  using M = decltype(parse_side(lhs));
  return shift::RefArrow<M>{parse_side(lhs), parse_side(rhs)};
}

template <class B>
std::string show_arrow(const B& base, const shift::RefArrow<typename B::Morphism>& a) {
  return base.show(a.src) + " -> " + base.show(a.dst);
}

template <class Body>
Outcome with_pair(const PairSource& src, const Globals& g, Body&& body) {
  const shift::PairKind kind = shift::PairKind::Lambda;
  if (!src.language.empty()) {
    const auto f = godel::parse(src.language);
    auto pair = godel::srt_arrows_for_L({{godel::encode(f), f}});
    if (src.lambda) pair.set_kind(kind);
    const auto arrow = src.arrow.empty() ? pair.arrows().front()
                                         : parse_arrow(src.arrow, parse_l_operand);
    return body(pair, arrow);
  }
  if (src.base.empty() && src.category.empty()) {
    throw UsageError("one of --base, --category or --language is required");
  }
  shift::WordPair pair = src.category.empty() ? shift::builtin_pair(src.base)
                                              : shift::load_pair(read_file(src.category));
  if (src.lambda) pair.set_kind(kind);
  if (g.fuel) pair.mutable_base().set_rewrite_budget(*g.fuel);
  if (src.arrow.empty()) {
    if (pair.arrows().empty()) {
      throw Error(ErrorCode::InvalidArgument, "the pair has no axiom; pass --arrow");
    }
    return body(pair, pair.arrows().front());
  }
  const auto& base = pair.base();
  const auto arrow = parse_arrow(src.arrow, [&](std::string_view s) { return base.parse_word(s); });
  return body(pair, arrow);
}

Outcome cmd_shift(const PairSource& src, const Globals& g) {
  return with_pair(src, g, [](const auto& pair, const auto& arrow) {
    const auto& base = pair.base();
    auto shifted = shift::detail::shift_once(pair, arrow);
    using M = std::decay_t<decltype(arrow.src)>;
    shift::Derivation<M> d;
    d.steps.push_back({"axiom", arrow, ""});
    d.steps.push_back({"shift", shifted.arrow, shifted.note});
    return Outcome{arrow_json(shifted.arrow, base), {show_arrow(base, shifted.arrow)},
                   derivation_json(d, base)};
  });
}

Outcome cmd_srt1(const PairSource& src, const Globals& g) {
  return with_pair(src, g, [](const auto& pair, const auto& arrow) {
    const auto& base = pair.base();
    const auto d = shift::srt1(pair, arrow);
    return Outcome{arrow_json(d.conclusion(), base), {show_arrow(base, d.conclusion())},
                   derivation_json(d, base)};
  });
}

Outcome cmd_iterate(const PairSource& src, std::size_t n, const Globals& g) {
  return with_pair(src, g, [n](const auto& pair, const auto& arrow) {
    const auto& base = pair.base();
    const auto seq = shift::iterate_shift(pair, arrow, n);
    using M = std::decay_t<decltype(arrow.src)>;
    Outcome o;
    json arrows = json::array();
    shift::Derivation<M> d;
    d.steps.push_back({"axiom", arrow, ""});
    for (const auto& a : seq.arrows) {
      arrows.push_back(arrow_json(a, base));
      o.lines.push_back(show_arrow(base, a));
      d.steps.push_back({"shift", a, ""});
    }
    o.result = {{"arrows", arrows},
                {"stop_reason", seq.stop_reason ? json(*seq.stop_reason) : json(nullptr)}};
    if (seq.stop_reason) o.lines.push_back("stopped: " + *seq.stop_reason);
    o.trace = derivation_json(d, base);
    return o;
  });
}

// ---- smullyan

Outcome cmd_smullyan_report() {
  const auto d = smullyan::goedel_miniature_report();
  Outcome o;
  json steps = json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    steps.push_back({{"rule", s.rule}, {"note", s.note}});
    o.lines.push_back(std::to_string(i + 1) + ". " + s.rule + ": " + s.note);
  }
  o.result = {{"steps", steps},
              {"arrow", arrow_json(d.conclusion(), smullyan::StringMonoid{})},
              {"conclusion", d.steps.back().note}};
  o.trace = derivation_json(d, smullyan::StringMonoid{});
  return o;
}

Outcome cmd_smullyan_check(const std::string& model_file) {
  const auto model = smullyan::MachineModel::parse(read_file(model_file));
  const auto bad = smullyan::truthfulness_violations(model);
  const auto refuter = smullyan::MString::parse("~R~R");
  const auto sem = smullyan::semantics(refuter, model);
  json violations = json::array();
  for (const auto& s : bad) violations.push_back(s.str());
  Outcome o;
  o.result = {{"printed", model.printable.size()},
              {"truthful", bad.empty()},
              {"violations", violations},
              {"refuter", {{"string", refuter.str()},
                           {"printed", model.prints(refuter)},
                           {"semantics", smullyan::truth_name(sem)}}}};
  o.lines = {"printed: " + std::to_string(model.printable.size()),
             std::string("truthful: ") + (bad.empty() ? "yes" : "no"),
             "violations: " + std::to_string(bad.size()),
             std::string("~R~R printed: ") + (model.prints(refuter) ? "yes" : "no"),
             "~R~R semantics: " + std::string(smullyan::truth_name(sem))};
  return o;
}

Outcome cmd_smullyan_violations(const std::string& model_file) {
  const auto model = smullyan::MachineModel::parse(read_file(model_file));
  Outcome o;
  o.result = json::array();
  for (const auto& s : smullyan::truthfulness_violations(model)) {
    o.result.push_back(s.str());
    o.lines.push_back(s.str());
  }
  return o;
}

Outcome cmd_smullyan_arrow(const std::vector<std::string>& strings) {
  Outcome o;
  o.result = json::array();
  for (const auto& text : strings) {
    const auto s = smullyan::MString::parse(text);
    const auto c = smullyan::classify(s);
    const auto a = smullyan::reference_arrow(s);
    o.result.push_back({{"string", s.str()},
                        {"shape", smullyan::shape_name(c.shape)},
                        {"dst", a ? json(a->dst.str()) : json(nullptr)}});
    o.lines.push_back(a ? s.str() + " -> " + a->dst.str() : s.str() + ": not interpretable");
  }
  return o;
}

Outcome cmd_smullyan_sample(std::uint64_t models, std::uint64_t seed) {
  const auto st = smullyan::sample_models_parallel(models, seed);
  Outcome o;
  o.result = {{"models", st.models},
              {"raw_truthful", st.raw_truthful},
              {"raw_with_refuter", st.raw_with_refuter},
              {"refuter_witnessed", st.refuter_witnessed},
              {"truthful_checked", st.truthful_checked},
              {"truthful_excluding", st.truthful_excluding},
              {"truthful_refuter_true", st.truthful_refuter_true}};
  for (const auto& [k, v] : o.result.items()) o.lines.push_back(k + ": " + v.dump());
  return o;
}

// ---- godel

json number_json(const godel::RunDecimal& n, const Globals& g) {
  json j{{"number", n.to_wire()}, {"digit_length", n.digit_length().str()}};
  if (g.materialize) {
    if (auto digits = n.materialize(kMaterializeLimit)) j["digits"] = *digits;
  }
  return j;
}

std::string number_text(const godel::RunDecimal& n, const Globals& g, std::ostream& err) {
  if (g.materialize) {
    if (auto digits = n.materialize(kMaterializeLimit)) return *digits;
    err << "note: " << n.digit_length().str() << " digits exceeds the materialize limit; "
        << "printing run-length form\n";
  }
  return n.to_wire();
}

std::string formula_text(const godel::Formula& f, const Globals& g, std::ostream& err) {
  if (g.materialize) {
    std::uint64_t length = 0;
    bool small = true;
    for (const auto& t : f.tokens()) {
      const auto n = t.kind == godel::TokenKind::SlashRun ? t.count.to_u64() : std::optional<std::uint64_t>(1);
      if (!n || (length += *n) > kMaterializeLimit) small = false;
    }
    if (small) return godel::to_ascii(f);
    err << "note: formula exceeds the materialize limit; printing run-length form\n";
  }
  return godel::show(f);
}

Outcome cmd_godel_encode(const std::string& text, const Globals& g, std::ostream& err) {
  const auto f = godel::parse(text);
  const auto n = godel::encode(f);
  json r = number_json(n, g);
  r["formula"] = godel::show(f);
  return {r, {number_text(n, g, err)}, std::nullopt};
}

Outcome cmd_godel_decode(const std::vector<std::string>& tokens, const Globals& g,
                         std::ostream& err) {
  const auto n = godel::RunDecimal::parse_wire(join(tokens, " "));
  const auto f = godel::decode(n);
  json r{{"number", n.to_wire()}, {"formula", godel::show(f)}};
  return {r, {formula_text(f, g, err)}, std::nullopt};
}

Outcome cmd_godel_sharp(const std::vector<std::string>& tokens, const Globals& g,
                        std::ostream& err) {
  const auto n = godel::RunDecimal::parse_wire(join(tokens, " "));
  const auto s = godel::sharp_decimal(n);
  json r = number_json(s, g);
  r["input"] = n.to_wire();
  return {r, {number_text(s, g, err)}, std::nullopt};
}

std::string_view kind_name(godel::LMorphism::Kind k) {
  using K = godel::LMorphism::Kind;
  switch (k) {
    case K::Identity: return "identity";
    case K::Fml: return "formula";
    case K::Num: return "number";
    case K::Sharp: return "sharp";
    case K::Composite: return "composite";
  }
  return "?";
}

Outcome cmd_godel_compose(const std::vector<std::string>& operands) {
  std::optional<godel::LMorphism> acc;
  for (const auto& op : operands) {
    // A bare separator between shell words.
    if (text_util::trim(op) == "∘") continue;
    auto m = parse_l_operand(op);
    acc = acc ? godel::compose_C(*acc, m) : m;
  }
  if (!acc) throw Error(ErrorCode::EmptyFormula, "no operands");
  const std::string shown = godel::show(*acc);
  return {{{"result", shown}, {"kind", kind_name(acc->kind())}}, {shown}, std::nullopt};
}

Outcome cmd_self_refuter(const Globals& g, std::ostream& err) {
  const auto r = godel::build_self_refuter();
  json j = number_json(r.number, g);
  j["formula"] = godel::show(r.formula);
  j["seed"] = godel::show(r.seed);
  j["seed_number"] = r.seed_number.to_wire();
  j["code_matches"] = godel::encode(r.formula) == r.number;
  return {j,
          {"seed: " + godel::show(r.seed) + " = " + r.seed_number.to_wire(),
           "number: " + number_text(r.number, g, err),
           "formula: " + formula_text(r.formula, g, err),
           std::string("code of formula = number: ") + (j["code_matches"].get<bool>() ? "yes" : "no")},
          std::nullopt};
}

// ---- lawvere

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::InvalidMap, "labels are strings or integers, got " + v.dump());
}

lawvere::FinSet set_of(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw Error(ErrorCode::InvalidMap, std::string("'") + key + "' must be an array");
  }
  std::vector<std::string> labels;
  for (const auto& v : j[key]) labels.push_back(label_of(v));
  return lawvere::FinSet(std::move(labels));
}

struct LawvereInput {
  lawvere::CurriedMap F;
  std::optional<lawvere::FinMap> alpha;
};

LawvereInput load_lawvere(const std::string& path, std::optional<lawvere::FinSet> z_default) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  const auto X = set_of(j, "elements");
  const auto Z = j.contains("z_elements") || !z_default ? set_of(j, "z_elements") : *z_default;
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != X.size()) {
    throw Error(ErrorCode::InvalidMap, "'rows' must hold one row per element");
  }
  std::vector<std::size_t> table;
  for (const auto& row : j["rows"]) {
    if (!row.is_array() || row.size() != X.size()) {
      throw Error(ErrorCode::InvalidMap, "every row must have one entry per element");
    }
    for (const auto& v : row) table.push_back(Z.require(label_of(v)));
  }
  LawvereInput in{lawvere::CurriedMap::make(X, Z, std::move(table)), std::nullopt};
  if (j.contains("alpha")) {
    const json& a = j["alpha"];
    std::vector<std::size_t> t(Z.size());
    if (a.is_array() && a.size() == Z.size()) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = Z.require(label_of(a[i]));
    } else if (a.is_object() && a.size() == Z.size()) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!a.contains(Z.label(i))) throw Error(ErrorCode::InvalidMap, "alpha misses " + Z.label(i));
        t[i] = Z.require(label_of(a[Z.label(i)]));
      }
    } else {
      throw Error(ErrorCode::InvalidMap, "alpha must list one value per element of Z");
    }
    in.alpha = lawvere::FinMap::make(Z, Z, std::move(t));
  }
  return in;
}

std::vector<std::string> labels_of(const lawvere::FinMap& m) {
  std::vector<std::string> out;
  for (auto v : m.table) out.push_back(m.cod.label(v));
  return out;
}

Outcome cmd_lawvere(const std::string& path) {
  const auto in = load_lawvere(path, std::nullopt);
  if (!in.alpha) throw Error(ErrorCode::InvalidMap, "the input needs an 'alpha' map on Z");
  const auto& F = in.F;
  const auto C = lawvere::cantor_diagonal(F, *in.alpha);
  const auto rep = lawvere::find_representation(F, C);
  const bool delta_agrees = lawvere::diagonal_via_delta(F, *in.alpha) == C;
  std::optional<bool> surjective;
  try {
    surjective = lawvere::is_surjective(F);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
  }
  Outcome o;
  json fixed = nullptr;
  bool not_surjective = false;
  try {
    const auto fp = lawvere::lawvere_fixed_point(F, *in.alpha);
    fixed = {{"value", F.cod_base.label(fp.value)}, {"witness", F.dom.label(fp.witness)}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSurjective) throw;
    not_surjective = true;
  }
  o.result = {{"diagonal", labels_of(C)},
              {"representation", rep ? json(F.dom.label(*rep)) : json(nullptr)},
              {"fixed_point", fixed},
              {"not_surjective", not_surjective},
              {"surjective", surjective ? json(*surjective) : json(nullptr)},
              {"delta_agrees", delta_agrees}};
  o.lines.push_back("diagonal: " + join(labels_of(C), " "));
  o.lines.push_back("representation: " + (rep ? F.dom.label(*rep) : std::string("none")));
  o.lines.push_back(fixed.is_null() ? std::string("fixed point: none (F is not surjective)")
                                    : "fixed point: " + fixed["value"].get<std::string>() +
                                          " (witness " + fixed["witness"].get<std::string>() + ")");
  o.lines.push_back("surjective: " + (surjective ? std::string(*surjective ? "yes" : "no")
                                                 : std::string("unknown (function space too large)")));
  o.lines.push_back(std::string("delta form agrees: ") + (delta_agrees ? "yes" : "no"));
  return o;
}

std::vector<std::size_t> parse_alpha_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  for (auto tok : text_util::split_ws(normalized)) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::InvalidMap, "alpha entries are indices into Z, got '" + std::string(tok) + "'");
    }
    out.push_back(v);
  }
  return out;
}

Outcome sweep_outcome(std::size_t nx, const std::vector<std::size_t>& alpha, bool with_delta) {
  const auto st = lawvere::sweep_parallel(nx, alpha);
  Outcome o;
  o.result = {{"x_size", nx},
              {"z_size", alpha.size()},
              {"tables", st.tables},
              {"representable", st.representable},
              {"representations", st.representations},
              {"fixed_points", st.fixed_points},
              {"surjective", st.surjective}};
  if (with_delta) o.result["delta_mismatches"] = lawvere::delta_mismatches_parallel(nx, alpha);
  for (const auto& [k, v] : o.result.items()) o.lines.push_back(k + ": " + v.dump());
  return o;
}

Outcome cmd_threeval(const std::string& path) {
  const auto in = load_lawvere(path, lawvere::tri_values());
  const auto r = lawvere::three_valued_diagonal_analysis(in.F);
  std::vector<std::string> reps;
  for (auto z : r.representations) reps.push_back(in.F.dom.label(z));
  Outcome o;
  o.result = {{"diagonal", labels_of(r.diagonal)}, {"representations", reps}, {"all_j", r.all_j}};
  o.lines = {"diagonal: " + join(labels_of(r.diagonal), " "),
             "representations: " + (reps.empty() ? std::string("none") : join(reps, " ")),
             std::string("diagonal value J at every representation: ") + (r.all_j ? "yes" : "no")};
  return o;
}

// ---- lambda

void install_defs(lambda::Rewriter& r, const std::vector<std::string>& defs) {
  for (const auto& d : defs) {
    std::string_view head, body;
    if (!text_util::split_on(d, {"="}, head, body)) {
      throw Error(ErrorCode::ParseError, "definition '" + d + "' is not 'NAME VAR = BODY'");
    }
    const auto names = text_util::split_ws(head);
    if (names.size() != 2) throw Error(ErrorCode::ParseError, "definition '" + d + "' needs NAME VAR");
    r.define(std::string(names[0]), std::string(names[1]), lambda::parse_term(body, names[1]));
  }
}

std::string show_def(const lambda::ReflexiveDef& d) {
  return d.name + " " + d.var + " => " + lambda::show(d.body);
}

json def_json(const lambda::ReflexiveDef& d) {
  return {{"name", d.name}, {"var", d.var}, {"body", lambda::show(d.body)}};
}

lambda::Rewriter make_rewriter(const std::vector<std::string>& defs, const Globals& g) {
  lambda::Rewriter r(g.fuel.value_or(lambda::Rewriter::kDefaultFuel));
  install_defs(r, defs);
  return r;
}

Outcome cmd_lambda_define(const std::string& body, const std::string& var, const std::string& name,
                          const std::vector<std::string>& defs, const Globals& g) {
  auto r = make_rewriter(defs, g);
  const auto t = lambda::parse_term(body, var);
  if (name.empty()) {
    r.reflexive_name(t, var);
  } else {
    r.define(name, var, t);
  }
  const auto& d = r.defs().back();
  return {def_json(d), {show_def(d)}, std::nullopt};
}

Outcome cmd_lambda_fixpoint(const std::string& f_text, const std::vector<std::string>& defs,
                            const Globals& g) {
  auto r = make_rewriter(defs, g);
  const auto F = lambda::parse_term(f_text);
  const auto gg = lambda::fixed_point(F, r);
  const auto one = lambda::reduce(gg, r, 1);
  const bool holds = one.term == lambda::Term::apply(F, gg);
  const auto& d = r.defs().back();
  Outcome o;
  o.result = {{"definition", def_json(d)},
              {"fixed_point", lambda::show(gg)},
              {"one_step", lambda::show(one.term)},
              {"holds", holds}};
  o.lines = {show_def(d), "fixed point: " + lambda::show(gg),
             lambda::show(gg) + " => " + lambda::show(one.term),
             std::string("fixed point law: ") + (holds ? "holds" : "fails")};
  return o;
}

Outcome cmd_lambda_reduce(const std::string& term, std::optional<std::size_t> steps,
                          const std::vector<std::string>& defs, const Globals& g) {
  const auto r = make_rewriter(defs, g);
  auto t = lambda::parse_term(term);
  const std::size_t limit = std::min(steps.value_or(r.fuel()), r.fuel());
  json trace_steps = json::array();
  lambda::Reduction red{t};
  // One firing at a time so the trace records every intermediate term.
  for (std::size_t i = 0; i < limit; ++i) {
    auto next = lambda::reduce(red.term, r, 1);
    if (next.steps_used == 0) break;
    red.term = next.term;
    ++red.steps_used;
    trace_steps.push_back({{"rule", "rewrite"}, {"term", lambda::show(red.term)}});
  }
  const auto tail = lambda::reduce(red.term, r, 0);
  red.normal_form = tail.normal_form;
  red.fuel_exhausted = !tail.normal_form;
  Outcome o;
  o.result = {{"term", lambda::show(red.term)},
              {"steps_used", red.steps_used},
              {"normal_form", red.normal_form},
              {"fuel_exhausted", red.fuel_exhausted}};
  o.lines = {lambda::show(red.term),
             "steps: " + std::to_string(red.steps_used) +
                 (red.normal_form ? " (normal form)" : " (stopped at the step limit)")};
  o.trace = json{{"steps", trace_steps}};
  return o;
}

// ---- reflexive

reflexive::ArcTable load_diagram(const std::string& diagram) {
  if (diagram == "trefoil") return reflexive::trefoil_table();
  if (diagram == "link") return reflexive::link_table();
  return reflexive::ArcTable::parse(read_file(diagram));
}

Outcome cmd_reflexive_build(const std::string& diagram) {
  const auto d = reflexive::build(load_diagram(diagram));
  json gens = json::array();
  Outcome o;
  o.lines.push_back("objects: " + join(d.base().objects(), " "));
  for (const auto& a : d.table.arcs) {
    gens.push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
    o.lines.push_back(a.name + ": " + a.dom + " -> " + a.cod);
  }
  const bool refl = reflexive::is_reflexive(d);
  o.result = {{"objects", d.base().objects()}, {"generators", gens}, {"reflexive", refl}};
  o.lines.push_back(std::string("reflexive: ") + (refl ? "yes" : "no"));
  return o;
}

Outcome cmd_reflexive_check(const std::string& diagram) {
  const bool refl = reflexive::is_reflexive(reflexive::build(load_diagram(diagram)));
  return {{{"reflexive", refl}}, {std::string("reflexive: ") + (refl ? "yes" : "no")}, std::nullopt};
}

Outcome cmd_reflexive_enumerate(const std::string& diagram, const Globals& g) {
  const auto d = reflexive::build(load_diagram(diagram));
  const auto words = reflexive::enumerate_composites(d, g.max_len.value_or(2));
  Outcome o;
  json list = json::array();
  for (const auto& w : words) {
    const auto shown = d.base().show(w);
    list.push_back({{"word", shown}, {"dom", w.dom()}, {"cod", w.cod()}});
    o.lines.push_back(shown + ": " + w.dom() + " -> " + w.cod());
  }
  o.result = {{"count", words.size()}, {"words", list}};
  return o;
}

// ---- output

void print_trace(const json& trace, std::ostream& out) {
  std::size_t i = 0;
  for (const auto& s : trace["steps"]) {
    out << ++i << ". " << s["rule"].get<std::string>() << ": ";
    if (s.contains("src_word")) {
      out << s["src_word"].get<std::string>() << " -> " << s["dst_word"].get<std::string>();
    } else if (s.contains("term")) {
      out << s["term"].get<std::string>();
    }
    if (s.contains("note")) out << "  (" << s["note"].get<std::string>() << ")";
    out << '\n';
  }
}

void emit(const Outcome& o, const Globals& g, std::ostream& out) {
  if (g.json) {
    json env{{"status", "ok"}, {"result", o.result}};
    if (g.trace && o.trace) env["trace"] = *o.trace;
    out << env.dump(2) << '\n';
    return;
  }
  if (g.trace && o.trace) {
    print_trace(*o.trace, out);
    if (!o.lines.empty()) out << '\n';
  }
  for (const auto& line : o.lines) out << line << '\n';
}

void emit_error(std::string_view code, const std::string& message, bool as_json,
                std::ostream& out, std::ostream& err) {
  if (as_json) {
    out << json{{"status", "error"}, {"error", {{"code", code}, {"message", message}}}}.dump(2) << '\n';
  }
  err << "error [" << code << "]: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Shifts, diagonals and fixed points of self-reference", "selfref"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  app.add_flag("--json", g.json, "print a JSON envelope");
  app.add_flag("--trace", g.trace, "include the derivation trace");
  app.add_option("--fuel", g.fuel, "rewrite step budget");
  app.add_option("--max-len", g.max_len, "maximum word length for enumerations");
  app.add_flag("--materialize", g.materialize, "print full digit strings up to 10^6 digits");

  PairSource pair_src;
  std::size_t iterate_n = 1;
  auto* shift_cmd = app.add_subcommand("shift", "apply the indicative shift once");
  add_pair_options(shift_cmd, pair_src);
  auto* srt1_cmd = app.add_subcommand("srt1", "derive (♯g -> F♯g) from (g -> F♯)");
  add_pair_options(srt1_cmd, pair_src);
  auto* iterate_cmd = app.add_subcommand("iterate", "apply the indicative shift n times");
  add_pair_options(iterate_cmd, pair_src);
  iterate_cmd->add_option("--n", iterate_n, "number of shifts")->check(CLI::PositiveNumber);

  std::string model_file;
  std::vector<std::string> smullyan_strings;
  std::uint64_t sample_models = 1000;
  std::uint64_t sample_seed = 1;
  auto* smullyan_cmd = app.add_subcommand("smullyan", "Smullyan's printing machine");
  smullyan_cmd->require_subcommand(1);
  auto* sm_report = smullyan_cmd->add_subcommand("report", "argue that ~R~R is true but unprintable");
  auto* sm_check = smullyan_cmd->add_subcommand("check", "check a machine model for truthfulness");
  sm_check->add_option("--model", model_file, "file with one printable string per line")->required();
  auto* sm_viol = smullyan_cmd->add_subcommand("violations", "list printed strings that are false");
  sm_viol->add_option("--model", model_file, "file with one printable string per line")->required();
  auto* sm_arrow = smullyan_cmd->add_subcommand("arrow", "reference arrows of strings");
  sm_arrow->add_option("strings", smullyan_strings, "strings over ~ P R [ ]")->required();
  auto* sm_sample = smullyan_cmd->add_subcommand("sample", "sample random models of length <= 4");
  sm_sample->add_option("--models", sample_models, "number of models");
  sm_sample->add_option("--seed", sample_seed, "random seed");

  std::string formula;
  std::vector<std::string> number_tokens;
  std::vector<std::string> operands;
  auto* enc = app.add_subcommand("godel-encode", "Gödel number of a formula");
  enc->add_option("formula", formula, "formula over ( ) ~ P x | #")->required();
  auto* dec = app.add_subcommand("godel-decode", "formula with a given Gödel number");
  dec->add_option("number", number_tokens, "number in run-length form, e.g. 341 6x5 2")->required();
  auto* sharp = app.add_subcommand("godel-sharp", "♯ on decimal numbers");
  sharp->add_option("number", number_tokens, "number in run-length form")->required();
  auto* comp = app.add_subcommand("godel-compose", "compose morphisms of the language, left after right");
  comp->add_option("operands", operands, "formulas, numbers or #")->required();
  auto* refuter = app.add_subcommand("self-refuter", "build ~P(♯|^341752) and its number");

  std::string lawvere_input;
  std::size_t sweep_nx = 0;
  std::string sweep_alpha;
  auto* law = app.add_subcommand("lawvere", "diagonal, representation and fixed point of F and alpha");
  auto* law_in = law->add_option("--input", lawvere_input, "JSON {elements, z_elements, rows, alpha}");
  auto* law_sweep = law->add_option("--sweep", sweep_nx, "sweep every table over |X| = N instead");
  law->add_option("--alpha", sweep_alpha, "alpha as indices into Z for --sweep, e.g. '1 0'");
  law_in->excludes(law_sweep);
  auto* tri = app.add_subcommand("threeval", "diagonal analysis over Z = {0, 1, J}");
  auto* tri_in = tri->add_option("--input", lawvere_input, "JSON {elements, rows}");
  auto* tri_sweep = tri->add_option("--sweep", sweep_nx, "sweep every table over |X| = N instead");
  tri_in->excludes(tri_sweep);

  std::vector<std::string> defs;
  std::string term;
  std::string var = "x";
  std::string def_name;
  std::optional<std::size_t> steps;
  auto* lam = app.add_subcommand("lambda", "reflexive definitions and fixed points");
  lam->require_subcommand(1);
  lam->add_option("--def", defs, "definition 'NAME VAR = BODY' (repeatable)")->allow_extra_args(false);
  auto* lam_define = lam->add_subcommand("define", "name a body by reflexivity");
  lam_define->add_option("body", term, "body term, e.g. 'a((bx)x)'")->required();
  lam_define->add_option("--var", var, "the body's variable");
  lam_define->add_option("--name", def_name, "name to use instead of a fresh one");
  auto* lam_fix = lam->add_subcommand("fixpoint", "Church-Curry fixed point gg of F");
  lam_fix->add_option("F", term, "term F")->required();
  auto* lam_reduce = lam->add_subcommand("reduce", "leftmost-outermost rewriting");
  lam_reduce->add_option("term", term, "term to reduce")->required();
  lam_reduce->add_option("--steps", steps, "maximum number of rule firings");

  std::string diagram = "trefoil";
  auto* refl = app.add_subcommand("reflexive", "reflexive categories from arc tables");
  refl->require_subcommand(1);
  refl->add_option("--diagram", diagram, "trefoil, link, or an arc table file");
  auto* refl_build = refl->add_subcommand("build", "build the category of a diagram");
  auto* refl_check = refl->add_subcommand("check", "check reflexivity");
  auto* refl_enum = refl->add_subcommand("enumerate", "list composite morphisms up to --max-len");

  const bool json_requested = std::find(args.begin(), args.end(), "--json") != args.end();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    if (json_requested) {
      out << json{{"status", "error"}, {"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump(2)
          << '\n';
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    Outcome o;
    if (shift_cmd->parsed()) {
      o = cmd_shift(pair_src, g);
    } else if (srt1_cmd->parsed()) {
      o = cmd_srt1(pair_src, g);
    } else if (iterate_cmd->parsed()) {
      o = cmd_iterate(pair_src, iterate_n, g);
    } else if (sm_report->parsed()) {
      o = cmd_smullyan_report();
    } else if (sm_check->parsed()) {
      o = cmd_smullyan_check(model_file);
    } else if (sm_viol->parsed()) {
      o = cmd_smullyan_violations(model_file);
    } else if (sm_arrow->parsed()) {
      o = cmd_smullyan_arrow(smullyan_strings);
    } else if (sm_sample->parsed()) {
      o = cmd_smullyan_sample(sample_models, sample_seed);
    } else if (enc->parsed()) {
      o = cmd_godel_encode(formula, g, err);
    } else if (dec->parsed()) {
      o = cmd_godel_decode(number_tokens, g, err);
    } else if (sharp->parsed()) {
      o = cmd_godel_sharp(number_tokens, g, err);
    } else if (comp->parsed()) {
      o = cmd_godel_compose(operands);
    } else if (refuter->parsed()) {
      o = cmd_self_refuter(g, err);
    } else if (law->parsed()) {
      if (sweep_nx > 0) {
        if (sweep_alpha.empty()) throw UsageError("--sweep needs --alpha");
        o = sweep_outcome(sweep_nx, parse_alpha_indices(sweep_alpha), true);
      } else if (!lawvere_input.empty()) {
        o = cmd_lawvere(lawvere_input);
      } else {
        throw UsageError("lawvere needs --input FILE or --sweep N");
      }
    } else if (tri->parsed()) {
      if (sweep_nx > 0) {
        o = sweep_outcome(sweep_nx, {1, 0, 2}, false);
      } else if (!lawvere_input.empty()) {
        o = cmd_threeval(lawvere_input);
      } else {
        throw UsageError("threeval needs --input FILE or --sweep N");
      }
    } else if (lam_define->parsed()) {
      o = cmd_lambda_define(term, var, def_name, defs, g);
    } else if (lam_fix->parsed()) {
      o = cmd_lambda_fixpoint(term, defs, g);
    } else if (lam_reduce->parsed()) {
      o = cmd_lambda_reduce(term, steps, defs, g);
    } else if (refl_build->parsed()) {
      o = cmd_reflexive_build(diagram);
    } else if (refl_check->parsed()) {
      o = cmd_reflexive_check(diagram);
    } else if (refl_enum->parsed()) {
      o = cmd_reflexive_enumerate(diagram, g);
    }
    emit(o, g, out);
    return 0;
  } catch (const UsageError& e) {
    emit_error("UsageError", e.what(), g.json, out, err);
    err << app.help();
    return 2;
  } catch (const Error& e) {
    emit_error(code_name(e.code()), e.what(), g.json, out, err);
    return 1;
  } catch (const std::exception& e) {
    emit_error("Internal", e.what(), g.json, out, err);
    return 1;
  }
}

}  // namespace selfref::cli
