#include "selfref/smullyan.hpp"

#include <random>
#include <stdexcept>

#include "selfref/text_util.hpp"

namespace selfref::smullyan {

namespace {

constexpr std::string_view kAlphabet = "~PR[]";

const MString& refuter() {
  static const MString s = MString::parse("~R~R");
  return s;
}

MString bracket(std::string_view head, const MString& body) {
  return MString::parse(std::string(head) + "[" + body.str() + "]");
}

void require(bool cond, const char* claim) {
  if (!cond) throw std::logic_error(std::string("miniature report check failed: ") + claim);
}

}  // namespace

MString MString::parse(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i).starts_with("∼")) {
      out += '~';
      i += std::string_view("∼").size() - 1;
      continue;
    }
    if (kAlphabet.find(text[i]) == std::string_view::npos) {
      throw Error(ErrorCode::InvalidSymbol,
                  "'" + std::string(1, text[i]) + "' is not in the alphabet {~, P, R, [, ]}");
    }
    out += text[i];
  }
  return MString(std::move(out));
}

Classification classify(const MString& s) {
  const std::string_view v = s.str();
  auto rest = [&](std::size_t n) { return MString::parse(v.substr(n)); };
  if (v.starts_with("~P")) return {Shape::NegP, rest(2)};
  if (v.starts_with("~R")) return {Shape::NegR, rest(2)};
  if (v.starts_with("P")) return {Shape::P, rest(1)};
  if (v.starts_with("R")) return {Shape::R, rest(1)};
  return {Shape::NotInterpretable, {}};
}

std::string_view shape_name(Shape shape) {
  switch (shape) {
    case Shape::NotInterpretable: return "NotInterpretable";
    case Shape::P: return "P";
    case Shape::NegP: return "NegP";
    case Shape::R: return "R";
    case Shape::NegR: return "NegR";
  }
  return "?";
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::NoMeaning: return "NoMeaning";
  }
  return "?";
}

MachineModel MachineModel::parse(std::string_view text) {
  MachineModel m;
  for (auto line : text_util::split_lines(text)) {
    line = text_util::trim(line);
    if (line.empty() || line.front() == '#') continue;
    m.printable.insert(MString::parse(line));
  }
  return m;
}

std::optional<shift::RefArrow<MString>> reference_arrow(const MString& s) {
  const auto c = classify(s);
  switch (c.shape) {
    case Shape::P: return shift::RefArrow<MString>{s, bracket("P", c.rest)};
    case Shape::NegP: return shift::RefArrow<MString>{s, bracket("~P", c.rest)};
    case Shape::R: return shift::RefArrow<MString>{s, bracket("P", c.rest + c.rest)};
    case Shape::NegR: return shift::RefArrow<MString>{s, bracket("~P", c.rest + c.rest)};
    case Shape::NotInterpretable: break;
  }
  return std::nullopt;
}

Truth semantics(const MString& s, const MachineModel& m) {
  auto truth = [](bool b) { return b ? Truth::True : Truth::False; };
  const auto c = classify(s);
  switch (c.shape) {
    case Shape::P: return truth(m.prints(c.rest));
    case Shape::NegP: return truth(!m.prints(c.rest));
    case Shape::R: return truth(m.prints(c.rest + c.rest));
    case Shape::NegR: return truth(!m.prints(c.rest + c.rest));
    case Shape::NotInterpretable: break;
  }
  return Truth::NoMeaning;
}

Truth assertion_truth(const MString& assertion, const MachineModel& m) {
  std::string_view v = assertion.str();
  bool negated = false;
  if (v.starts_with("~")) {
    negated = true;
    v.remove_prefix(1);
  }
  if (!v.starts_with("P[") || !v.ends_with("]")) return Truth::NoMeaning;
  const bool printed = m.prints(MString::parse(v.substr(2, v.size() - 3)));
  return printed != negated ? Truth::True : Truth::False;
}

std::set<MString> truthfulness_violations(const MachineModel& m) {
  std::set<MString> out;
  for (const auto& s : m.printable) {
    if (semantics(s, m) == Truth::False) out.insert(s);
  }
  return out;
}

MachineModel prune_to_truthful(MachineModel m) {
  for (auto bad = truthfulness_violations(m); !bad.empty(); bad = truthfulness_violations(m)) {
    for (const auto& s : bad) m.printable.erase(s);
  }
  return m;
}

MString StringMonoid::sharp_after(const MString& s) const {
  throw Error(ErrorCode::NoSharpGenerator, "the Smullyan monoid has no sharp (at " + s.str() + ")");
}

std::vector<MString> all_strings(std::size_t max_len) {
  std::vector<MString> out{MString{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : kAlphabet) out.push_back(out[i] + MString::parse(std::string(1, c)));
    }
    begin = end;
  }
  return out;
}

SmullyanPair smullyan_pair(std::size_t max_len) {
  SmullyanPair pair{StringMonoid{}};
  for (const auto& s : all_strings(max_len)) {
    if (auto arrow = reference_arrow(s)) pair.add_arrow(std::move(*arrow));
  }
  return pair;
}

shift::Derivation<MString> goedel_miniature_report() {
  const MString& s = refuter();
  const auto c = classify(s);
  require(c.shape == Shape::NegR && c.rest == MString::parse("~R"), "~R~R is ~R applied to ~R");
  const auto arrow = reference_arrow(s);
  require(arrow.has_value(), "~R~R has a reference arrow");

  const MachineModel silent{};
  const MachineModel printing{{s}};
  require(semantics(s, silent) == Truth::True, "~R~R is true when it is not printed");
  require(semantics(s, printing) == Truth::False, "~R~R is false when it is printed");
  require(assertion_truth(arrow->dst, printing) == semantics(s, printing),
          "the arrow's codomain carries the same truth condition");
  const auto witnesses = truthfulness_violations(printing);
  require(witnesses.contains(s), "printing ~R~R is a truthfulness violation");

  shift::Derivation<MString> d;
  const std::string x = c.rest.str();
  d.steps.push_back({"classify", *arrow, "~R~R has the form ~RX with X = " + x});
  d.steps.push_back({"axiom", *arrow, "rule ~RX -> ~P[XX] with X = " + x + " gives ~R~R -> ~P[~R~R]"});
  d.steps.push_back({"semantics", *arrow, "~R~R is true in a model iff ~R~R is not printable"});
  d.steps.push_back({"violation", *arrow,
                     "if ~R~R is printed it is false, so the machine prints a falsehood (witness ~R~R)"});
  d.steps.push_back({"truthful", *arrow, "hence no truthful machine prints ~R~R"});
  d.steps.push_back({"conclusion", *arrow, "~R~R is true but unprintable"});
  return d;
}

namespace {

MachineModel sample_model(const std::vector<MString>& universe, std::uint64_t seed,
                          std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  // Densities from sparse to half-full; half the models are forced to print ~R~R.
  std::uniform_real_distribution<double> density(0.0, 0.5);
  std::bernoulli_distribution coin(0.5);
  const double p = density(rng);
  std::bernoulli_distribution include(p);
  MachineModel m;
  for (const auto& s : universe) {
    if (include(rng)) m.printable.insert(s);
  }
  if (coin(rng)) m.printable.insert(refuter());
  return m;
}

SamplingStats examine(const MachineModel& raw) {
  SamplingStats st;
  st.models = 1;
  const auto raw_violations = truthfulness_violations(raw);
  if (raw_violations.empty()) ++st.raw_truthful;
  if (raw.prints(refuter())) {
    ++st.raw_with_refuter;
    if (raw_violations.contains(refuter())) ++st.refuter_witnessed;
  }
  const MachineModel truthful = prune_to_truthful(raw);
  if (is_truthful(truthful)) {
    ++st.truthful_checked;
    if (!truthful.prints(refuter())) ++st.truthful_excluding;
    if (semantics(refuter(), truthful) == Truth::True) ++st.truthful_refuter_true;
    st.truthful_printed += truthful.printable.size();
  }
  return st;
}

void accumulate(SamplingStats& into, const SamplingStats& s) {
  into.models += s.models;
  into.raw_truthful += s.raw_truthful;
  into.raw_with_refuter += s.raw_with_refuter;
  into.refuter_witnessed += s.refuter_witnessed;
  into.truthful_checked += s.truthful_checked;
  into.truthful_excluding += s.truthful_excluding;
  into.truthful_refuter_true += s.truthful_refuter_true;
  into.truthful_printed += s.truthful_printed;
}

}  // namespace

SamplingStats sample_models_serial(std::uint64_t count, std::uint64_t seed) {
  const auto universe = all_strings(4);
  SamplingStats total;
  for (std::uint64_t i = 0; i < count; ++i) accumulate(total, examine(sample_model(universe, seed, i)));
  return total;
}

SamplingStats sample_models_parallel(std::uint64_t count, std::uint64_t seed) {
  const auto universe = all_strings(4);
  SamplingStats total;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    SamplingStats local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      accumulate(local, examine(sample_model(universe, seed, static_cast<std::uint64_t>(i))));
    }
#pragma omp critical
    accumulate(total, local);
  }
  return total;
}

}  // namespace selfref::smullyan
