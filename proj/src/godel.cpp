#include "selfref/godel.hpp"

#include <algorithm>
#include <stdexcept>

#include "selfref/error.hpp"
#include "selfref/text_util.hpp"

namespace selfref::godel {

namespace {

constexpr std::uint64_t kMaxExpandedRun = 10'000'000;
constexpr std::uint64_t kMaxValueDigits = 100'000'000;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

char digit_of(TokenKind kind) {
  switch (kind) {
    case TokenKind::LParen: return '1';
    case TokenKind::RParen: return '2';
    case TokenKind::Tilde: return '3';
    case TokenKind::P: return '4';
    case TokenKind::Var: return '5';
    case TokenKind::SlashRun: return '6';
    case TokenKind::Sharp: return '7';
  }
  return '0';
}

TokenKind kind_of(char digit) {
  switch (digit) {
    case '1': return TokenKind::LParen;
    case '2': return TokenKind::RParen;
    case '3': return TokenKind::Tilde;
    case '4': return TokenKind::P;
    case '5': return TokenKind::Var;
    case '6': return TokenKind::SlashRun;
    default: return TokenKind::Sharp;
  }
}

char ascii_of(TokenKind kind) {
  switch (kind) {
    case TokenKind::LParen: return '(';
    case TokenKind::RParen: return ')';
    case TokenKind::Tilde: return '~';
    case TokenKind::P: return 'P';
    case TokenKind::Var: return 'x';
    case TokenKind::SlashRun: return '|';
    case TokenKind::Sharp: return '#';
  }
  return '?';
}

LToken plain(TokenKind kind) { return {kind, DecimalCount{}}; }

}  // namespace

// RunDecimal

RunDecimal RunDecimal::from_runs(std::vector<DigitRun> runs) {
  RunDecimal out;
  for (auto& run : runs) {
    if (!is_digit(run.digit)) {
      throw Error(ErrorCode::InvalidNumber, "'" + std::string(1, run.digit) + "' is not a digit");
    }
    if (run.count.is_zero()) continue;
    if (!out.runs_.empty() && out.runs_.back().digit == run.digit) {
      out.runs_.back().count += run.count;
    } else {
      out.runs_.push_back(std::move(run));
    }
  }
  if (out.runs_.empty()) throw Error(ErrorCode::InvalidNumber, "a number needs at least one digit");
  if (out.runs_.front().digit == '0') {
    throw Error(ErrorCode::InvalidNumber, "leading zero (numbers are positive)");
  }
  return out;
}

RunDecimal RunDecimal::from_digits(std::string_view digits) {
  std::vector<DigitRun> runs;
  for (char c : digits) {
    if (!is_digit(c)) {
      throw Error(ErrorCode::InvalidNumber, "'" + std::string(digits) + "' is not a decimal number");
    }
    runs.push_back({c, DecimalCount{1}});
  }
  return from_runs(std::move(runs));
}

RunDecimal RunDecimal::from_count(const DecimalCount& value) { return from_digits(value.str()); }

RunDecimal RunDecimal::parse_wire(std::string_view text) {
  std::vector<DigitRun> runs;
  for (auto token : text_util::split_ws(text)) {
    if (std::all_of(token.begin(), token.end(), is_digit)) {
      for (char c : token) runs.push_back({c, DecimalCount{1}});
      continue;
    }
    if (token.size() < 3 || !is_digit(token[0]) || token[1] != 'x') {
      throw Error(ErrorCode::InvalidNumber, "bad run-length token '" + std::string(token) + "'");
    }
    auto count = DecimalCount::parse(token.substr(2));
    if (count.is_zero()) {
      throw Error(ErrorCode::InvalidNumber, "zero-length run '" + std::string(token) + "'");
    }
    runs.push_back({token[0], std::move(count)});
  }
  return from_runs(std::move(runs));
}

DecimalCount RunDecimal::digit_length() const {
  DecimalCount total;
  for (const auto& run : runs_) total += run.count;
  return total;
}

DecimalCount RunDecimal::count_of(char digit) const {
  DecimalCount total;
  for (const auto& run : runs_) {
    if (run.digit == digit) total += run.count;
  }
  return total;
}

bool RunDecimal::contains(char digit) const {
  return std::any_of(runs_.begin(), runs_.end(), [&](const DigitRun& r) { return r.digit == digit; });
}

bool RunDecimal::is_godel_code() const {
  return std::all_of(runs_.begin(), runs_.end(),
                     [](const DigitRun& r) { return r.digit >= '1' && r.digit <= '7'; });
}

std::string RunDecimal::to_wire() const {
  std::string out;
  bool in_literal = false;
  for (const auto& run : runs_) {
    const auto n = run.count.to_u64();
    if (n && *n < 10) {
      if (!in_literal && !out.empty()) out += ' ';
      out.append(*n, run.digit);
      in_literal = true;
    } else {
      if (!out.empty()) out += ' ';
      out += run.digit;
      out += 'x';
      out += run.count.str();
      in_literal = false;
    }
  }
  return out;
}

std::optional<std::string> RunDecimal::materialize(std::size_t limit) const {
  const auto length = digit_length().to_u64();
  if (!length || *length > limit) return std::nullopt;
  std::string out;
  out.reserve(*length);
  for (const auto& run : runs_) out.append(*run.count.to_u64(), run.digit);
  return out;
}

DecimalCount RunDecimal::value() const {
  auto digits = materialize(kMaxValueDigits);
  if (!digits) {
    throw Error(ErrorCode::TooLarge, "number has " + digit_length().str() + " digits");
  }
  return DecimalCount::parse(*digits);
}

// Formula

Formula::Formula(std::vector<LToken> tokens) {
  for (auto& t : tokens) {
    if (t.kind != TokenKind::SlashRun) {
      tokens_.push_back(plain(t.kind));
      continue;
    }
    if (t.count.is_zero()) continue;
    if (!tokens_.empty() && tokens_.back().kind == TokenKind::SlashRun) {
      tokens_.back().count += t.count;
    } else {
      tokens_.push_back(std::move(t));
    }
  }
}

std::size_t Formula::var_count() const {
  return static_cast<std::size_t>(std::count_if(
      tokens_.begin(), tokens_.end(), [](const LToken& t) { return t.kind == TokenKind::Var; }));
}

std::optional<DecimalCount> Formula::numeral_value() const {
  if (tokens_.size() == 1 && tokens_.front().kind == TokenKind::SlashRun) return tokens_.front().count;
  return std::nullopt;
}

Formula parse(std::string_view text) {
  std::vector<LToken> tokens;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const std::string_view rest = text.substr(i);
    if (rest.starts_with("∼")) {
      tokens.push_back(plain(TokenKind::Tilde));
      i += std::string_view("∼").size() - 1;
      continue;
    }
    if (rest.starts_with("♯")) {
      tokens.push_back(plain(TokenKind::Sharp));
      i += std::string_view("♯").size() - 1;
      continue;
    }
    switch (text[i]) {
      case '(': tokens.push_back(plain(TokenKind::LParen)); break;
      case ')': tokens.push_back(plain(TokenKind::RParen)); break;
      case '~': tokens.push_back(plain(TokenKind::Tilde)); break;
      case 'P': tokens.push_back(plain(TokenKind::P)); break;
      case 'x': tokens.push_back(plain(TokenKind::Var)); break;
      case '#': tokens.push_back(plain(TokenKind::Sharp)); break;
      case '|': {
        if (i + 1 < text.size() && text[i + 1] == '^') {
          std::size_t end = i + 2;
          while (end < text.size() && is_digit(text[end])) ++end;
          auto n = DecimalCount::parse(text.substr(i + 2, end - i - 2));
          if (n.is_zero()) {
            throw Error(ErrorCode::InvalidSymbol, "'|^0' is not a numeral");
          }
          tokens.push_back({TokenKind::SlashRun, std::move(n)});
          i = end - 1;
        } else {
          tokens.push_back({TokenKind::SlashRun, DecimalCount{1}});
        }
        break;
      }
      default:
        throw Error(ErrorCode::InvalidSymbol, "'" + std::string(1, text[i]) +
                                                  "' is not in the alphabet ( ) ~ P x | #");
    }
  }
  return Formula(std::move(tokens));
}

std::string to_ascii(const Formula& f) {
  std::string out;
  for (const auto& t : f.tokens()) {
    if (t.kind == TokenKind::SlashRun) {
      const auto n = t.count.to_u64();
      if (!n || *n > kMaxValueDigits) {
        throw Error(ErrorCode::TooLarge, "numeral with " + t.count.str() + " slashes");
      }
      out.append(*n, '|');
    } else {
      out += ascii_of(t.kind);
    }
  }
  return out;
}

std::string show(const Formula& f) {
  std::string out;
  for (const auto& t : f.tokens()) {
    if (t.kind != TokenKind::SlashRun) {
      out += ascii_of(t.kind);
      continue;
    }
    const auto n = t.count.to_u64();
    if (n && *n < 10) {
      out.append(*n, '|');
    } else {
      out += "|^" + t.count.str();
    }
  }
  return out;
}

Formula numeral(const DecimalCount& n) {
  if (n.is_zero()) throw Error(ErrorCode::InvalidNumber, "numerals start at 1");
  return Formula({{TokenKind::SlashRun, n}});
}

RunDecimal encode(const Formula& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFormula, "the empty formula has no Gödel number");
  std::vector<DigitRun> runs;
  runs.reserve(f.tokens().size());
  for (const auto& t : f.tokens()) {
    runs.push_back({digit_of(t.kind), t.kind == TokenKind::SlashRun ? t.count : DecimalCount{1}});
  }
  return RunDecimal::from_runs(std::move(runs));
}

Formula decode(const RunDecimal& g) {
  if (!g.is_godel_code()) {
    throw Error(ErrorCode::InvalidNumber, g.to_wire() + " has digits outside 1..7");
  }
  std::vector<LToken> tokens;
  for (const auto& run : g.runs()) {
    if (run.digit == '6') {
      tokens.push_back({TokenKind::SlashRun, run.count});
      continue;
    }
    const auto n = run.count.to_u64();
    if (!n || *n > kMaxExpandedRun) {
      throw Error(ErrorCode::TooLarge, "run of " + run.count.str() + " '" +
                                           std::string(1, run.digit) + "' digits");
    }
    tokens.insert(tokens.end(), *n, plain(kind_of(run.digit)));
  }
  return Formula(std::move(tokens));
}

RunDecimal compose_numbers(const RunDecimal& n, const RunDecimal& m) {
  if (!n.contains('5')) return n;
  const DecimalCount value = m.value();
  std::vector<DigitRun> runs;
  runs.reserve(n.runs().size());
  for (const auto& run : n.runs()) {
    if (run.digit == '5') {
      runs.push_back({'6', run.count * value});
    } else {
      runs.push_back(run);
    }
  }
  return RunDecimal::from_runs(std::move(runs));
}

RunDecimal sharp_decimal(const RunDecimal& g) { return compose_numbers(g, g); }

Formula substitute(const Formula& s, const Formula& t) {
  if (!s.has_var()) {
    throw Error(ErrorCode::NoFreeVariable, show(s) + " has no free variable");
  }
  std::vector<LToken> tokens;
  for (const auto& tok : s.tokens()) {
    if (tok.kind == TokenKind::Var) {
      tokens.insert(tokens.end(), t.tokens().begin(), t.tokens().end());
    } else {
      tokens.push_back(tok);
    }
  }
  return Formula(std::move(tokens));
}

// LMorphism

LMorphism LMorphism::composite(std::vector<Factor> factors) {
  LMorphism m;
  m.factors_ = std::move(factors);
  return m;
}

LMorphism::Kind LMorphism::kind() const noexcept {
  if (factors_.empty()) return Kind::Identity;
  if (factors_.size() > 1) return Kind::Composite;
  if (std::holds_alternative<Formula>(factors_.front())) return Kind::Fml;
  if (std::holds_alternative<RunDecimal>(factors_.front())) return Kind::Num;
  return Kind::Sharp;
}

const Formula* LMorphism::formula() const {
  return factors_.size() == 1 ? std::get_if<Formula>(&factors_.front()) : nullptr;
}

const RunDecimal* LMorphism::number() const {
  return factors_.size() == 1 ? std::get_if<RunDecimal>(&factors_.front()) : nullptr;
}

namespace {

using Factor = LMorphism::Factor;

bool codes_open_formula(const RunDecimal& g) { return g.is_godel_code() && g.contains('5'); }

// The defined (non-formal) binary compositions, a after b.
std::optional<Factor> reduce_pair(const Factor& a, const Factor& b) {
  if (const auto* s = std::get_if<Formula>(&a)) {
    if (!s->has_var()) return std::nullopt;  // closed formulas compose formally
    if (const auto* t = std::get_if<Formula>(&b)) return substitute(*s, *t);
    if (const auto* g = std::get_if<RunDecimal>(&b)) return substitute(*s, numeral(g->value()));
    return std::nullopt;  // S(x) after ♯ is formal
  }
  if (const auto* n = std::get_if<RunDecimal>(&a)) {
    const auto* m = std::get_if<RunDecimal>(&b);
    if (m != nullptr && codes_open_formula(*n)) return compose_numbers(*n, *m);
    return std::nullopt;
  }
  // a is ♯.
  if (const auto* g = std::get_if<RunDecimal>(&b)) {
    if (codes_open_formula(*g)) return sharp_decimal(*g);
    return std::nullopt;
  }
  if (const auto* t = std::get_if<Formula>(&b)) {
    // ♯ applied to a numeral naming the code of an open formula is itself an
    // expression of the language.
    if (auto v = t->numeral_value(); v && codes_open_formula(RunDecimal::from_count(*v))) {
      return Formula({plain(TokenKind::Sharp), {TokenKind::SlashRun, *v}});
    }
  }
  return std::nullopt;
}

// (S(x) after ♯) after T = S(♯T) for a formula T.
std::optional<Factor> reduce_triple(const Factor& a, const Factor& b, const Factor& c) {
  const auto* s = std::get_if<Formula>(&a);
  const auto* t = std::get_if<Formula>(&c);
  if (s == nullptr || !s->has_var() || !std::holds_alternative<SharpOp>(b) || t == nullptr) {
    return std::nullopt;
  }
  std::vector<LToken> arg{plain(TokenKind::Sharp)};
  arg.insert(arg.end(), t->tokens().begin(), t->tokens().end());
  return substitute(*s, Formula(std::move(arg)));
}

}  // namespace

LMorphism compose_C(const LMorphism& a, const LMorphism& b) {
  std::vector<Factor> seq = a.factors();
  seq.insert(seq.end(), b.factors().begin(), b.factors().end());
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size() && !changed; ++i) {
      const auto at = seq.begin() + static_cast<std::ptrdiff_t>(i);
      if (i + 2 < seq.size()) {
        if (auto r = reduce_triple(seq[i], seq[i + 1], seq[i + 2])) {
          *at = std::move(*r);
          seq.erase(at + 1, at + 3);
          changed = true;
          break;
        }
      }
      if (auto r = reduce_pair(seq[i], seq[i + 1])) {
        *at = std::move(*r);
        seq.erase(at + 1);
        changed = true;
      }
    }
  }
  return LMorphism::composite(std::move(seq));
}

std::string show(const LMorphism& m) {
  if (m.factors().empty()) return "1_O";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += " ∘ ";
    if (const auto* fml = std::get_if<Formula>(&f)) {
      out += show(*fml);
    } else if (const auto* n = std::get_if<RunDecimal>(&f)) {
      out += n->to_wire();
    } else {
      out += "♯";
    }
  }
  return out;
}

SelfRefuter build_self_refuter() {
  SelfRefuter r;
  r.seed = parse("~P(#x)");
  r.seed_number = encode(r.seed);
  r.number = sharp_decimal(r.seed_number);
  r.formula = substitute(r.seed, numeral(r.seed_number.value()));
  if (encode(r.formula) != r.number) {
    throw std::logic_error("self-refuter: code of the formula differs from its number");
  }
  return r;
}

std::optional<LMorphism> LCategory::split_sharp_tail(const LMorphism& dst, const LMorphism&) const {
  const Formula* f = dst.formula();
  if (f == nullptr) return std::nullopt;
  const auto& toks = f->tokens();
  std::vector<LToken> head;
  bool found = false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i].kind == TokenKind::Sharp && i + 1 < toks.size() && toks[i + 1].kind == TokenKind::Var) {
      found = true;
      continue;
    }
    head.push_back(toks[i]);
  }
  if (!found) return std::nullopt;
  return LMorphism(Formula(std::move(head)));
}

LPair srt_arrows_for_L(const std::vector<std::pair<RunDecimal, Formula>>& axioms) {
  LPair pair{LCategory{}};
  for (const auto& [number, formula] : axioms) {
    if (formula.empty() || encode(formula) != number) {
      throw Error(ErrorCode::InvalidAxiom,
                  number.to_wire() + " is not the Gödel number of " + show(formula));
    }
    pair.add_arrow({LMorphism(number), LMorphism(formula)});
  }
  return pair;
}

}  // namespace selfref::godel
