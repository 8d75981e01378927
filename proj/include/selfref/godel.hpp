#pragma once

// A seven-symbol formal language with decimal Gödel numbering.
//
//   symbol  (  )  ~  P  x  |  #(♯)
//   digit   1  2  3  4  5  6  7
//
// Numbers are kept as runs of repeated digits so that ♯341752, a number with
// 341757 digits, costs a handful of runs. Slash numerals are runs as well.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "selfref/core_shift.hpp"
#include "selfref/decimal_count.hpp"

namespace selfref::godel {

struct DigitRun {
  char digit;  // '0'..'9'
  DecimalCount count;
  friend bool operator==(const DigitRun&, const DigitRun&) = default;
  friend auto operator<=>(const DigitRun&, const DigitRun&) = default;
};

// A positive natural number in run-length decimal form. Invariants: counts are
// at least 1, adjacent runs carry distinct digits, the leading digit is not 0.
class RunDecimal {
 public:
  static RunDecimal from_digits(std::string_view digits);
  static RunDecimal from_runs(std::vector<DigitRun> runs);
  static RunDecimal from_count(const DecimalCount& value);
  // Whitespace-separated tokens, each "ddd" (literal digits) or "dxN".
  static RunDecimal parse_wire(std::string_view text);

  const std::vector<DigitRun>& runs() const noexcept { return runs_; }
  DecimalCount digit_length() const;
  DecimalCount count_of(char digit) const;
  bool contains(char digit) const;
  // Digits 1..7 only, i.e. the code of some formula.
  bool is_godel_code() const;

  // Runs of ten or more digits print as "dxN"; the rest print literally.
  std::string to_wire() const;
  // The full digit string, or nullopt when it is longer than limit.
  std::optional<std::string> materialize(std::size_t limit) const;
  // The value as a count. Throws TooLarge past 10^8 digits.
  DecimalCount value() const;

  friend bool operator==(const RunDecimal&, const RunDecimal&) = default;
  friend auto operator<=>(const RunDecimal&, const RunDecimal&) = default;

 private:
  std::vector<DigitRun> runs_;
};

enum class TokenKind { LParen, RParen, Tilde, P, Var, SlashRun, Sharp };

struct LToken {
  TokenKind kind;
  DecimalCount count;  // slashes in a SlashRun; zero otherwise

  friend bool operator==(const LToken&, const LToken&) = default;
  friend auto operator<=>(const LToken&, const LToken&) = default;
};

// A string of the language. Slash runs are maximal.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::vector<LToken> tokens);

  const std::vector<LToken>& tokens() const noexcept { return tokens_; }
  bool empty() const noexcept { return tokens_.empty(); }
  std::size_t var_count() const;
  bool has_var() const { return var_count() > 0; }
  // A single slash run; its count is the numeral's value.
  std::optional<DecimalCount> numeral_value() const;

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;

 private:
  std::vector<LToken> tokens_;
};

// Accepts ( ) ~ P x | # plus ∼ and ♯, and the shorthand "|^N" for N slashes.
// Throws InvalidSymbol.
Formula parse(std::string_view text);
// Every slash written out.
std::string to_ascii(const Formula& f);
// Slash runs of ten or more written as "|^N".
std::string show(const Formula& f);

Formula numeral(const DecimalCount& n);

// Throws EmptyFormula.
RunDecimal encode(const Formula& f);
// Throws InvalidNumber when g has digits outside 1..7 and TooLarge when a
// non-slash run is too long to expand into tokens.
Formula decode(const RunDecimal& g);

// Every 5 in n becomes a run of value(m) sixes.
RunDecimal compose_numbers(const RunDecimal& n, const RunDecimal& m);
// compose_numbers(g, g).
RunDecimal sharp_decimal(const RunDecimal& g);

// Every Var in s replaced by the tokens of t. Throws NoFreeVariable.
Formula substitute(const Formula& s, const Formula& t);

struct SharpOp {
  friend bool operator==(SharpOp, SharpOp) = default;
  friend auto operator<=>(SharpOp, SharpOp) = default;
};

// Morphisms of the one-object category over the language: formulas, external
// numbers and ♯, plus formal composites of these with no specified relation.
// Composites are kept flattened; the empty composite is the identity.
class LMorphism {
 public:
  using Factor = std::variant<Formula, RunDecimal, SharpOp>;
  enum class Kind { Identity, Fml, Num, Sharp, Composite };

  LMorphism() = default;
  LMorphism(Formula f) : factors_{Factor{std::move(f)}} {}
  LMorphism(RunDecimal n) : factors_{Factor{std::move(n)}} {}
  LMorphism(SharpOp s) : factors_{Factor{s}} {}
  static LMorphism composite(std::vector<Factor> factors);

  Kind kind() const noexcept;
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  const Formula* formula() const;
  const RunDecimal* number() const;

  friend bool operator==(const LMorphism&, const LMorphism&) = default;

 private:
  std::vector<Factor> factors_;
};

// a after b. Flattens, then repeatedly applies the leftmost defined
// composition until none applies.
LMorphism compose_C(const LMorphism& a, const LMorphism& b);
std::string show(const LMorphism& m);

struct SelfRefuter {
  RunDecimal seed_number;  // code of ~P(♯x)
  Formula seed;            // ~P(♯x)
  RunDecimal number;       // ♯ of the seed number
  Formula formula;         // ~P(♯ |^seed_number)
};

// Builds ~P(♯|^341752) and its Gödel number ♯341752, checking that the code of
// the formula is the number. Nothing is expanded into digits.
SelfRefuter build_self_refuter();

// The category of the language as a base for categorical pairs.
class LCategory {
 public:
  using Morphism = LMorphism;
  bool composable(const LMorphism&, const LMorphism&) const { return true; }
  LMorphism compose(const LMorphism& after, const LMorphism& before) const {
    return compose_C(after, before);
  }
  bool has_sharp_after(const LMorphism&) const { return true; }
  LMorphism sharp_after(const LMorphism& a) const { return compose_C(SharpOp{}, a); }
  // dst = S(♯x) splits as S(x) after ♯.
  std::optional<LMorphism> split_sharp_tail(const LMorphism& dst, const LMorphism& src) const;
  bool is_self_morphism(const LMorphism&) const { return true; }
  std::string show(const LMorphism& m) const { return godel::show(m); }
};

using LPair = shift::CategoricalPair<LCategory>;

// Pair whose axioms are (g -> F) with g = encode(F). Throws InvalidAxiom.
LPair srt_arrows_for_L(const std::vector<std::pair<RunDecimal, Formula>>& axioms);

}  // namespace selfref::godel
