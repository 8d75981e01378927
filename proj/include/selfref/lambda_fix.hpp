#pragma once

// A free non-associative applicative algebra with named reflexive
// definitions g t => body[var := t], and the Church-Curry fixed point gg.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfref::lambda {

class Term {
 public:
  enum class Kind { Atom, Apply, FreeVar };

  static Term atom(std::string name);
  static Term var(std::string name);
  static Term apply(Term left, Term right);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Kind::Atom; }
  bool is_apply() const noexcept { return kind() == Kind::Apply; }
  bool is_var() const noexcept { return kind() == Kind::FreeVar; }
  // Atom and FreeVar only.
  const std::string& name() const noexcept { return node_->name; }
  // Apply only.
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }
  std::size_t depth() const noexcept { return node_->depth; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Term> left;
    std::unique_ptr<Term> right;
    std::size_t depth = 1;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Juxtaposition is left-associative: "abc" is (ab)c. Names are a letter
// followed by digits, so "g0g1" is g0 applied to g1. Whitespace separates.
// Occurrences of var, when given, parse as FreeVar. Throws ParseError.
Term parse_term(std::string_view text, std::string_view var = {});
// Every nested application in parentheses: F(gg), a((bx)x), (Fa)b.
std::string show(const Term& t);

// Replaces FreeVar(var) only.
Term substitute(const Term& body, std::string_view var, const Term& t);
bool contains_var(const Term& t, std::string_view var);
// Atom and variable names, left to right.
std::vector<std::string> leaves(const Term& t);

struct ReflexiveDef {
  std::string name;
  std::string var;
  Term body;
};

class Rewriter {
 public:
  static constexpr std::size_t kDefaultFuel = 10'000;

  explicit Rewriter(std::size_t fuel = kDefaultFuel) : fuel_(fuel) {}

  // Installs name t => body[var := t]. Throws VarNotFree, DuplicateName, or
  // InvalidArgument when name occurs in body.
  void define(std::string name, std::string var, Term body);
  // As define, with a fresh name g0, g1, ...
  Term reflexive_name(const Term& body, std::string_view var);

  const std::vector<ReflexiveDef>& defs() const noexcept { return defs_; }
  const ReflexiveDef* find(std::string_view name) const;
  std::size_t fuel() const noexcept { return fuel_; }
  void set_fuel(std::size_t fuel) noexcept { fuel_ = fuel; }

 private:
  bool in_use(std::string_view name, const Term& body) const;

  std::vector<ReflexiveDef> defs_;
  std::size_t fuel_;
  std::size_t counter_ = 0;
};

// gg with g t => F(tt).
Term fixed_point(const Term& F, Rewriter& r);

struct Reduction {
  Term term;
  std::size_t steps_used = 0;
  bool normal_form = false;     // no redex left
  bool fuel_exhausted = false;  // stopped at the step limit with redexes left
};

// Leftmost-outermost rewriting, at most min(steps, fuel) firings.
Reduction reduce(const Term& t, const Rewriter& r, std::size_t steps);

// reduce(gg, 1) == F(gg) for gg = fixed_point(F).
bool check_fixed_point(const Term& F, Rewriter& r);

}  // namespace selfref::lambda
