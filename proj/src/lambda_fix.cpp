#include "selfref/lambda_fix.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "selfref/error.hpp"

namespace selfref::lambda {

Term Term::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FreeVar;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::apply(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Apply;
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->left = std::make_unique<Term>(std::move(left));
  n->right = std::make_unique<Term>(std::move(right));
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.is_apply()) return a.name() == b.name();
  return a.depth() == b.depth() && a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  Term parse() {
    Term t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_item() {
    skip_ws();
    return pos_ < text_.size() &&
           (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])));
  }

  Term expr() {
    if (!at_item()) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of term");
    Term t = item();
    while (at_item()) t = Term::apply(std::move(t), item());
    return t;
  }

  Term item() {
    if (text_[pos_] == '(') {
      ++pos_;
      Term t = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return t;
    }
    const std::size_t start = pos_++;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (!var_.empty() && name == var_) return Term::var(std::move(name));
    return Term::atom(std::move(name));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "term '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

void collect_names(const Term& t, std::set<std::string, std::less<>>& out) {
  if (t.is_apply()) {
    collect_names(t.left(), out);
    collect_names(t.right(), out);
  } else {
    out.insert(t.name());
  }
}

bool valid_name(std::string_view name) {
  return !name.empty() && std::isalpha(static_cast<unsigned char>(name.front())) &&
         std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Term parse_term(std::string_view text, std::string_view var) { return Parser(text, var).parse(); }

std::string show(const Term& t) {
  if (!t.is_apply()) return t.name();
  auto part = [](const Term& s) { return s.is_apply() ? "(" + show(s) + ")" : show(s); };
  return part(t.left()) + part(t.right());
}

Term substitute(const Term& body, std::string_view var, const Term& t) {
  switch (body.kind()) {
    case Term::Kind::FreeVar: return body.name() == var ? t : body;
    case Term::Kind::Atom: return body;
    case Term::Kind::Apply:
      return Term::apply(substitute(body.left(), var, t), substitute(body.right(), var, t));
  }
  return body;
}

bool contains_var(const Term& t, std::string_view var) {
  if (t.is_apply()) return contains_var(t.left(), var) || contains_var(t.right(), var);
  return t.is_var() && t.name() == var;
}

std::vector<std::string> leaves(const Term& t) {
  if (!t.is_apply()) return {t.name()};
  auto out = leaves(t.left());
  auto rhs = leaves(t.right());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

const ReflexiveDef* Rewriter::find(std::string_view name) const {
  for (const auto& d : defs_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

bool Rewriter::in_use(std::string_view name, const Term& body) const {
  std::set<std::string, std::less<>> names;
  collect_names(body, names);
  for (const auto& d : defs_) {
    names.insert(d.name);
    collect_names(d.body, names);
  }
  return names.contains(name);
}

void Rewriter::define(std::string name, std::string var, Term body) {
  if (!valid_name(name) || !valid_name(var)) {
    throw Error(ErrorCode::InvalidArgument, "names are a letter followed by digits");
  }
  if (!contains_var(body, var)) {
    throw Error(ErrorCode::VarNotFree, "'" + var + "' does not occur in " + show(body));
  }
  if (find(name) != nullptr) throw Error(ErrorCode::DuplicateName, "'" + name + "' is already defined");
  std::set<std::string, std::less<>> names;
  collect_names(body, names);
  if (names.contains(name)) {
    throw Error(ErrorCode::InvalidArgument, "'" + name + "' occurs in its own definition");
  }
  defs_.push_back({std::move(name), std::move(var), std::move(body)});
}

Term Rewriter::reflexive_name(const Term& body, std::string_view var) {
  if (!contains_var(body, var)) {
    throw Error(ErrorCode::VarNotFree, "'" + std::string(var) + "' does not occur in " + show(body));
  }
  std::string name;
  do {
    name = "g" + std::to_string(counter_++);
  } while (in_use(name, body) || name == var);
  define(name, std::string(var), body);
  return Term::atom(std::move(name));
}

Term fixed_point(const Term& F, Rewriter& r) {
  // F is closed in practice; a free x in F would otherwise be captured.
  std::string var = "x";
  for (std::size_t i = 0; contains_var(F, var); ++i) var = "x" + std::to_string(i);
  const Term x = Term::var(var);
  const Term g = r.reflexive_name(Term::apply(F, Term::apply(x, x)), var);
  return Term::apply(g, g);
}

namespace {

// One leftmost-outermost firing, or nullopt at a normal form.
std::optional<Term> step(const Term& t, const Rewriter& r) {
  if (!t.is_apply()) return std::nullopt;
  if (t.left().is_atom()) {
    if (const auto* d = r.find(t.left().name())) return substitute(d->body, d->var, t.right());
  }
  if (auto l = step(t.left(), r)) return Term::apply(std::move(*l), t.right());
  if (auto rt = step(t.right(), r)) return Term::apply(t.left(), std::move(*rt));
  return std::nullopt;
}

}  // namespace

Reduction reduce(const Term& t, const Rewriter& r, std::size_t steps) {
  const std::size_t limit = std::min(steps, r.fuel());
  Reduction out{t};
  while (true) {
    auto next = step(out.term, r);
    if (!next) {
      out.normal_form = true;
      return out;
    }
    if (out.steps_used == limit) {
      out.fuel_exhausted = true;
      return out;
    }
    out.term = std::move(*next);
    ++out.steps_used;
  }
}

bool check_fixed_point(const Term& F, Rewriter& r) {
  const Term gg = fixed_point(F, r);
  return reduce(gg, r, 1).term == Term::apply(F, gg);
}

}  // namespace selfref::lambda
