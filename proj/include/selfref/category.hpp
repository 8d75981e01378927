#pragma once

// Base categories presented by generators and rewrite rules.
//
// A morphism is a Word: a chainable sequence of generator names written in
// juxtaposition order, so "Fg" means F after g. The rightmost generator is
// applied first; dom(Fg) = dom(g) and cod(Fg) = cod(F). The empty word is the
// identity of its object.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace selfref::shift {

using ObjectId = std::string;

struct Generator {
  std::string name;
  ObjectId dom;
  ObjectId cod;
  bool is_sharp = false;
};

class Word {
 public:
  const std::vector<std::string>& generators() const noexcept { return gens_; }
  const ObjectId& dom() const noexcept { return dom_; }
  const ObjectId& cod() const noexcept { return cod_; }
  bool is_identity() const noexcept { return gens_.empty(); }
  std::size_t length() const noexcept { return gens_.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.gens_.size() <=> b.gens_.size(); c != 0) return c;
    if (auto c = a.gens_ <=> b.gens_; c != 0) return c;
    if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
    return a.cod_ <=> b.cod_;
  }

 private:
  friend class Category;
  Word(std::vector<std::string> gens, ObjectId dom, ObjectId cod)
      : gens_(std::move(gens)), dom_(std::move(dom)), cod_(std::move(cod)) {}

  std::vector<std::string> gens_;
  ObjectId dom_;
  ObjectId cod_;
};

// A string rewrite rule over generator names. Tokens beginning with '?' are
// placeholders binding exactly one generator; a placeholder repeated in the
// pattern must bind the same generator each time.
struct RewriteRule {
  std::string name;
  std::vector<std::string> pattern;
  std::vector<std::string> replacement;
};

class Category {
 public:
  static constexpr std::size_t kDefaultRewriteBudget = 10'000;

  using Morphism = Word;

  void add_object(ObjectId name);
  void add_generator(Generator g);
  void add_rule(RewriteRule rule);
  void set_rewrite_budget(std::size_t steps) noexcept { budget_ = steps; }
  std::size_t rewrite_budget() const noexcept { return budget_; }

  const std::vector<ObjectId>& objects() const noexcept { return objects_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  bool has_object(std::string_view name) const;
  const Generator* find_generator(std::string_view name) const;
  const Generator* sharp_at(std::string_view object) const;

  Word identity(const ObjectId& object) const;
  Word generator_word(std::string_view name) const;
  // Builds and normalizes a nonempty chainable word. Throws ChainMismatch or
  // UnknownGenerator.
  Word word(std::span<const std::string> gens) const;
  Word word(std::initializer_list<std::string> gens) const {
    return word(std::span<const std::string>(gens.begin(), gens.size()));
  }
  // f after g. Requires cod(g) = dom(f).
  Word compose(const Word& f, const Word& g) const;
  Word normalize(const Word& w) const;

  // Accepts juxtaposed names (greedy longest match), whitespace separators,
  // "name^n" powers, "1_X" identities and "ε" on one-object categories.
  Word parse_word(std::string_view text) const;
  std::string show(const Word& w) const;

  // Surface used by the generic categorical-pair operations.
  bool composable(const Word& after, const Word& before) const {
    return before.cod() == after.dom();
  }
  bool is_self_morphism(const Word& w) const { return w.dom() == w.cod(); }
  bool has_sharp_after(const Word& a) const { return sharp_at(a.cod()) != nullptr; }
  // ♯a: the sharp of cod(a) applied after a.
  Word sharp_after(const Word& a) const;
  // If dst = F♯ with ♯ the sharp of cod(src), returns F.
  std::optional<Word> split_sharp_tail(const Word& dst, const Word& src) const;

 private:
  std::vector<std::string> rewrite(std::vector<std::string> gens) const;
  void check_chain(std::span<const std::string> gens) const;

  std::vector<ObjectId> objects_;
  std::set<ObjectId, std::less<>> object_set_;
  std::vector<Generator> generators_;
  std::map<std::string, std::size_t, std::less<>> generator_index_;
  std::map<ObjectId, std::string, std::less<>> sharp_by_object_;
  std::vector<RewriteRule> rules_;
  std::size_t budget_ = kDefaultRewriteBudget;
};

}  // namespace selfref::shift
