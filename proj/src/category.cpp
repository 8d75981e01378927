#include "selfref/category.hpp"

#include <algorithm>
#include <cctype>

#include "selfref/error.hpp"
#include "selfref/text_util.hpp"

namespace selfref::shift {

namespace {

bool is_placeholder(std::string_view token) { return !token.empty() && token.front() == '?'; }

void check_name(std::string_view name, std::string_view what) {
  const bool bad = name.empty() || name == "ε" || name.front() == '?' || name.starts_with("1_") ||
                   std::any_of(name.begin(), name.end(), [](unsigned char c) {
                     return std::isspace(c) || c == '^' || c == ':' || c == ',';
                   });
  if (bad) {
    throw Error(ErrorCode::ParseError, "invalid " + std::string(what) + " name '" +
                                           std::string(name) + "'");
  }
}

}  // namespace

void Category::add_object(ObjectId name) {
  check_name(name, "object");
  if (object_set_.contains(name)) {
    throw Error(ErrorCode::DuplicateName, "object '" + name + "' already declared");
  }
  object_set_.insert(name);
  objects_.push_back(std::move(name));
}

void Category::add_generator(Generator g) {
  check_name(g.name, "generator");
  if (generator_index_.contains(g.name)) {
    throw Error(ErrorCode::DuplicateName, "generator '" + g.name + "' already declared");
  }
  for (const auto* end : {&g.dom, &g.cod}) {
    if (!has_object(*end)) {
      throw Error(ErrorCode::UnknownObject,
                  "generator '" + g.name + "' refers to unknown object '" + *end + "'");
    }
  }
  if (g.is_sharp) {
    if (g.dom != g.cod) {
      throw Error(ErrorCode::InvalidArgument,
                  "sharp generator '" + g.name + "' must be an endomorphism");
    }
    if (sharp_by_object_.contains(g.dom)) {
      throw Error(ErrorCode::DuplicateName, "object '" + g.dom + "' already has a sharp");
    }
    sharp_by_object_.emplace(g.dom, g.name);
  }
  generator_index_.emplace(g.name, generators_.size());
  generators_.push_back(std::move(g));
}

void Category::add_rule(RewriteRule rule) {
  if (rule.pattern.empty()) {
    throw Error(ErrorCode::IllTypedRule, "rule '" + rule.name + "' has an empty pattern");
  }
  std::set<std::string> bound;
  for (const auto& token : rule.pattern) {
    if (is_placeholder(token)) {
      bound.insert(token);
    } else if (find_generator(token) == nullptr) {
      throw Error(ErrorCode::UnknownGenerator,
                  "rule '" + rule.name + "' uses unknown generator '" + token + "'");
    }
  }
  for (const auto& token : rule.replacement) {
    if (is_placeholder(token) ? !bound.contains(token) : find_generator(token) == nullptr) {
      throw Error(ErrorCode::IllTypedRule,
                  "rule '" + rule.name + "' replacement token '" + token + "' is not bound");
    }
  }
  if (bound.empty()) {
    // Ground rules are type-checked up front; placeholder rules at each firing.
    check_chain(rule.pattern);
    const Word lhs = Word(rule.pattern, find_generator(rule.pattern.back())->dom,
                          find_generator(rule.pattern.front())->cod);
    bool ok = false;
    if (rule.replacement.empty()) {
      ok = lhs.dom() == lhs.cod();
    } else {
      check_chain(rule.replacement);
      ok = find_generator(rule.replacement.back())->dom == lhs.dom() &&
           find_generator(rule.replacement.front())->cod == lhs.cod();
    }
    if (!ok) {
      throw Error(ErrorCode::IllTypedRule,
                  "rule '" + rule.name + "' changes the domain or codomain");
    }
  }
  rules_.push_back(std::move(rule));
}

bool Category::has_object(std::string_view name) const { return object_set_.contains(name); }

const Generator* Category::find_generator(std::string_view name) const {
  auto it = generator_index_.find(name);
  return it == generator_index_.end() ? nullptr : &generators_[it->second];
}

const Generator* Category::sharp_at(std::string_view object) const {
  auto it = sharp_by_object_.find(object);
  return it == sharp_by_object_.end() ? nullptr : find_generator(it->second);
}

Word Category::identity(const ObjectId& object) const {
  if (!has_object(object)) {
    throw Error(ErrorCode::UnknownObject, "unknown object '" + object + "'");
  }
  return Word({}, object, object);
}

Word Category::generator_word(std::string_view name) const {
  const Generator* g = find_generator(name);
  if (g == nullptr) {
    throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
  }
  return normalize(Word({g->name}, g->dom, g->cod));
}

void Category::check_chain(std::span<const std::string> gens) const {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (find_generator(gens[i]) == nullptr) {
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + gens[i] + "'");
    }
  }
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    const Generator* after = find_generator(gens[i]);
    const Generator* before = find_generator(gens[i + 1]);
    if (after->dom != before->cod) {
      throw Error(ErrorCode::ChainMismatch, "cannot compose " + after->name + " after " +
                                                before->name + ": " + before->cod +
                                                " != " + after->dom);
    }
  }
}

Word Category::word(std::span<const std::string> gens) const {
  if (gens.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty word needs an object; use identity()");
  }
  check_chain(gens);
  std::vector<std::string> owned(gens.begin(), gens.end());
  return normalize(Word(std::move(owned), find_generator(gens.back())->dom,
                        find_generator(gens.front())->cod));
}

Word Category::compose(const Word& f, const Word& g) const {
  if (g.cod() != f.dom()) {
    throw Error(ErrorCode::ChainMismatch, "cannot compose " + show(f) + " after " + show(g) +
                                              ": " + g.cod() + " != " + f.dom());
  }
  std::vector<std::string> gens = f.generators();
  gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  return normalize(Word(std::move(gens), g.dom(), f.cod()));
}

Word Category::normalize(const Word& w) const {
  if (rules_.empty() || w.is_identity()) return w;
  return Word(rewrite(w.generators()), w.dom(), w.cod());
}

std::vector<std::string> Category::rewrite(std::vector<std::string> gens) const {
  std::size_t steps = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t pos = 0; pos < gens.size() && !changed; ++pos) {
      for (const auto& rule : rules_) {
        if (pos + rule.pattern.size() > gens.size()) continue;
        std::map<std::string, std::string, std::less<>> binding;
        bool match = true;
        for (std::size_t k = 0; k < rule.pattern.size() && match; ++k) {
          const auto& token = rule.pattern[k];
          const auto& gen = gens[pos + k];
          if (is_placeholder(token)) {
            auto [it, fresh] = binding.emplace(token, gen);
            match = fresh || it->second == gen;
          } else {
            match = token == gen;
          }
        }
        if (!match) continue;

        std::vector<std::string> repl;
        repl.reserve(rule.replacement.size());
        for (const auto& token : rule.replacement) {
          repl.push_back(is_placeholder(token) ? binding.at(token) : token);
        }
        const ObjectId& seg_dom = find_generator(gens[pos + rule.pattern.size() - 1])->dom;
        const ObjectId& seg_cod = find_generator(gens[pos])->cod;
        bool typed = false;
        if (repl.empty()) {
          typed = seg_dom == seg_cod;
        } else {
          bool chained = true;
          try {
            check_chain(repl);
          } catch (const Error&) {
            chained = false;
          }
          typed = chained && find_generator(repl.back())->dom == seg_dom &&
                  find_generator(repl.front())->cod == seg_cod;
        }
        if (!typed) {
          throw Error(ErrorCode::IllTypedRule,
                      "rule '" + rule.name + "' produced an ill-typed replacement");
        }
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pos),
                   gens.begin() + static_cast<std::ptrdiff_t>(pos + rule.pattern.size()));
        gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
        if (++steps > budget_) {
          throw Error(ErrorCode::RewriteBudgetExceeded,
                      "normalization exceeded " + std::to_string(budget_) + " rewrite steps");
        }
        changed = true;
        break;
      }
    }
  }
  return gens;
}

Word Category::parse_word(std::string_view text) const {
  std::vector<std::string> gens;
  std::optional<ObjectId> identity_object;
  bool saw_epsilon = false;
  for (std::string_view token : text_util::split_ws(text)) {
    if (token == "ε") {
      saw_epsilon = true;
      continue;
    }
    if (token.starts_with("1_")) {
      identity_object = std::string(token.substr(2));
      if (!has_object(*identity_object)) {
        throw Error(ErrorCode::UnknownObject, "unknown object '" + *identity_object + "'");
      }
      continue;
    }
    std::size_t pos = 0;
    while (pos < token.size()) {
      std::string_view rest = token.substr(pos);
      const Generator* best = nullptr;
      for (const auto& g : generators_) {
        if (rest.starts_with(g.name) && (best == nullptr || g.name.size() > best->name.size())) {
          best = &g;
        }
      }
      if (best == nullptr) {
        throw Error(ErrorCode::ParseError,
                    "no generator matches '" + std::string(rest) + "' in word '" +
                        std::string(text) + "'");
      }
      pos += best->name.size();
      std::size_t repeat = 1;
      if (pos < token.size() && token[pos] == '^') {
        std::size_t end = pos + 1;
        while (end < token.size() && std::isdigit(static_cast<unsigned char>(token[end]))) ++end;
        if (end == pos + 1) {
          throw Error(ErrorCode::ParseError, "missing exponent in '" + std::string(token) + "'");
        }
        repeat = std::stoul(std::string(token.substr(pos + 1, end - pos - 1)));
        if (repeat == 0) {
          throw Error(ErrorCode::ParseError, "zero exponent in '" + std::string(token) + "'");
        }
        pos = end;
      }
      gens.insert(gens.end(), repeat, best->name);
    }
  }
  if (!gens.empty()) return word(gens);
  if (identity_object) return identity(*identity_object);
  if (saw_epsilon && objects_.size() == 1) return identity(objects_.front());
  throw Error(ErrorCode::ParseError, "cannot determine the object of empty word '" +
                                         std::string(text) + "'");
}

std::string Category::show(const Word& w) const {
  if (w.is_identity()) return objects_.size() == 1 ? "ε" : "1_" + w.dom();
  const auto& gens = w.generators();
  const bool compact = std::all_of(gens.begin(), gens.end(), [](const std::string& name) {
    return text_util::codepoints(name) == 1;
  });
  std::string out;
  for (std::size_t i = 0; i < gens.size();) {
    std::size_t j = i;
    while (j < gens.size() && gens[j] == gens[i]) ++j;
    const std::size_t run = j - i;
    auto emit = [&](const std::string& piece) {
      if (!out.empty() && !compact) out += ' ';
      out += piece;
    };
    if (run >= 3) {
      emit(gens[i] + "^" + std::to_string(run));
    } else {
      for (std::size_t k = 0; k < run; ++k) emit(gens[i]);
    }
    i = j;
  }
  return out;
}

Word Category::sharp_after(const Word& a) const {
  const Generator* sharp = sharp_at(a.cod());
  if (sharp == nullptr) {
    throw Error(ErrorCode::NoSharpGenerator, "object '" + a.cod() + "' has no sharp generator");
  }
  return compose(Word({sharp->name}, sharp->dom, sharp->cod), a);
}

std::optional<Word> Category::split_sharp_tail(const Word& dst, const Word& src) const {
  const Generator* sharp = sharp_at(src.cod());
  if (sharp == nullptr || dst.is_identity() || dst.generators().back() != sharp->name) {
    return std::nullopt;
  }
  std::vector<std::string> head(dst.generators().begin(), dst.generators().end() - 1);
  if (head.empty()) return identity(sharp->cod);
  return Word(std::move(head), sharp->cod, dst.cod());
}

}  // namespace selfref::shift
