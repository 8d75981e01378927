#include "selfref/pair_text.hpp"

#include <charconv>

#include "selfref/text_util.hpp"

namespace selfref::shift {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(std::string_view s) {
  std::vector<std::string> out;
  for (auto t : text_util::split_ws(s)) {
    if (t != "ε") out.emplace_back(t);
  }
  return out;
}

}  // namespace

WordPair load_pair(std::string_view text) {
  WordPair pair{Category{}};
  std::size_t line_no = 0;
  std::size_t auto_rule = 0;
  for (std::string_view raw : text_util::split_lines(text)) {
    ++line_no;
    std::string_view line = text_util::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    const std::string_view rest =
        space == std::string_view::npos ? std::string_view{} : text_util::trim(line.substr(space));
    std::string_view lhs, rhs;
    try {
      if (keyword == "kind") {
        if (rest == "referential") pair.set_kind(PairKind::Referential);
        else if (rest == "two-category") pair.set_kind(PairKind::TwoCategory);
        else if (rest == "lambda") pair.set_kind(PairKind::Lambda);
        else fail(line_no, "unknown kind '" + std::string(rest) + "'");
      } else if (keyword == "object" || keyword == "objects") {
        for (auto name : text_util::split_ws(rest)) pair.mutable_base().add_object(std::string(name));
      } else if (keyword == "generator") {
        std::string_view name, ends, dom, cod;
        if (!text_util::split_on(rest, {":"}, name, ends) ||
            !text_util::split_on(ends, {"->", "→"}, dom, cod)) {
          fail(line_no, "expected 'generator NAME : DOM -> COD'");
        }
        pair.mutable_base().add_generator(
            {std::string(name), std::string(dom), std::string(cod), false});
      } else if (keyword == "sharp") {
        std::string_view name, obj;
        if (!text_util::split_on(rest, {":"}, name, obj)) fail(line_no, "expected 'sharp NAME : OBJ'");
        pair.mutable_base().add_generator(
            {std::string(name), std::string(obj), std::string(obj), true});
      } else if (keyword == "rule") {
        std::string_view body = rest;
        std::string name;
        if (auto first = text_util::split_ws(rest); !first.empty() && first.front().ends_with(':')) {
          name = std::string(first.front().substr(0, first.front().size() - 1));
          body = text_util::trim(rest.substr(first.front().size()));
        } else {
          name = "rule" + std::to_string(++auto_rule);
        }
        if (!text_util::split_on(body, {"=>", "⇒"}, lhs, rhs)) {
          fail(line_no, "expected 'rule [NAME:] PATTERN => REPLACEMENT'");
        }
        pair.mutable_base().add_rule({name, tokens_of(lhs), tokens_of(rhs)});
      } else if (keyword == "budget") {
        std::size_t steps = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), steps);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) fail(line_no, "bad budget");
        pair.mutable_base().set_rewrite_budget(steps);
      } else if (keyword == "axiom") {
        if (!text_util::split_on(rest, {"->", "→"}, lhs, rhs)) fail(line_no, "expected 'axiom SRC -> DST'");
        pair.add_arrow({pair.base().parse_word(lhs), pair.base().parse_word(rhs)});
      } else {
        fail(line_no, "unknown keyword '" + std::string(keyword) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError && std::string_view(e.what()).starts_with("line ")) throw;
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pair;
}

std::string dump_pair(const WordPair& pair) {
  const Category& cat = pair.base();
  std::string out;
  switch (pair.kind()) {
    case PairKind::Referential: out += "kind referential\n"; break;
    case PairKind::TwoCategory: out += "kind two-category\n"; break;
    case PairKind::Lambda: out += "kind lambda\n"; break;
  }
  if (!cat.objects().empty()) {
    out += "object";
    for (const auto& obj : cat.objects()) out += " " + obj;
    out += "\n";
  }
  for (const auto& g : cat.generators()) {
    out += g.is_sharp ? "sharp " + g.name + " : " + g.dom + "\n"
                      : "generator " + g.name + " : " + g.dom + " -> " + g.cod + "\n";
  }
  if (cat.rewrite_budget() != Category::kDefaultRewriteBudget) {
    out += "budget " + std::to_string(cat.rewrite_budget()) + "\n";
  }
  for (const auto& rule : cat.rules()) {
    out += "rule " + rule.name + ":";
    for (const auto& t : rule.pattern) out += " " + t;
    out += " =>";
    if (rule.replacement.empty()) out += " ε";
    for (const auto& t : rule.replacement) out += " " + t;
    out += "\n";
  }
  auto word_text = [&](const Word& w) {
    if (w.is_identity()) return "1_" + w.dom();
    std::string s;
    for (const auto& g : w.generators()) s += (s.empty() ? "" : " ") + g;
    return s;
  };
  for (const auto& a : pair.arrows()) {
    out += "axiom " + word_text(a.src) + " -> " + word_text(a.dst) + "\n";
  }
  return out;
}

}  // namespace selfref::shift
