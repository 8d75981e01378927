#include "selfref/core_shift.hpp"

#include <set>

namespace selfref::shift {

WordPair category_from_digraph(const std::vector<ObjectId>& nodes, const std::vector<Edge>& edges) {
  Category cat;
  for (const auto& node : nodes) cat.add_object(node);
  for (const auto& edge : edges) {
    for (const auto* end : {&edge.from, &edge.to}) {
      if (!cat.has_object(*end)) {
        throw Error(ErrorCode::DanglingEdge,
                    "edge '" + edge.name + "' ends at unknown node '" + *end + "'");
      }
    }
  }
  for (const auto& node : nodes) {
    cat.add_generator({nodes.size() == 1 ? "♯" : "♯_" + node, node, node, true});
  }
  for (const auto& edge : edges) cat.add_generator({edge.name, edge.from, edge.to, false});
  return WordPair(std::move(cat));
}

WordPair builtin_pair(std::string_view name) {
  Category cat;
  auto with_axiom = [](Category c, std::string_view src, std::string_view dst) {
    WordPair pair(std::move(c));
    pair.add_arrow({pair.base().parse_word(src), pair.base().parse_word(dst)});
    return pair;
  };
  if (name == "simplest") {
    cat.add_object("O");
    cat.add_generator({"♯", "O", "O", true});
    return with_axiom(std::move(cat), "ε", "ε");
  }
  if (name == "next-simplest") {
    cat.add_object("O");
    cat.add_generator({"♯", "O", "O", true});
    cat.add_generator({"F", "O", "O", false});
    return with_axiom(std::move(cat), "♯", "♯");
  }
  if (name == "russell") {
    cat.add_object("O");
    cat.add_generator({"♯", "O", "O", true});
    cat.add_generator({"R", "O", "O", false});
    cat.add_generator({"∼", "O", "O", false});
    return with_axiom(std::move(cat), "R", "∼♯");
  }
  if (name == "stop") {
    for (const char* obj : {"Z", "X", "Y"}) cat.add_object(obj);
    cat.add_generator({"♯", "X", "X", true});
    cat.add_generator({"g", "Z", "X", false});
    cat.add_generator({"F", "X", "Y", false});
    return with_axiom(std::move(cat), "g", "F");
  }
  if (name == "loop") {
    for (const char* obj : {"X", "Y"}) cat.add_object(obj);
    cat.add_generator({"♯", "X", "X", true});
    cat.add_generator({"g", "X", "X", false});
    cat.add_generator({"F", "X", "Y", false});
    return with_axiom(std::move(cat), "g", "F");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown built-in pair '" + std::string(name) + "'");
}

std::vector<std::string> builtin_pair_names() {
  return {"simplest", "next-simplest", "russell", "stop", "loop"};
}

}  // namespace selfref::shift
