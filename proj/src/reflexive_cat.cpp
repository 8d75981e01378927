#include "selfref/reflexive_cat.hpp"

#include <algorithm>
#include <set>

#include "selfref/error.hpp"
#include "selfref/text_util.hpp"

namespace selfref::reflexive {

ArcTable ArcTable::parse(std::string_view text) {
  ArcTable t;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (auto line : text_util::split_lines(text)) {
    ++line_no;
    line = text_util::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };
    std::string_view name, rest, dom, cod;
    if (!text_util::split_on(line, {":"}, name, rest)) fail("expected 'name: dom -> cod'");
    if (!text_util::split_on(rest, {"->", "→"}, dom, cod)) fail("expected 'dom -> cod'");
    name = text_util::trim(name);
    dom = text_util::trim(dom);
    cod = text_util::trim(cod);
    for (auto part : {name, dom, cod}) {
      if (part.empty() || text_util::split_ws(part).size() != 1) fail("arc names are single tokens");
    }
    if (!seen.insert(std::string(name)).second) {
      throw Error(ErrorCode::DuplicateName, "arc '" + std::string(name) + "' listed twice");
    }
    t.arcs.push_back({std::string(name), std::string(dom), std::string(cod)});
  }
  return t;
}

std::string ArcTable::str() const {
  std::string out;
  for (const auto& a : arcs) out += a.name + ": " + a.dom + " -> " + a.cod + "\n";
  return out;
}

ArcTable trefoil_table() { return {{{"A", "C", "B"}, {"B", "A", "C"}, {"C", "B", "A"}}}; }
ArcTable link_table() { return {{{"A", "B", "B"}, {"B", "A", "A"}}}; }

DiagramCategory build(const ArcTable& table) {
  std::vector<shift::ObjectId> nodes;
  std::vector<shift::Edge> edges;
  for (const auto& a : table.arcs) nodes.push_back(a.name);
  for (const auto& a : table.arcs) {
    for (const auto* end : {&a.dom, &a.cod}) {
      if (std::find(nodes.begin(), nodes.end(), *end) == nodes.end()) {
        throw Error(ErrorCode::DanglingArc,
                    "arc '" + a.name + "' runs to '" + *end + "', which is not an arc");
      }
    }
    edges.push_back({a.name, a.dom, a.cod});
  }
  return {table, shift::category_from_digraph(nodes, edges)};
}

bool is_reflexive(const shift::Category& cat) {
  return std::all_of(cat.objects().begin(), cat.objects().end(), [&](const shift::ObjectId& o) {
    const auto* g = cat.find_generator(o);
    return g != nullptr && !g->is_sharp;
  });
}

std::vector<shift::Word> enumerate_composites(const DiagramCategory& d, std::size_t max_len) {
  if (max_len == 0) throw Error(ErrorCode::InvalidArgument, "max_len must be at least 1");
  const auto& cat = d.base();
  std::vector<const shift::Generator*> gens;
  for (const auto& g : cat.generators()) {
    if (!g.is_sharp) gens.push_back(&g);
  }
  // Extend each word on the left: G w is defined when cod(w) = dom(G).
  std::vector<std::vector<std::string>> layer;
  std::vector<shift::ObjectId> layer_cod;
  for (const auto* g : gens) {
    layer.push_back({g->name});
    layer_cod.push_back(g->cod);
  }
  std::vector<shift::Word> out;
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    if (out.size() + layer.size() > kCompositeCap) {
      throw Error(ErrorCode::TooLarge, "more than " + std::to_string(kCompositeCap) + " composites");
    }
    for (const auto& w : layer) out.push_back(cat.word(w));
    if (len == max_len) break;
    std::vector<std::vector<std::string>> next;
    std::vector<shift::ObjectId> next_cod;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (const auto* g : gens) {
        if (g->dom != layer_cod[i]) continue;
        auto w = layer[i];
        w.insert(w.begin(), g->name);
        next.push_back(std::move(w));
        next_cod.push_back(g->cod);
        if (next.size() > kCompositeCap) {
          throw Error(ErrorCode::TooLarge, "more than " + std::to_string(kCompositeCap) + " composites");
        }
      }
    }
    layer = std::move(next);
    layer_cod = std::move(next_cod);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace selfref::reflexive
