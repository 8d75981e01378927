#pragma once

// Reflexive categories from arc tables of knot and link diagrams: every arc
// is both an object and a generating morphism between two arcs.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "selfref/core_shift.hpp"

namespace selfref::reflexive {

struct Arc {
  std::string name;
  std::string dom;
  std::string cod;
};

struct ArcTable {
  std::vector<Arc> arcs;

  // One "name: dom -> cod" per line; blank lines and '#' comments skipped.
  // Throws ParseError or DuplicateName.
  static ArcTable parse(std::string_view text);
  std::string str() const;
};

ArcTable trefoil_table();  // A: C -> B, B: A -> C, C: B -> A
ArcTable link_table();     // A: B -> B, B: A -> A

struct DiagramCategory {
  ArcTable table;
  shift::WordPair pair;

  const shift::Category& base() const { return pair.base(); }
};

// Objects are the arcs; one generator per arc plus a sharp per object.
// Throws DanglingArc when an endpoint is not an arc.
DiagramCategory build(const ArcTable& table);

// Every object names a non-sharp generator.
bool is_reflexive(const shift::Category& cat);
inline bool is_reflexive(const DiagramCategory& d) { return is_reflexive(d.base()); }

inline constexpr std::size_t kCompositeCap = 1'000'000;

// All chainable words of 1..max_len arc generators, sorted. No relations are
// imposed. Throws InvalidArgument for max_len 0, TooLarge past kCompositeCap.
std::vector<shift::Word> enumerate_composites(const DiagramCategory& d, std::size_t max_len);

}  // namespace selfref::reflexive
