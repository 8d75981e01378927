#pragma once

// Declarative text format for word categories and their pairs.
//
//   # comment
//   kind lambda                    (referential | two-category | lambda)
//   object X Y
//   generator F : X -> Y
//   sharp ♯ : X
//   rule idem: ♯ ♯ => ♯            (placeholders ?x; "ε" for an empty replacement)
//   budget 10000
//   axiom g -> F ♯
//
// Declarations must precede their use.

#include <string>
#include <string_view>

#include "selfref/core_shift.hpp"

namespace selfref::shift {

WordPair load_pair(std::string_view text);
std::string dump_pair(const WordPair& pair);

}  // namespace selfref::shift
