#pragma once

#include <string>

#include "json.hpp"
#include "selfref/core_shift.hpp"

namespace selfref {

// {"steps": [{"rule", "src_word", "dst_word"[, "note"]}]}
template <shift::ReferentialBase B>
nlohmann::json derivation_json(const shift::Derivation<typename B::Morphism>& d, const B& base) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : d.steps) {
    nlohmann::json s{{"rule", step.rule},
                     {"src_word", base.show(step.arrow.src)},
                     {"dst_word", base.show(step.arrow.dst)}};
    if (!step.note.empty()) s["note"] = step.note;
    steps.push_back(std::move(s));
  }
  return {{"steps", std::move(steps)}};
}

template <shift::ReferentialBase B>
nlohmann::json arrow_json(const shift::RefArrow<typename B::Morphism>& a, const B& base) {
  return {{"src", base.show(a.src)}, {"dst", base.show(a.dst)}};
}

}  // namespace selfref
