#pragma once

// Smullyan's printing machine as a categorical pair over the free monoid on
// {~, P, R, [, ]}. Strings are stored and printed in ASCII with '~' for ∼.

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "selfref/core_shift.hpp"

namespace selfref::smullyan {

class MString {
 public:
  MString() = default;
  // Accepts '~' or '∼' for negation. Throws InvalidSymbol.
  static MString parse(std::string_view text);

  const std::string& str() const noexcept { return symbols_; }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t size() const noexcept { return symbols_.size(); }

  friend MString operator+(const MString& a, const MString& b) {
    return MString(a.symbols_ + b.symbols_);
  }
  friend bool operator==(const MString&, const MString&) = default;
  friend auto operator<=>(const MString&, const MString&) = default;

 private:
  explicit MString(std::string symbols) : symbols_(std::move(symbols)) {}
  std::string symbols_;
};

enum class Shape { NotInterpretable, P, NegP, R, NegR };

struct Classification {
  Shape shape = Shape::NotInterpretable;
  MString rest;  // X in PX, ~PX, RX, ~RX
};

Classification classify(const MString& s);
std::string_view shape_name(Shape shape);

struct MachineModel {
  std::set<MString> printable;

  bool prints(const MString& s) const { return printable.contains(s); }
  // One string per line; blank lines and lines starting with '#' are skipped.
  static MachineModel parse(std::string_view text);
};

enum class Truth { True, False, NoMeaning };
std::string_view truth_name(Truth t);

// PX -> P[X], ~PX -> ~P[X], RX -> P[XX], ~RX -> ~P[XX].
std::optional<shift::RefArrow<MString>> reference_arrow(const MString& s);

Truth semantics(const MString& s, const MachineModel& m);

// Truth of a bracketed assertion "P[Y]" or "~P[Y]"; NoMeaning otherwise.
Truth assertion_truth(const MString& assertion, const MachineModel& m);

std::set<MString> truthfulness_violations(const MachineModel& m);
inline bool is_truthful(const MachineModel& m) { return truthfulness_violations(m).empty(); }

// Repeatedly drops printed strings that are false until none remain. The
// result is a truthful submodel of m.
MachineModel prune_to_truthful(MachineModel m);

// The free string monoid as a one-object base category. It has no sharp.
class StringMonoid {
 public:
  using Morphism = MString;
  bool composable(const MString&, const MString&) const { return true; }
  MString compose(const MString& after, const MString& before) const { return after + before; }
  bool has_sharp_after(const MString&) const { return false; }
  MString sharp_after(const MString&) const;
  std::optional<MString> split_sharp_tail(const MString&, const MString&) const {
    return std::nullopt;
  }
  bool is_self_morphism(const MString&) const { return true; }
  std::string show(const MString& s) const { return s.str(); }
};

using SmullyanPair = shift::CategoricalPair<StringMonoid>;

// The pair with the itemized reference arrows instantiated for every
// interpretable string of length at most max_len.
SmullyanPair smullyan_pair(std::size_t max_len);

// Numbered argument that ~R~R is true in every truthful model and printed by
// none. Each claim is checked against classify/semantics as it is built.
shift::Derivation<MString> goedel_miniature_report();

// Every string over the alphabet of length at most max_len, shortest first.
std::vector<MString> all_strings(std::size_t max_len);

struct SamplingStats {
  std::uint64_t models = 0;
  std::uint64_t raw_truthful = 0;         // sampled models already truthful
  std::uint64_t raw_with_refuter = 0;     // sampled models printing ~R~R
  std::uint64_t refuter_witnessed = 0;    // ... whose violations include ~R~R
  std::uint64_t truthful_checked = 0;     // truthful models examined
  std::uint64_t truthful_excluding = 0;   // ... not printing ~R~R
  std::uint64_t truthful_refuter_true = 0;  // ... where semantics(~R~R) = True
  std::uint64_t truthful_printed = 0;     // total strings printed by truthful models

  friend bool operator==(const SamplingStats&, const SamplingStats&) = default;
};

// Samples random models over strings of length <= 4. Sample i draws from its
// own generator seeded by (seed, i), so both variants agree exactly.
SamplingStats sample_models_serial(std::uint64_t count, std::uint64_t seed);
SamplingStats sample_models_parallel(std::uint64_t count, std::uint64_t seed);

}  // namespace selfref::smullyan
