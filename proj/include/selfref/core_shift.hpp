#pragma once

// Categorical pairs (C, C') and the indicative shift.
//
// C is any base category satisfying ReferentialBase; its morphisms are the
// objects of C', and an arrow of C' is a RefArrow (src -> dst). The operations
// here are generic so the same shift and SRT1 machinery runs over free word
// categories, the Gödel-numbered language and the Smullyan string monoid.

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfref/category.hpp"
#include "selfref/error.hpp"

namespace selfref::shift {

template <class B>
concept ReferentialBase =
    std::equality_comparable<typename B::Morphism> &&
    requires(const B& base, const typename B::Morphism& m) {
      { base.composable(m, m) } -> std::convertible_to<bool>;
      { base.compose(m, m) } -> std::same_as<typename B::Morphism>;
      { base.has_sharp_after(m) } -> std::convertible_to<bool>;
      { base.sharp_after(m) } -> std::same_as<typename B::Morphism>;
      { base.split_sharp_tail(m, m) } -> std::same_as<std::optional<typename B::Morphism>>;
      { base.is_self_morphism(m) } -> std::convertible_to<bool>;
      { base.show(m) } -> std::convertible_to<std::string>;
    };

template <class M>
struct RefArrow {
  M src;
  M dst;
  friend bool operator==(const RefArrow&, const RefArrow&) = default;
};

// Rule names used in traces: "axiom", "shift", "horizontal", "vertical",
// "lambda". Smullyan reports add their own reasoning rules.
template <class M>
struct DerivationStep {
  std::string rule;
  RefArrow<M> arrow;
  std::string note;
};

template <class M>
struct Derivation {
  std::vector<DerivationStep<M>> steps;

  const RefArrow<M>& conclusion() const { return steps.back().arrow; }
};

enum class PairKind {
  Referential,  // plain categorical pair with the indicative shift
  TwoCategory,  // adds horizontal composition
  Lambda,       // 2-category where ♯a = aa for self-morphisms
};

template <ReferentialBase B>
class CategoricalPair {
 public:
  using Morphism = typename B::Morphism;
  using Arrow = RefArrow<Morphism>;

  explicit CategoricalPair(B base, PairKind kind = PairKind::Referential)
      : base_(std::move(base)), kind_(kind) {}

  const B& base() const noexcept { return base_; }
  B& mutable_base() noexcept { return base_; }
  PairKind kind() const noexcept { return kind_; }
  void set_kind(PairKind kind) noexcept { kind_ = kind; }
  bool is_two_category() const noexcept { return kind_ != PairKind::Referential; }
  bool is_lambda_pair() const noexcept { return kind_ == PairKind::Lambda; }

  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  void add_arrow(Arrow arrow) { arrows_.push_back(std::move(arrow)); }

 private:
  B base_;
  PairKind kind_;
  std::vector<Arrow> arrows_;
};

template <ReferentialBase B>
bool is_composable_reference(const CategoricalPair<B>& pair,
                             const typename CategoricalPair<B>::Arrow& r) {
  return pair.base().composable(r.dst, r.src);
}

namespace detail {

template <class M>
struct ShiftOutcome {
  RefArrow<M> arrow;
  std::string note;
};

template <ReferentialBase B>
ShiftOutcome<typename B::Morphism> shift_once(const CategoricalPair<B>& pair,
                                              const RefArrow<typename B::Morphism>& r) {
  const B& base = pair.base();
  if (!is_composable_reference(pair, r)) {
    throw Error(ErrorCode::NotComposable,
                "reference " + base.show(r.src) + " -> " + base.show(r.dst) +
                    " is not composable");
  }
  if (pair.is_lambda_pair() && base.is_self_morphism(r.src)) {
    return {{base.compose(r.src, r.src), base.compose(r.dst, r.src)},
            "lambda pair: sharp of a self-morphism read as repetition"};
  }
  if (!base.has_sharp_after(r.src)) {
    throw Error(ErrorCode::NoSharpGenerator,
                "no sharp generator after " + base.show(r.src));
  }
  std::string note;
  if (pair.is_lambda_pair()) {
    note = "lambda pair: source is not a self-morphism, free sharp used";
  }
  return {{base.sharp_after(r.src), base.compose(r.dst, r.src)}, std::move(note)};
}

}  // namespace detail

// (a -> b) becomes (♯a -> ba). In a lambda pair, (a -> b) with a a
// self-morphism becomes (aa -> ba).
template <ReferentialBase B>
typename CategoricalPair<B>::Arrow indicative_shift(const CategoricalPair<B>& pair,
                                                    const typename CategoricalPair<B>::Arrow& r) {
  return detail::shift_once(pair, r).arrow;
}

template <ReferentialBase B>
typename CategoricalPair<B>::Arrow horizontal_compose(const CategoricalPair<B>& pair,
                                                      const typename CategoricalPair<B>::Arrow& alpha,
                                                      const typename CategoricalPair<B>::Arrow& beta) {
  if (!pair.is_two_category()) {
    throw Error(ErrorCode::NotTwoCategory, "horizontal composition needs a 2-category");
  }
  const B& base = pair.base();
  if (!base.composable(alpha.src, beta.src) || !base.composable(alpha.dst, beta.dst)) {
    throw Error(ErrorCode::ChainMismatch,
                "horizontal composite of " + base.show(alpha.src) + " -> " +
                    base.show(alpha.dst) + " and " + base.show(beta.src) + " -> " +
                    base.show(beta.dst) + " is undefined");
  }
  return {base.compose(alpha.src, beta.src), base.compose(alpha.dst, beta.dst)};
}

// gamma after alpha.
template <ReferentialBase B>
typename CategoricalPair<B>::Arrow vertical_compose(const CategoricalPair<B>& pair,
                                                    const typename CategoricalPair<B>::Arrow& gamma,
                                                    const typename CategoricalPair<B>::Arrow& alpha) {
  if (!(alpha.dst == gamma.src)) {
    const B& base = pair.base();
    throw Error(ErrorCode::EndpointMismatch,
                "cannot follow " + base.show(alpha.src) + " -> " + base.show(alpha.dst) +
                    " with " + base.show(gamma.src) + " -> " + base.show(gamma.dst));
  }
  return {alpha.src, gamma.dst};
}

// alpha: a -> b, gamma: b -> c, beta: d -> e, delta: e -> f. Compares the
// vertical composite of the two horizontal composites against the horizontal
// composite of the two vertical composites.
template <ReferentialBase B>
bool check_interchange(const CategoricalPair<B>& pair,
                       const typename CategoricalPair<B>::Arrow& alpha,
                       const typename CategoricalPair<B>::Arrow& beta,
                       const typename CategoricalPair<B>::Arrow& gamma,
                       const typename CategoricalPair<B>::Arrow& delta) {
  const auto top = horizontal_compose(pair, alpha, beta);
  const auto bottom = horizontal_compose(pair, gamma, delta);
  const auto lhs = vertical_compose(pair, bottom, top);
  const auto rhs = horizontal_compose(pair, vertical_compose(pair, gamma, alpha),
                                      vertical_compose(pair, delta, beta));
  return lhs == rhs;
}

// From (g -> F♯) derive (♯g -> F♯g), i.e. h -> Fh with h = ♯g. In a lambda pair
// with g a self-morphism the derivation runs through the horizontal composite
// with the identity on g and ends in (gg -> Fgg).
template <ReferentialBase B>
Derivation<typename B::Morphism> srt1(const CategoricalPair<B>& pair,
                                      const typename CategoricalPair<B>::Arrow& r) {
  const B& base = pair.base();
  const auto head = base.split_sharp_tail(r.dst, r.src);
  if (!head) {
    throw Error(ErrorCode::NotSrt1Shape,
                "target " + base.show(r.dst) + " does not end in the sharp of the source");
  }
  if (!is_composable_reference(pair, r)) {
    throw Error(ErrorCode::NotComposable,
                "reference " + base.show(r.src) + " -> " + base.show(r.dst) +
                    " is not composable");
  }
  Derivation<typename B::Morphism> d;
  d.steps.push_back({"axiom", r, ""});
  if (pair.is_lambda_pair() && base.is_self_morphism(r.src)) {
    const typename CategoricalPair<B>::Arrow id{r.src, r.src};
    d.steps.push_back({"horizontal", horizontal_compose(pair, r, id),
                       "with the identity arrow on " + base.show(r.src)});
    const auto h = base.compose(r.src, r.src);
    d.steps.push_back({"lambda", {h, base.compose(*head, h)}, "sharp read as repetition"});
    return d;
  }
  auto shifted = detail::shift_once(pair, r);
  d.steps.push_back({"shift", std::move(shifted.arrow), std::move(shifted.note)});
  return d;
}

template <class M>
struct ShiftSequence {
  std::vector<RefArrow<M>> arrows;
  std::optional<std::string> stop_reason;
};

template <ReferentialBase B>
ShiftSequence<typename B::Morphism> iterate_shift(const CategoricalPair<B>& pair,
                                                  typename CategoricalPair<B>::Arrow r,
                                                  std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::InvalidArgument, "iterate_shift needs n >= 1");
  }
  ShiftSequence<typename B::Morphism> out;
  const B& base = pair.base();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_composable_reference(pair, r)) {
      out.stop_reason = "not composable: " + base.show(r.src) + " -> " + base.show(r.dst);
      break;
    }
    if (!(pair.is_lambda_pair() && base.is_self_morphism(r.src)) && !base.has_sharp_after(r.src)) {
      out.stop_reason = "no sharp generator after " + base.show(r.src);
      break;
    }
    r = indicative_shift(pair, r);
    out.arrows.push_back(r);
  }
  return out;
}

// Concrete pairs over word categories.
using WordPair = CategoricalPair<Category>;
using WordArrow = RefArrow<Word>;

struct Edge {
  std::string name;
  ObjectId from;
  ObjectId to;
};

// One object per node, one sharp per node ("♯" for a single node, "♯_N"
// otherwise) and one generator per edge. No axiom arrows.
WordPair category_from_digraph(const std::vector<ObjectId>& nodes, const std::vector<Edge>& edges);

// Built-in bases used by the CLI and tests:
//   simplest       one object O, generator ♯; axiom ε -> ε
//   next-simplest  one object O, generators ♯ and F
//   russell        one object O, generators ♯, R and ∼; axiom R -> ∼♯
//   stop           objects Z, X, Y; g: Z -> X, F: X -> Y, sharps at each; axiom g -> F
//   loop           objects X, Y; g: X -> X, F: X -> Y, sharps at each; axiom g -> F
WordPair builtin_pair(std::string_view name);
std::vector<std::string> builtin_pair_names();

}  // namespace selfref::shift
