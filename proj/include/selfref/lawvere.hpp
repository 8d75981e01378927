#pragma once

// Cantor and Lawvere diagonal constructions over explicit finite sets.
//
// Elements are addressed by index into a FinSet's label order. A curried map
// F: X -> [X,Z] is stored as its |X| x |X| table F(x)(y).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace selfref::lawvere {

class FinSet {
 public:
  FinSet() = default;
  // Throws InvalidMap on duplicate labels.
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  // Throws InvalidMap.
  std::size_t require(std::string_view label) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<std::string> labels_;
};

struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<std::size_t> table;  // table[i] indexes cod

  // Throws InvalidMap unless table is total on dom with values in cod.
  static FinMap make(FinSet dom, FinSet cod, std::vector<std::size_t> table);
  static FinMap identity(const FinSet& s);

  std::size_t operator()(std::size_t i) const { return table.at(i); }
  friend bool operator==(const FinMap&, const FinMap&) = default;
};

// g after f. Throws InvalidMap when cod(f) != dom(g).
FinMap compose(const FinMap& g, const FinMap& f);

struct CurriedMap {
  FinSet dom;       // X
  FinSet cod_base;  // Z
  std::vector<std::size_t> table;  // row-major, at(x, y) = F(x)(y)

  // Throws InvalidMap unless table has |X|^2 entries below |Z|.
  static CurriedMap make(FinSet dom, FinSet cod_base, std::vector<std::size_t> table);
  // Table number t in [0, |Z|^(|X|^2)): F(x)(y) is base-|Z| digit x*|X| + y
  // of t, least significant first.
  static CurriedMap from_index(const FinSet& dom, const FinSet& cod_base, std::uint64_t t);

  std::size_t at(std::size_t x, std::size_t y) const { return table[x * dom.size() + y]; }
  FinMap row(std::size_t x) const;
};

enum class TriValue { Zero, One, J };

FinSet booleans();    // {0, 1}
FinSet tri_values();  // {0, 1, J}
FinMap boolean_negation();
FinMap tri_negation();  // ~0 = 1, ~1 = 0, ~J = J
TriValue tri_value(std::size_t index);

// C(x) = neg(F(x)(x)). Throws InvalidMap when neg is not an endomap of Z.
FinMap cantor_diagonal(const CurriedMap& F, const FinMap& neg);

// Smallest a with F(a) = C pointwise.
std::optional<std::size_t> find_representation(const CurriedMap& F, const FinMap& C);

struct FixedPoint {
  std::size_t value;    // F(a)(a), in Z
  std::size_t witness;  // a, in X
};

// Throws NotSurjective when the diagonal alpha(F(x)(x)) is not a row of F.
FixedPoint lawvere_fixed_point(const CurriedMap& F, const FinMap& alpha);

inline constexpr std::uint64_t kFunctionSpaceCap = 1'000'000;

// Whether every map X -> Z is a row of F. Throws TooLarge past
// |Z|^|X| = kFunctionSpaceCap.
bool is_surjective(const CurriedMap& F);

// The explicit function space [X, Z], map number i sending y to base-|Z|
// digit y of i. Labels list the values, e.g. "0,1,J". Throws TooLarge.
FinSet function_space(const FinSet& x, const FinSet& z);

// alpha . eval . (F x I) . Delta, each factor an explicit FinMap.
FinMap diagonal_via_delta(const CurriedMap& F, const FinMap& alpha);

struct ThreeValuedReport {
  FinMap diagonal;
  std::vector<std::size_t> representations;  // every z with F(z) = C
  bool all_j = true;                         // F(z)(z) = J for each of them
};

// Throws InvalidMap unless Z is {0, 1, J}.
ThreeValuedReport three_valued_diagonal_analysis(const CurriedMap& F);

}  // namespace selfref::lawvere
