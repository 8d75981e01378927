#include "selfref/lawvere.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "selfref/error.hpp"

namespace selfref::lawvere {

namespace {

// |base|^exp, or nullopt past cap.
std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return std::nullopt;
    out *= base;
  }
  return out <= cap ? std::optional(out) : std::nullopt;
}

std::uint64_t function_count(const FinSet& x, const FinSet& z) {
  auto n = bounded_power(z.size(), x.size(), kFunctionSpaceCap);
  if (!n) {
    throw Error(ErrorCode::TooLarge, "|Z|^|X| = " + std::to_string(z.size()) + "^" +
                                         std::to_string(x.size()) + " exceeds " +
                                         std::to_string(kFunctionSpaceCap));
  }
  return *n;
}

void require_endomap(const FinMap& m, const FinSet& z, const char* what) {
  if (!(m.dom == z) || !(m.cod == z)) {
    throw Error(ErrorCode::InvalidMap, std::string(what) + " must be a map Z -> Z");
  }
}

}  // namespace

FinSet::FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidMap, "duplicate element '" + l + "'");
  }
}

std::optional<std::size_t> FinSet::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FinSet::require(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw Error(ErrorCode::InvalidMap, "'" + std::string(label) + "' is not an element");
}

FinMap FinMap::make(FinSet dom, FinSet cod, std::vector<std::size_t> table) {
  if (table.size() != dom.size()) {
    throw Error(ErrorCode::InvalidMap, "map table has " + std::to_string(table.size()) +
                                           " entries for " + std::to_string(dom.size()) +
                                           " elements");
  }
  for (auto v : table) {
    if (v >= cod.size()) throw Error(ErrorCode::InvalidMap, "map value outside the codomain");
  }
  return FinMap{std::move(dom), std::move(cod), std::move(table)};
}

FinMap FinMap::identity(const FinSet& s) {
  std::vector<std::size_t> t(s.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return FinMap{s, s, std::move(t)};
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod == g.dom)) throw Error(ErrorCode::InvalidMap, "maps do not chain");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinMap{f.dom, g.cod, std::move(t)};
}

CurriedMap CurriedMap::make(FinSet dom, FinSet cod_base, std::vector<std::size_t> table) {
  if (table.size() != dom.size() * dom.size()) {
    throw Error(ErrorCode::InvalidMap, "curried table needs |X|^2 = " +
                                           std::to_string(dom.size() * dom.size()) + " entries");
  }
  for (auto v : table) {
    if (v >= cod_base.size()) throw Error(ErrorCode::InvalidMap, "table value outside Z");
  }
  return CurriedMap{std::move(dom), std::move(cod_base), std::move(table)};
}

CurriedMap CurriedMap::from_index(const FinSet& dom, const FinSet& cod_base, std::uint64_t t) {
  const std::size_t cells = dom.size() * dom.size();
  std::vector<std::size_t> table(cells);
  const std::uint64_t nz = cod_base.size();
  for (std::size_t i = 0; i < cells; ++i) {
    table[i] = static_cast<std::size_t>(t % nz);
    t /= nz;
  }
  return CurriedMap{dom, cod_base, std::move(table)};
}

FinMap CurriedMap::row(std::size_t x) const {
  const auto n = dom.size();
  std::vector<std::size_t> t(table.begin() + static_cast<std::ptrdiff_t>(x * n),
                             table.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
  return FinMap{dom, cod_base, std::move(t)};
}

FinSet booleans() { return FinSet({"0", "1"}); }
FinSet tri_values() { return FinSet({"0", "1", "J"}); }
FinMap boolean_negation() { return FinMap{booleans(), booleans(), {1, 0}}; }
FinMap tri_negation() { return FinMap{tri_values(), tri_values(), {1, 0, 2}}; }

TriValue tri_value(std::size_t index) {
  switch (index) {
    case 0: return TriValue::Zero;
    case 1: return TriValue::One;
    case 2: return TriValue::J;
  }
  throw Error(ErrorCode::InvalidMap, "no three-valued element at index " + std::to_string(index));
}

FinMap cantor_diagonal(const CurriedMap& F, const FinMap& neg) {
  require_endomap(neg, F.cod_base, "negation");
  std::vector<std::size_t> t(F.dom.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = neg(F.at(x, x));
  return FinMap{F.dom, F.cod_base, std::move(t)};
}

std::optional<std::size_t> find_representation(const CurriedMap& F, const FinMap& C) {
  const auto n = F.dom.size();
  for (std::size_t a = 0; a < n; ++a) {
    bool same = true;
    for (std::size_t y = 0; y < n && same; ++y) same = F.at(a, y) == C(y);
    if (same) return a;
  }
  return std::nullopt;
}

FixedPoint lawvere_fixed_point(const CurriedMap& F, const FinMap& alpha) {
  const FinMap C = cantor_diagonal(F, alpha);
  const auto a = find_representation(F, C);
  if (!a) {
    throw Error(ErrorCode::NotSurjective,
                "the diagonal alpha(F(x)(x)) is no row of F, so F is not onto [X,Z]");
  }
  const std::size_t v = F.at(*a, *a);
  if (alpha(v) != v) throw std::logic_error("lawvere: represented diagonal gave a non-fixed point");
  return {v, *a};
}

bool is_surjective(const CurriedMap& F) {
  const std::uint64_t total = function_count(F.dom, F.cod_base);
  const auto n = F.dom.size();
  const std::uint64_t nz = F.cod_base.size();
  std::vector<bool> hit(total, false);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t code = 0;
    for (std::size_t y = n; y > 0; --y) code = code * nz + F.at(x, y - 1);
    hit[code] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinSet function_space(const FinSet& x, const FinSet& z) {
  const std::uint64_t total = function_count(x, z);
  std::vector<std::string> labels;
  labels.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::string l;
    std::uint64_t code = i;
    for (std::size_t y = 0; y < x.size(); ++y) {
      if (y) l += ',';
      l += z.label(code % z.size());
      code /= z.size();
    }
    labels.push_back(std::move(l));
  }
  return FinSet(std::move(labels));
}

namespace {

FinSet product(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (const auto& x : a.labels()) {
    for (const auto& y : b.labels()) labels.push_back("(" + x + ";" + y + ")");
  }
  return FinSet(std::move(labels));
}

}  // namespace

FinMap diagonal_via_delta(const CurriedMap& F, const FinMap& alpha) {
  require_endomap(alpha, F.cod_base, "alpha");
  const FinSet& X = F.dom;
  const FinSet& Z = F.cod_base;
  const std::size_t n = X.size();
  const std::size_t nz = Z.size();
  const FinSet XZ = function_space(X, Z);
  const FinSet XX = product(X, X);
  const FinSet XZxX = product(XZ, X);

  // Delta(x) = (x, x)
  std::vector<std::size_t> delta(n);
  for (std::size_t x = 0; x < n; ++x) delta[x] = x * n + x;

  // (F x I)(x, y) = (F(x), y)
  std::vector<std::size_t> row_code(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t code = 0;
    for (std::size_t y = n; y > 0; --y) code = code * nz + F.at(x, y - 1);
    row_code[x] = code;
  }
  std::vector<std::size_t> fxi(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) fxi[x * n + y] = row_code[x] * n + y;
  }

  // eval(f, y) = f(y)
  std::vector<std::size_t> eval(XZxX.size());
  for (std::size_t f = 0; f < XZ.size(); ++f) {
    std::size_t code = f;
    for (std::size_t y = 0; y < n; ++y) {
      eval[f * n + y] = code % nz;
      code /= nz;
    }
  }

  const FinMap d = FinMap::make(X, XX, std::move(delta));
  const FinMap fi = FinMap::make(XX, XZxX, std::move(fxi));
  const FinMap ev = FinMap::make(XZxX, Z, std::move(eval));
  return compose(alpha, compose(ev, compose(fi, d)));
}

ThreeValuedReport three_valued_diagonal_analysis(const CurriedMap& F) {
  if (!(F.cod_base == tri_values())) {
    throw Error(ErrorCode::InvalidMap, "three-valued analysis needs Z = {0, 1, J}");
  }
  ThreeValuedReport r{cantor_diagonal(F, tri_negation()), {}, true};
  const auto n = F.dom.size();
  for (std::size_t z = 0; z < n; ++z) {
    bool same = true;
    for (std::size_t y = 0; y < n && same; ++y) same = F.at(z, y) == r.diagonal(y);
    if (!same) continue;
    r.representations.push_back(z);
    if (tri_value(F.at(z, z)) != TriValue::J) r.all_j = false;
  }
  return r;
}

}  // namespace selfref::lawvere
