#include <cstdint>
#include <vector>

#include "doctest.h"
#include "selfref/error.hpp"
#include "selfref/lawvere.hpp"
#include "selfref/lawvere_kernels.hpp"

using namespace selfref;
using namespace selfref::lawvere;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

FinSet numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return FinSet(labels);
}

FinSet values(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinSet(labels);
}

// Independent tally over explicit tables.
SweepStats brute_sweep(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const std::size_t nz = alpha.size();
  const std::size_t cells = nx * nx;
  std::vector<std::size_t> t(cells, 0);
  SweepStats s;
  std::uint64_t functions = 1;
  for (std::size_t i = 0; i < nx; ++i) functions *= nz;
  while (true) {
    ++s.tables;
    std::vector<std::size_t> diag(nx);
    for (std::size_t x = 0; x < nx; ++x) diag[x] = alpha[t[x * nx + x]];
    std::uint64_t reps = 0;
    for (std::size_t a = 0; a < nx; ++a) {
      bool same = true;
      for (std::size_t y = 0; y < nx; ++y) same = same && t[a * nx + y] == diag[y];
      if (!same) continue;
      ++reps;
      const auto v = t[a * nx + a];
      if (alpha[v] == v) ++s.fixed_points;
    }
    s.representations += reps;
    if (reps) ++s.representable;
    std::vector<bool> seen(functions, false);
    for (std::size_t a = 0; a < nx; ++a) {
      std::uint64_t code = 0;
      for (std::size_t y = nx; y > 0; --y) code = code * nz + t[a * nx + y - 1];
      seen[code] = true;
    }
    bool all = true;
    for (bool b : seen) all = all && b;
    if (all) ++s.surjective;
    std::size_t i = 0;
    while (i < cells && ++t[i] == nz) t[i++] = 0;
    if (i == cells) break;
  }
  return s;
}

bool has_fixed_point(const std::vector<std::size_t>& alpha) {
  for (std::size_t z = 0; z < alpha.size(); ++z) {
    if (alpha[z] == z) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("negation diagonal on a two-element set") {
  const FinSet X({"a", "b"});
  const auto F = CurriedMap::make(X, booleans(), {0, 1, 1, 0});
  const auto C = cantor_diagonal(F, boolean_negation());
  CHECK(C.table == std::vector<std::size_t>{1, 1});
  CHECK_FALSE(find_representation(F, C));
  CHECK(code_of([&] { lawvere_fixed_point(F, boolean_negation()); }) == ErrorCode::NotSurjective);
  CHECK_FALSE(is_surjective(F));
}

TEST_CASE("identity alpha always has its fixed point") {
  const FinSet X({"a", "b"});
  const auto F = CurriedMap::make(X, booleans(), {0, 1, 0, 1});
  const auto fp = lawvere_fixed_point(F, FinMap::identity(booleans()));
  CHECK(fp.witness == 0);
  CHECK(fp.value == 0);
}

TEST_CASE("Cantor: no table X -> [X,2] represents its negated diagonal") {
  for (std::size_t nx = 1; nx <= 4; ++nx) {
    const auto X = numbered(nx);
    const auto count = table_count(nx, 2);
    for (std::uint64_t t = 0; t < count; ++t) {
      const auto F = CurriedMap::from_index(X, booleans(), t);
      const auto C = cantor_diagonal(F, boolean_negation());
      for (std::size_t x = 0; x < nx; ++x) REQUIRE(C(x) != F.at(x, x));
      REQUIRE_FALSE(find_representation(F, C));
      REQUIRE_FALSE(is_surjective(F));
    }
  }
}

TEST_CASE("sweeps agree with the brute-force tally") {
  const std::vector<std::vector<std::size_t>> alphas = {
      {1, 0}, {0, 1}, {0, 0}, {1, 2, 0}, {1, 0, 2}, {0, 0, 0}, {2, 2, 1}, {0}};
  for (const auto& alpha : alphas) {
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      if (alpha.size() == 3 && nx == 3) continue;
      const auto expect = brute_sweep(nx, alpha);
      CHECK(sweep_serial(nx, alpha) == expect);
      CHECK(sweep_parallel(nx, alpha) == expect);
    }
  }
}

TEST_CASE("serial and parallel kernels agree on larger sweeps") {
  const std::vector<std::size_t> neg3 = {1, 2, 0};
  CHECK(sweep_serial(3, neg3) == sweep_parallel(3, neg3));
  const std::vector<std::size_t> tri = {1, 0, 2};
  const auto s = sweep_parallel(3, tri);
  CHECK(s == sweep_serial(3, tri));
  CHECK(s.tables == 19683);
  CHECK(s.fixed_points == s.representations);
  CHECK(delta_mismatches_serial(3, tri) == 0);
  CHECK(delta_mismatches_parallel(3, tri) == 0);
  CHECK(delta_mismatches_parallel(4, {1, 0}) == 0);
}

TEST_CASE("contrapositive: fixed-point-free alpha admits no surjection") {
  const std::vector<std::vector<std::size_t>> free_alphas = {{1, 0}, {1, 2, 0}, {2, 0, 1}, {2, 2, 0}};
  for (const auto& alpha : free_alphas) {
    REQUIRE_FALSE(has_fixed_point(alpha));
    for (std::size_t nx = 1; nx <= 3; ++nx) {
      if (alpha.size() == 3 && nx == 3) continue;
      const auto s = sweep_serial(nx, alpha);
      CHECK(s.surjective == 0);
      CHECK(s.representable == 0);
    }
  }
  // With one value every table is onto, and alpha is the identity.
  const auto s = sweep_serial(3, {0});
  CHECK(s.surjective == 1);
  CHECK(s.fixed_points == 3);
}

TEST_CASE("every represented diagonal yields a fixed point") {
  const std::vector<std::size_t> alpha = {1, 0, 2};
  const auto X = numbered(2);
  const auto Z = tri_values();
  FinMap a = FinMap::make(Z, Z, alpha);
  for (std::uint64_t t = 0; t < table_count(2, 3); ++t) {
    const auto F = CurriedMap::from_index(X, Z, t);
    if (!find_representation(F, cantor_diagonal(F, a))) continue;
    const auto fp = lawvere_fixed_point(F, a);
    CHECK(a(fp.value) == fp.value);
  }
}

TEST_CASE("explicit delta factorisation matches the pointwise diagonal") {
  for (std::size_t nx = 1; nx <= 3; ++nx) {
    const auto X = numbered(nx);
    for (std::uint64_t t = 0; t < table_count(nx, 3); t += 7) {
      const auto F = CurriedMap::from_index(X, tri_values(), t);
      CHECK(diagonal_via_delta(F, tri_negation()) == cantor_diagonal(F, tri_negation()));
    }
  }
  const auto F = CurriedMap::from_index(numbered(20), values(2), 0);
  CHECK(code_of([&] { diagonal_via_delta(F, boolean_negation()); }) == ErrorCode::TooLarge);
}

TEST_CASE("three-valued diagonal lands on J") {
  const FinSet X({"a", "b"});
  const auto F = CurriedMap::make(X, tri_values(), {2, 1, 0, 0});
  const auto r = three_valued_diagonal_analysis(F);
  CHECK(r.diagonal.table == std::vector<std::size_t>{2, 1});
  CHECK(r.representations == std::vector<std::size_t>{0});
  CHECK(r.all_j);

  std::size_t represented = 0;
  for (std::uint64_t t = 0; t < table_count(3, 3); ++t) {
    const auto G = CurriedMap::from_index(numbered(3), tri_values(), t);
    const auto rep = three_valued_diagonal_analysis(G);
    REQUIRE(rep.all_j);
    for (auto z : rep.representations) REQUIRE(tri_value(G.at(z, z)) == TriValue::J);
    if (!rep.representations.empty()) ++represented;
  }
  CHECK(represented > 0);
  CHECK(code_of([&] {
          three_valued_diagonal_analysis(CurriedMap::make(X, booleans(), {0, 0, 0, 0}));
        }) == ErrorCode::InvalidMap);
}

TEST_CASE("map validation") {
  const FinSet X({"a", "b"});
  CHECK(code_of([] { FinSet({"a", "a"}); }) == ErrorCode::InvalidMap);
  CHECK(code_of([&] { CurriedMap::make(X, booleans(), {0, 1, 1}); }) == ErrorCode::InvalidMap);
  CHECK(code_of([&] { CurriedMap::make(X, booleans(), {0, 1, 1, 2}); }) == ErrorCode::InvalidMap);
  CHECK(code_of([&] { FinMap::make(X, booleans(), {0}); }) == ErrorCode::InvalidMap);
  const auto F = CurriedMap::make(X, booleans(), {0, 1, 1, 0});
  CHECK(code_of([&] { cantor_diagonal(F, tri_negation()); }) == ErrorCode::InvalidMap);
  CHECK(code_of([&] { compose(boolean_negation(), FinMap::identity(X)); }) ==
        ErrorCode::InvalidMap);
  CHECK(code_of([] { table_count(7, 3); }) == ErrorCode::TooLarge);
  CHECK(function_space(X, tri_values()).label(5) == "J,1");
  CHECK(X.require("b") == 1);
  CHECK(code_of([&] { X.require("c"); }) == ErrorCode::InvalidMap);
}
