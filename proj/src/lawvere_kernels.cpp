#include "selfref/lawvere_kernels.hpp"

#include <array>
#include <string>

#include "selfref/error.hpp"
#include "selfref/lawvere.hpp"

namespace selfref::lawvere {

namespace {

constexpr std::uint64_t kMaxTables = std::uint64_t{1} << 32;
constexpr std::size_t kMaxCells = 64;

struct Shape {
  std::size_t nx;
  std::size_t nz;
  std::uint64_t tables;
};

Shape check_shape(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const std::size_t nz = alpha.size();
  if (nx == 0 || nz == 0) throw Error(ErrorCode::InvalidArgument, "sweeps need nonempty X and Z");
  for (auto v : alpha) {
    if (v >= nz) throw Error(ErrorCode::InvalidMap, "alpha value outside Z");
  }
  if (nx * nx > kMaxCells) throw Error(ErrorCode::TooLarge, "X too large to sweep");
  return {nx, nz, table_count(nx, nz)};
}

void decode(std::uint64_t t, const Shape& s, std::array<std::size_t, kMaxCells>& cells) {
  for (std::size_t i = 0; i < s.nx * s.nx; ++i) {
    cells[i] = static_cast<std::size_t>(t % s.nz);
    t /= s.nz;
  }
}

SweepStats examine(std::uint64_t t, const Shape& s, const std::vector<std::size_t>& alpha) {
  std::array<std::size_t, kMaxCells> f{};
  decode(t, s, f);
  const std::size_t n = s.nx;
  SweepStats st;
  st.tables = 1;
  bool any = false;
  for (std::size_t a = 0; a < n; ++a) {
    bool same = true;
    for (std::size_t y = 0; y < n && same; ++y) same = f[a * n + y] == alpha[f[y * n + y]];
    if (!same) continue;
    any = true;
    ++st.representations;
    const std::size_t v = f[a * n + a];
    if (alpha[v] == v) ++st.fixed_points;
  }
  if (any) st.representable = 1;

  // [X,Z] has nz^nx elements, so only nx >= nz^nx rows can cover it.
  std::uint64_t fs = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    fs *= s.nz;
    small = fs <= n;
  }
  if (small) {
    std::array<bool, kMaxCells> hit{};
    std::uint64_t covered = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t code = 0;
      for (std::size_t y = n; y > 0; --y) code = code * s.nz + f[x * n + y - 1];
      if (!hit[code]) {
        hit[code] = true;
        ++covered;
      }
    }
    if (covered == fs) st.surjective = 1;
  }
  return st;
}

void add(SweepStats& into, const SweepStats& s) {
  into.tables += s.tables;
  into.representable += s.representable;
  into.representations += s.representations;
  into.fixed_points += s.fixed_points;
  into.surjective += s.surjective;
}

bool delta_differs(std::uint64_t t, const FinSet& X, const FinSet& Z,
                   const FinMap& alpha) {
  const CurriedMap F = CurriedMap::from_index(X, Z, t);
  return !(diagonal_via_delta(F, alpha) == cantor_diagonal(F, alpha));
}

FinSet numbered(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinSet(std::move(labels));
}

}  // namespace

std::uint64_t table_count(std::size_t nx, std::size_t nz) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < nx * nx; ++i) {
    if (out > kMaxTables / nz) {
      throw Error(ErrorCode::TooLarge, std::to_string(nz) + "^" + std::to_string(nx * nx) +
                                           " tables is too many to sweep");
    }
    out *= nz;
  }
  return out;
}

SweepStats sweep_serial(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const Shape s = check_shape(nx, alpha);
  SweepStats total;
  for (std::uint64_t t = 0; t < s.tables; ++t) add(total, examine(t, s, alpha));
  return total;
}

SweepStats sweep_parallel(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const Shape s = check_shape(nx, alpha);
  std::uint64_t tables = 0, representable = 0, representations = 0, fixed_points = 0,
                surjective = 0;
  const auto n = static_cast<std::int64_t>(s.tables);
#pragma omp parallel for schedule(static) \
    reduction(+ : tables, representable, representations, fixed_points, surjective)
  for (std::int64_t t = 0; t < n; ++t) {
    const SweepStats st = examine(static_cast<std::uint64_t>(t), s, alpha);
    tables += st.tables;
    representable += st.representable;
    representations += st.representations;
    fixed_points += st.fixed_points;
    surjective += st.surjective;
  }
  return {tables, representable, representations, fixed_points, surjective};
}

std::uint64_t delta_mismatches_serial(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const Shape s = check_shape(nx, alpha);
  const FinSet X = numbered(nx);
  const FinSet Z = numbered(s.nz);
  const FinMap a = FinMap::make(Z, Z, alpha);
  std::uint64_t bad = 0;
  for (std::uint64_t t = 0; t < s.tables; ++t) bad += delta_differs(t, X, Z, a) ? 1 : 0;
  return bad;
}

std::uint64_t delta_mismatches_parallel(std::size_t nx, const std::vector<std::size_t>& alpha) {
  const Shape s = check_shape(nx, alpha);
  const FinSet X = numbered(nx);
  const FinSet Z = numbered(s.nz);
  const FinMap a = FinMap::make(Z, Z, alpha);
  std::uint64_t bad = 0;
  const auto n = static_cast<std::int64_t>(s.tables);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : bad)
  for (std::int64_t t = 0; t < n; ++t) {
    bad += delta_differs(static_cast<std::uint64_t>(t), X, Z, a) ? 1 : 0;
  }
  return bad;
}

}  // namespace selfref::lawvere
