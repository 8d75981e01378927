#pragma once

// Exhaustive sweeps over every curried map X -> [X,Z] for small X and Z.
// Each sweep has a serial reference and an OpenMP variant returning the same
// totals.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace selfref::lawvere {

struct SweepStats {
  std::uint64_t tables = 0;
  std::uint64_t representable = 0;      // tables whose diagonal is a row
  std::uint64_t representations = 0;    // (table, row) pairs matching the diagonal
  std::uint64_t fixed_points = 0;       // representations where alpha(F(a)(a)) = F(a)(a)
  std::uint64_t surjective = 0;         // tables whose rows cover [X,Z]

  friend bool operator==(const SweepStats&, const SweepStats&) = default;
};

// |Z|^(|X|^2) tables; throws TooLarge past 2^32.
std::uint64_t table_count(std::size_t nx, std::size_t nz);

// alpha is an endomap of Z = {0, .., nz-1} given by its table.
SweepStats sweep_serial(std::size_t nx, const std::vector<std::size_t>& alpha);
SweepStats sweep_parallel(std::size_t nx, const std::vector<std::size_t>& alpha);

// Number of tables where diagonal_via_delta differs from the pointwise
// alpha(F(x)(x)).
std::uint64_t delta_mismatches_serial(std::size_t nx, const std::vector<std::size_t>& alpha);
std::uint64_t delta_mismatches_parallel(std::size_t nx, const std::vector<std::size_t>& alpha);

}  // namespace selfref::lawvere
