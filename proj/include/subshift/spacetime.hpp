#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subshift/autos.hpp"

namespace subshift {

/// A rectangle of η(i, j) = (φ^j x)_i, the coordinate 0 of φ^j σ^i x, for
/// col_start <= i < col_start + width and row_start <= j < row_start + height.
struct SpaceTimeWindow {
  Configuration base;
  BlockCode code;
  std::int64_t col_start = 0;
  std::int64_t row_start = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Configuration> rows;  // φ^j x for j = row_start, ...
  std::vector<Word> grid;           // grid[j - row_start][i - col_start]

  Letter at(std::int64_t i, std::int64_t j) const {
    return grid.at(static_cast<std::size_t>(j - row_start)).at(static_cast<std::size_t>(i - col_start));
  }
};

/// Negative rows use the certificate's inverse. Throws "not-in-subshift".
SpaceTimeWindow spacetime_window(const Subshift& x, const AutomorphismCert& phi, const Configuration& point,
                                 std::size_t width, std::size_t height, std::int64_t col_start = 0,
                                 std::int64_t row_start = 0);

/// Distinct n×k sub-rectangles (n columns, k rows) of the window.
std::size_t rect_complexity(const SpaceTimeWindow& w, std::size_t n, std::size_t k);

struct PeriodVector {
  std::int64_t v1 = 0;
  std::int64_t v2 = 0;
  friend bool operator==(const PeriodVector&, const PeriodVector&) = default;
  friend auto operator<=>(const PeriodVector&, const PeriodVector&) = default;
};

/// Every v ≠ 0 with |v1|, |v2| <= bound such that η(p + v) = η(p) wherever
/// both lie in the window (window-consistent, not a proof). Sorted.
std::vector<PeriodVector> detect_period_vectors(const SpaceTimeWindow& w, std::size_t bound);

/// Per probe, the k (least |k|, then least k) with φx = σ^k x and |k| <= bound.
std::vector<std::optional<std::int64_t>> orbit_preserving(const Subshift& x, const AutomorphismCert& phi,
                                                          const std::vector<Configuration>& probes, std::size_t bound);

struct PowerShift {
  std::size_t power = 0;            // M
  std::vector<std::int64_t> shifts;  // t per probe: φ^M x = σ^t x
};

/// Least M <= m_max with φ^M acting on every probe as a shift by |t| <= shift_bound.
std::optional<PowerShift> power_is_shift(const Subshift& x, const AutomorphismCert& phi,
                                         const std::vector<Configuration>& probes, std::size_t m_max,
                                         std::size_t shift_bound);

/// One line per row, lowest row first; tokens space-separated unless the
/// alphabet is compact.
std::string to_text(const SpaceTimeWindow& w, const Alphabet& alphabet);

}  // namespace subshift
