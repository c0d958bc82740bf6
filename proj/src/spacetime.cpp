#include "subshift/spacetime.hpp"

#include <set>

#include "subshift/error.hpp"

namespace subshift {

namespace {

std::optional<std::int64_t> shift_between(const Configuration& from, const Configuration& to, std::size_t bound) {
  const auto b = static_cast<std::int64_t>(bound);
  for (std::int64_t a = 0; a <= b; ++a)
    for (std::int64_t k : {-a, a}) {
      if (to == from.shifted(k)) return k;
      if (a == 0) break;
    }
  return std::nullopt;
}

}  // namespace

SpaceTimeWindow spacetime_window(const Subshift& x, const AutomorphismCert& phi, const Configuration& point,
                                 std::size_t width, std::size_t height, std::int64_t col_start,
                                 std::int64_t row_start) {
  if (width == 0 || height == 0) throw Error("invalid-argument", "window must be nonempty");
  if (!x.contains(point)) throw Error("not-in-subshift", "base point is not in X");
  SpaceTimeWindow w{point, phi.code, col_start, row_start, width, height, {}, {}};
  // Walk from the origin row to row_start, then forward.
  Configuration row = point;
  for (std::int64_t j = 0; j < row_start; ++j) row = apply_to_config(phi.code, row);
  for (std::int64_t j = 0; j > row_start; --j) row = apply_to_config(phi.inverse, row);
  for (std::size_t j = 0; j < height; ++j) {
    if (j > 0) row = apply_to_config(phi.code, row);
    w.grid.push_back(row.window(col_start, width));
    w.rows.push_back(row);
  }
  return w;
}

std::size_t rect_complexity(const SpaceTimeWindow& w, std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || n > w.width || k > w.height) throw Error("invalid-argument", "rectangle must fit the window");
  std::set<std::vector<Letter>> seen;
  for (std::size_t j = 0; j + k <= w.height; ++j)
    for (std::size_t i = 0; i + n <= w.width; ++i) {
      std::vector<Letter> r;
      r.reserve(n * k);
      for (std::size_t b = 0; b < k; ++b)
        r.insert(r.end(), w.grid[j + b].begin() + static_cast<std::ptrdiff_t>(i),
                 w.grid[j + b].begin() + static_cast<std::ptrdiff_t>(i + n));
      seen.insert(std::move(r));
    }
  return seen.size();
}

std::vector<PeriodVector> detect_period_vectors(const SpaceTimeWindow& w, std::size_t bound) {
  if (bound >= std::min(w.width, w.height)) throw Error("invalid-argument", "bound must be below min(W, H)");
  const auto b = static_cast<std::int64_t>(bound);
  const auto width = static_cast<std::int64_t>(w.width);
  const auto height = static_cast<std::int64_t>(w.height);
  std::vector<PeriodVector> out;
  for (std::int64_t v1 = -b; v1 <= b; ++v1)
    for (std::int64_t v2 = -b; v2 <= b; ++v2) {
      if (v1 == 0 && v2 == 0) continue;
      bool ok = true;
      for (std::int64_t j = std::max<std::int64_t>(0, -v2); j < std::min(height, height - v2) && ok; ++j)
        for (std::int64_t i = std::max<std::int64_t>(0, -v1); i < std::min(width, width - v1) && ok; ++i)
          ok = w.grid[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] ==
               w.grid[static_cast<std::size_t>(j + v2)][static_cast<std::size_t>(i + v1)];
      if (ok) out.push_back({v1, v2});
    }
  return out;
}

std::vector<std::optional<std::int64_t>> orbit_preserving(const Subshift& x, const AutomorphismCert& phi,
                                                          const std::vector<Configuration>& probes, std::size_t bound) {
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& p : probes) {
    if (!x.contains(p)) throw Error("not-in-subshift", "probe is not in X");
    out.push_back(shift_between(p, apply_to_config(phi.code, p), bound));
  }
  return out;
}

std::optional<PowerShift> power_is_shift(const Subshift& x, const AutomorphismCert& phi,
                                         const std::vector<Configuration>& probes, std::size_t m_max,
                                         std::size_t shift_bound) {
  for (const auto& p : probes)
    if (!x.contains(p)) throw Error("not-in-subshift", "probe is not in X");
  std::vector<Configuration> images = probes;
  for (std::size_t m = 1; m <= m_max; ++m) {
    PowerShift found{m, {}};
    for (std::size_t i = 0; i < probes.size(); ++i) {
      images[i] = apply_to_config(phi.code, images[i]);
      if (found.shifts.size() == i)
        if (auto t = shift_between(probes[i], images[i], shift_bound)) found.shifts.push_back(*t);
    }
    if (found.shifts.size() == probes.size()) return found;
  }
  return std::nullopt;
}

std::string to_text(const SpaceTimeWindow& w, const Alphabet& alphabet) {
  std::size_t cell = 1;
  for (const auto& t : alphabet.letters()) cell = std::max(cell, t.size());
  std::string out;
  for (const auto& row : w.grid) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& t = alphabet.token(row[i]);
      if (!alphabet.compact() && i > 0) out += ' ';
      out += t;
      if (!alphabet.compact()) out.append(cell - t.size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace subshift
