#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subshift/subshift.hpp"

namespace subshift {

/// P_X(n) for 1 <= n <= max_n.
struct ComplexityTable {
  std::string subshift_id;
  std::vector<std::uint64_t> values;  // values[n - 1] = P_X(n)

  std::size_t max_n() const { return values.size(); }
  std::uint64_t at(std::size_t n) const { return values.at(n - 1); }
};

std::uint64_t complexity(const Subshift& x, std::size_t n);
ComplexityTable complexity_table(const Subshift& x, std::size_t max_n, std::string id = {});

struct MorseHedlundVerdict {
  bool all_periodic = false;
  std::size_t witness = 0;  // smallest n* with P(n*) <= n*, when all_periodic
};

/// all-periodic as soon as P(n) <= n for some n <= max_n.
MorseHedlundVerdict morse_hedlund_classify(const Subshift& x, std::size_t max_n);

struct ExtensionReport {
  Word word;
  std::size_t radius = 0;  // largest k <= cap with a unique centered extension
  bool at_least_cap = false;
  std::size_t cap = 0;
  Word extension;  // the unique extension at `radius`

  /// The unique extension by t letters per side, when t <= radius.
  std::optional<Word> extension_to(std::size_t t) const;
};

/// Every word of X with w centered and t extra letters on each side, sorted.
std::vector<Word> centered_extensions(const Subshift& x, const Word& w, std::size_t t);

/// How far w extends uniquely to both sides. Throws "not-in-language".
ExtensionReport extension_radius(const Subshift& x, const Word& w, std::size_t cap);

/// k_n: least k such that no word of length n extends uniquely k times.
struct NonextendableRadius {
  std::size_t k = 0;
  bool exceeds_cap = false;  // some word is still unique at the cap
};

NonextendableRadius min_nonextendable_radius(const Subshift& x, std::size_t n, std::size_t cap);

struct ExtensionWindow {
  std::size_t m = 0;
  NonextendableRadius k_m;
  double threshold = 0;  // C * n with C = ln 2 / (4 d)
  std::size_t m_max = 0;  // floor(n ln n)
};

/// Searches m = 1, 2, ... <= floor(n ln n) for k_m >= C n. The growth
/// hypothesis P(j) <= j^d is checked for hypothesis_from <= j <= floor(n ln n)
/// first. Throws "lemma-window-not-found" when the hypothesis fails or no m
/// qualifies.
ExtensionWindow find_extension_window(const Subshift& x, std::size_t n, unsigned d, std::size_t cap,
                                      std::size_t hypothesis_from);

/// Smallest x in [0, N - k] with (f(x + k) - f(x)) / f(x) < eps, where
/// f is given on 0..N. Throws "not-nondecreasing" / "invalid-argument".
std::optional<std::size_t> slow_growth_window(std::span<const std::uint64_t> f, std::size_t k, double eps);

}  // namespace subshift
