#pragma once

#include <cstdint>

#include "subshift/alphabet.hpp"

namespace subshift {

/// An eventually periodic bi-infinite point  ...LLL . center . RRR...
///
/// The center occupies coordinates [-origin_offset, -origin_offset + |center|).
/// The letter immediately left of the center is the last letter of the left
/// period; the letter immediately right of it is the first letter of the
/// right period. origin_offset may be any integer, so the origin can sit in a
/// tail.
class Configuration {
 public:
  Configuration(Word left_period, Word center, Word right_period, std::int64_t origin_offset);

  /// The fixed point ...aaa...
  static Configuration constant(Letter a);
  /// Background everywhere except `marked` placed so that marked[0] sits at `start`.
  static Configuration marked(Letter background, const Word& marked, std::int64_t start);
  /// The periodic point p^∞ with p[0] at the origin.
  static Configuration periodic(const Word& period);

  const Word& left_period() const { return left_; }
  const Word& center() const { return center_; }
  const Word& right_period() const { return right_; }
  std::int64_t origin_offset() const { return offset_; }

  std::int64_t center_begin() const { return -offset_; }
  std::int64_t center_end() const { return -offset_ + static_cast<std::int64_t>(center_.size()); }

  Letter at(std::int64_t i) const;
  Word window(std::int64_t start, std::size_t n) const;

  /// σ^k: (σ^k x)_i = x_{i+k}.
  Configuration shifted(std::int64_t k) const;

  /// Whether σ^p x = x for some p > 0.
  bool is_periodic() const;

  /// Equality as points of A^Z (representations may differ).
  friend bool operator==(const Configuration& x, const Configuration& y);

 private:
  Word left_;
  Word center_;
  Word right_;
  std::int64_t offset_;
};

/// x_start ... x_{start+n-1}.
inline Word window(const Configuration& x, std::int64_t start, std::size_t n) { return x.window(start, n); }

std::int64_t lcm_of_periods(const Configuration& x);

}  // namespace subshift
