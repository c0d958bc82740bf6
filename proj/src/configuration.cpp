#include "subshift/configuration.hpp"

#include <algorithm>
#include <numeric>

#include "subshift/error.hpp"

namespace subshift {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Configuration::Configuration(Word left_period, Word center, Word right_period, std::int64_t origin_offset)
    : left_(std::move(left_period)), center_(std::move(center)), right_(std::move(right_period)),
      offset_(origin_offset) {
  if (left_.empty() || right_.empty()) throw Error("invalid-configuration", "periodic tails must be nonempty");
}

Configuration Configuration::constant(Letter a) { return Configuration({a}, {}, {a}, 0); }

Configuration Configuration::marked(Letter background, const Word& marked, std::int64_t start) {
  return Configuration({background}, marked, {background}, -start);
}

Configuration Configuration::periodic(const Word& period) { return Configuration(period, period, period, 0); }

Letter Configuration::at(std::int64_t i) const {
  const auto begin = center_begin();
  const auto end = center_end();
  if (i < begin) {
    const auto len = static_cast<std::int64_t>(left_.size());
    // begin-1 maps to the last letter of the left period
    return left_[static_cast<std::size_t>(len - 1 - floor_mod(begin - 1 - i, len))];
  }
  if (i >= end) return right_[static_cast<std::size_t>(floor_mod(i - end, static_cast<std::int64_t>(right_.size())))];
  return center_[static_cast<std::size_t>(i - begin)];
}

Word Configuration::window(std::int64_t start, std::size_t n) const {
  Word w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = at(start + static_cast<std::int64_t>(k));
  return w;
}

Configuration Configuration::shifted(std::int64_t k) const { return Configuration(left_, center_, right_, offset_ + k); }

std::int64_t lcm_of_periods(const Configuration& x) {
  return std::lcm(static_cast<std::int64_t>(x.left_period().size()),
                  static_cast<std::int64_t>(x.right_period().size()));
}

bool Configuration::is_periodic() const {
  // A periodic point has the primitive period of both tails, which divides
  // lcm(|L|, |R|); outside [begin - P, end) both sides of x_i = x_{i+P} lie in
  // one tail.
  const auto p = lcm_of_periods(*this);
  for (auto i = center_begin() - p; i < center_end(); ++i)
    if (at(i) != at(i + p)) return false;
  return true;
}

bool operator==(const Configuration& x, const Configuration& y) {
  const auto p = std::lcm(lcm_of_periods(x), lcm_of_periods(y));
  const auto lo = std::min(x.center_begin(), y.center_begin()) - p;
  const auto hi = std::max(x.center_end(), y.center_end()) + p;
  for (auto i = lo; i < hi; ++i)
    if (x.at(i) != y.at(i)) return false;
  return true;
}

}  // namespace subshift
