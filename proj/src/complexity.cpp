#include "subshift/complexity.hpp"

#include <algorithm>
#include <cmath>

#include "subshift/error.hpp"

namespace subshift {

std::uint64_t complexity(const Subshift& x, std::size_t n) { return x.complexity(n); }

ComplexityTable complexity_table(const Subshift& x, std::size_t max_n, std::string id) {
  ComplexityTable t{std::move(id), {}};
  for (std::size_t n = 1; n <= max_n; ++n) t.values.push_back(x.complexity(n));
  return t;
}

MorseHedlundVerdict morse_hedlund_classify(const Subshift& x, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n)
    if (x.complexity(n) <= n) return {true, n};
  return {};
}

std::vector<Word> centered_extensions(const Subshift& x, const Word& w, std::size_t t) {
  if (!x.contains(w)) return {};
  std::vector<Word> current{w};
  const auto a = static_cast<Letter>(x.alphabet().size());
  for (std::size_t k = 0; k < t; ++k) {
    std::vector<Word> next;
    for (const auto& u : current)
      for (Letter l = 0; l < a; ++l)
        for (Letter r = 0; r < a; ++r) {
          Word e;
          e.reserve(u.size() + 2);
          e.push_back(l);
          e.insert(e.end(), u.begin(), u.end());
          e.push_back(r);
          if (x.contains(e)) next.push_back(std::move(e));
        }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

std::optional<Word> ExtensionReport::extension_to(std::size_t t) const {
  if (t > radius) return std::nullopt;
  const auto trim = radius - t;
  return Word(extension.begin() + static_cast<std::ptrdiff_t>(trim), extension.end() - static_cast<std::ptrdiff_t>(trim));
}

ExtensionReport extension_radius(const Subshift& x, const Word& w, std::size_t cap) {
  if (!x.contains(w)) throw Error("not-in-language", "word is not in the language");
  ExtensionReport r{w, 0, false, cap, w};
  const auto a = static_cast<Letter>(x.alphabet().size());
  for (std::size_t k = 1; k <= cap; ++k) {
    std::optional<Word> only;
    bool several = false;
    for (Letter left = 0; left < a && !several; ++left) {
      for (Letter right = 0; right < a && !several; ++right) {
        Word u;
        u.reserve(r.extension.size() + 2);
        u.push_back(left);
        u.insert(u.end(), r.extension.begin(), r.extension.end());
        u.push_back(right);
        if (!x.contains(u)) continue;
        if (only) several = true;
        else only = std::move(u);
      }
    }
    if (several || !only) return r;
    r.radius = k;
    r.extension = std::move(*only);
  }
  r.at_least_cap = true;
  return r;
}

NonextendableRadius min_nonextendable_radius(const Subshift& x, std::size_t n, std::size_t cap) {
  std::size_t worst = 0;
  for (const auto& w : x.language(n)) {
    const auto r = extension_radius(x, w, cap);
    if (r.at_least_cap) return {cap, true};
    worst = std::max(worst, r.radius);
  }
  return {worst + 1, false};
}

ExtensionWindow find_extension_window(const Subshift& x, std::size_t n, unsigned d, std::size_t cap,
                                      std::size_t hypothesis_from) {
  if (n < 2 || d == 0) throw Error("invalid-argument", "need n >= 2 and d >= 1");
  if (n < hypothesis_from) throw Error("invalid-argument", "n must be at least the hypothesis threshold");
  ExtensionWindow out;
  out.threshold = std::log(2.0) / (4.0 * d) * static_cast<double>(n);
  out.m_max = static_cast<std::size_t>(std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));

  for (std::size_t j = std::max<std::size_t>(hypothesis_from, 1); j <= out.m_max; ++j) {
    bool holds = false;
    try {
      holds = static_cast<long double>(x.complexity(j)) <= std::pow(static_cast<long double>(j), d);
    } catch (const Error& e) {
      if (e.code() != "count-overflow") throw;
    }
    if (!holds)
      throw Error("lemma-window-not-found", "hypothesis P(j) <= j^" + std::to_string(d) + " fails at j = " +
                                                std::to_string(j));
  }
  for (std::size_t m = 1; m <= out.m_max; ++m) {
    const auto k = min_nonextendable_radius(x, m, cap);
    if (k.exceeds_cap || static_cast<double>(k.k) >= out.threshold) {
      out.m = m;
      out.k_m = k;
      return out;
    }
  }
  throw Error("lemma-window-not-found", "no m <= " + std::to_string(out.m_max) + " has k_m >= C n");
}

std::optional<std::size_t> slow_growth_window(std::span<const std::uint64_t> f, std::size_t k, double eps) {
  if (k == 0 || !(eps > 0) || f.size() < k + 1) throw Error("invalid-argument", "need k >= 1, eps > 0, N >= k");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) throw Error("invalid-argument", "f must be positive");
    if (i > 0 && f[i] < f[i - 1]) throw Error("not-nondecreasing", "f decreases at " + std::to_string(i));
  }
  for (std::size_t i = 0; i + k < f.size(); ++i)
    if (static_cast<double>(f[i + k] - f[i]) / static_cast<double>(f[i]) < eps) return i;
  return std::nullopt;
}

}  // namespace subshift
