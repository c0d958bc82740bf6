#pragma once
// Automorphisms of range R by exhaustion over rule tables. Only membership
// of words in L(X) comes from the library.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "subshift/subshift.hpp"

namespace oracle {

using namespace subshift;

// Brute-force: every rule table of the given range, kept if the induced map
// is a bijection on the points of every period p <= max_period (cyclic words).
inline std::vector<std::vector<Letter>> bijective_tables(const Subshift& x, std::size_t range, std::size_t max_period) {
  const auto& windows = x.language(2 * range + 1);
  const auto a = x.alphabet().size();
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> t(windows.size(), 0);
  const auto rule = [&](const Word& w) -> std::optional<Letter> {
    auto it = std::lower_bound(windows.begin(), windows.end(), w);
    if (it == windows.end() || *it != w) return std::nullopt;
    return t[static_cast<std::size_t>(it - windows.begin())];
  };
  while (true) {
    bool ok = true;
    for (std::size_t p = 1; p <= max_period && ok; ++p) {
      // periodic points of period p are the cyclic words all of whose windows lie in L
      std::set<Word> points, images;
      Word w(p, 0);
      std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i == p) {
          Word rep;
          for (std::size_t k = 0; k < 3 * p + 2 * range; ++k) rep.push_back(w[k % p]);
          if (!x.contains(rep)) return;  // not a point of X
          Word img(p);
          for (std::size_t j = 0; j < p && ok; ++j) {
            Word win(2 * range + 1);
            for (std::size_t k = 0; k < win.size(); ++k) win[k] = w[(j + p * 4 + k - range) % p];
            if (!x.contains(win)) return;  // not a point of X
            img[j] = *rule(win);
          }
          // the image must be a point of X as well
          for (std::size_t j = 0; j < p; ++j) {
            Word win(2 * range + 1);
            for (std::size_t k = 0; k < win.size(); ++k) win[k] = img[(j + k) % p];
            Word long_win;
            for (std::size_t k = 0; k < 3 * p; ++k) long_win.push_back(img[k % p]);
            if (!x.contains(long_win)) ok = false;
          }
          points.insert(w);
          images.insert(img);
          return;
        }
        for (Letter c = 0; c < a; ++c) {
          w[i] = c;
          gen(i + 1);
        }
      };
      gen(0);
      if (points.size() != images.size()) ok = false;
    }
    if (ok) out.push_back(t);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < a) break;
      t[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace oracle
