#include "subshift/chains.hpp"

#include <algorithm>
#include <map>

#include "subshift/complexity.hpp"
#include "subshift/configuration.hpp"
#include "subshift/error.hpp"

namespace subshift {

namespace {

std::uint64_t complexity_or_zero(const Subshift& x, std::size_t n) { return x.empty() ? 0 : x.complexity(n); }

// Labels of the infinite paths leaving `from`, provided there is exactly one
// (as prefix + repeating cycle); nullopt if there are several.
struct Tail {
  Word prefix;
  Word cycle;
};

std::optional<Tail> unique_tail(const LabeledGraph& g, std::uint32_t from) {
  VertexSet s{from};
  std::map<VertexSet, std::size_t> seen;
  Word letters;
  while (true) {
    if (auto it = seen.find(s); it != seen.end())
      return Tail{Word(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(it->second)),
                  Word(letters.begin() + static_cast<std::ptrdiff_t>(it->second), letters.end())};
    seen.emplace(s, letters.size());
    std::optional<Letter> only;
    VertexSet next;
    for (std::size_t c = 0; c < g.alphabet_size(); ++c) {
      auto t = g.step(s, static_cast<Letter>(c));
      if (t.empty()) continue;
      if (only) return std::nullopt;
      only = static_cast<Letter>(c);
      next = std::move(t);
    }
    // essential graphs never dead-end
    if (!only) throw Error("invalid-graph", "dead end in an essential graph");
    letters.push_back(*only);
    s = std::move(next);
  }
}

bool occurs_inside(const Word& hay, const std::vector<Word>& needles, std::size_t from, std::size_t to) {
  for (const auto& f : needles)
    if (occurs_in(hay, f, from, to)) return true;
  return false;
}

bool starts_at(const Word& hay, const Word& needle, std::size_t pos) {
  return pos + needle.size() <= hay.size() && std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

bool cylinder_has_aperiodic(const Subshift& x, const Word& w) {
  if (!x.contains(w)) throw Error("not-in-language", "word is not in the language of X");
  const auto& g = x.graph();
  const auto back = g.reversed();
  for (std::uint32_t v0 = 0; v0 < g.vertex_count(); ++v0) {
    VertexSet ends{v0};
    for (auto c : w) ends = g.step(ends, c);
    if (ends.empty()) continue;
    const auto left = unique_tail(back, v0);
    if (!left) return true;
    for (auto v1 : ends) {
      const auto right = unique_tail(g, v1);
      if (!right) return true;
      Word center(left->prefix.rbegin(), left->prefix.rend());
      center.insert(center.end(), w.begin(), w.end());
      center.insert(center.end(), right->prefix.begin(), right->prefix.end());
      const Configuration point(Word(left->cycle.rbegin(), left->cycle.rend()), center, right->cycle,
                                static_cast<std::int64_t>(left->prefix.size()));
      if (!point.is_periodic()) return true;
    }
  }
  return false;
}

bool RemovalReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const RemovalRow& r) { return r.holds(); });
}

RemovalReport verify_removal_bound(const Subshift& x, const Word& w, std::size_t n_max) {
  if (!cylinder_has_aperiodic(x, w)) throw Error("no-aperiodic-point", "the cylinder of w has no aperiodic point");
  const auto reduced = x.forbid(w);
  RemovalReport report{w, {}};
  for (auto n = w.size(); n <= n_max; ++n) {
    RemovalRow row;
    row.n = n;
    row.lhs = complexity_or_zero(reduced, n);
    row.rhs = static_cast<std::int64_t>(x.complexity(n)) - static_cast<std::int64_t>(n - w.size() + 1);
    report.rows.push_back(row);
  }
  return report;
}

std::vector<Word> Chain::words() const {
  std::vector<Word> out;
  for (const auto& l : levels) out.push_back(l.w_tilde);
  if (terminal) out.push_back(terminal->w_tilde);
  return out;
}

void check_chain_bounds(Chain& chain, const Subshift& x0) {
  const auto k = static_cast<std::uint64_t>(chain.k());
  const auto bound = [&](std::size_t len) {
    ChainBound b;
    b.length = len;
    b.complexity = x0.complexity(2 * len - 1);
    b.holds = k * len < b.complexity;
    return b;
  };
  chain.bound_on_w = bound(chain.max_len);
  chain.bound_on_w_tilde = bound(chain.max_len_extended());
  const auto n = 2 * chain.max_len_extended() - 1;
  const auto lp = static_cast<std::int64_t>(chain.max_len_extended());
  chain.sharpening.clear();
  chain.sharpening_holds = true;
  std::vector<const Subshift*> xs;
  for (const auto& l : chain.levels) xs.push_back(&l.subshift);
  if (chain.terminal) xs.push_back(&chain.terminal->subshift);
  const auto p0 = static_cast<std::int64_t>(x0.complexity(n));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto p = complexity_or_zero(*xs[i], n);
    chain.sharpening.push_back(p);
    if (static_cast<std::int64_t>(p) > p0 - static_cast<std::int64_t>(i) * lp) chain.sharpening_holds = false;
  }
}

Chain build_chain(const Subshift& x, std::size_t range, std::size_t max_len, std::size_t cap) {
  if (range == 0 || max_len == 0) throw Error("invalid-argument", "R and L must be at least 1");
  if (cap < 2 * range) throw Error("invalid-argument", "cap must be at least 2R");
  if (x.empty()) throw Error("empty-subshift", "cannot build a chain on the empty subshift");
  Chain chain;
  chain.range = range;
  chain.max_len = max_len;
  Subshift current = x;
  while (true) {
    std::optional<ExtensionReport> found;
    for (std::size_t n = 1; n <= max_len && !found; ++n)
      for (const auto& w : current.language(n)) {
        auto r = extension_radius(current, w, 2 * range);
        if (r.radius >= 2 * range) {
          found = std::move(r);
          break;
        }
      }
    if (!found)
      throw Error("no-unique-extender", "no word of length <= " + std::to_string(max_len) + " extends uniquely " +
                                            std::to_string(2 * range) + " times at level " + std::to_string(chain.k()));
    ChainLevel level{current, found->word, *found->extension_to(2 * range)};
    auto next = current.forbid(level.w_tilde);
    if (next.empty()) {
      chain.terminal = std::move(level);
      break;
    }
    chain.levels.push_back(std::move(level));
    current = std::move(next);
  }
  check_chain_bounds(chain, x);
  return chain;
}

ShadowingReport shadowing_distance(const Subshift& x, const std::vector<Word>& y_forbidden, const Word& u,
                                   std::size_t t, std::size_t cap) {
  const auto y = x.forbid(y_forbidden);
  if (y.empty() || !y.contains(u)) throw Error("not-in-language", "u is not in the language of Y");
  const auto ext = extension_radius(y, u, t);
  if (ext.radius < t)
    throw Error("not-uniquely-extending", "u extends uniquely only " + std::to_string(ext.radius) + " times in Y");
  ShadowingReport report;
  report.cap = cap;
  report.v = *ext.extension_to(t);
  std::optional<Word> last_failure;
  for (std::size_t d = 0; d <= cap; ++d) {
    std::optional<Word> failure;
    for (const auto& w : centered_extensions(x, u, d + t)) {
      // the D-neighbourhood of u is w[t, t + |u| + 2D)
      if (occurs_inside(w, y_forbidden, t, t + u.size() + 2 * d)) continue;
      if (!std::equal(report.v.begin(), report.v.end(), w.begin() + static_cast<std::ptrdiff_t>(d))) {
        failure = w;
        break;
      }
    }
    if (!failure) {
      report.distance = d;
      report.counterexample = last_failure;
      return report;
    }
    last_failure = std::move(failure);
  }
  throw Error("cap-exceeded", "no D <= " + std::to_string(cap) + " works");
}

SyndeticReport syndetic_gap(const Subshift& x, const Chain& chain, std::size_t d, std::size_t cap) {
  if (chain.levels.empty()) throw Error("invalid-chain", "chain has no levels");
  const auto ws = chain.words();
  std::size_t m = 0;
  for (const auto& w : ws) m = std::max(m, w.size());
  const auto qualifies = [&](const Word& u, std::size_t j) {
    if (starts_at(u, ws[0], j)) return true;
    for (std::size_t i = 1; i < ws.size(); ++i) {
      if (!starts_at(u, ws[i], j)) continue;
      bool clear = true;
      for (std::size_t s = j - d; s <= j + d + ws[i].size() - 1 && clear; ++s)
        for (std::size_t tt = 0; tt < i && clear; ++tt) clear = !starts_at(u, ws[tt], s);
      if (clear) return true;
    }
    return false;
  };
  std::optional<Word> last_failure;
  for (std::size_t g = 1; g <= cap; ++g) {
    const auto len = g + 2 * d + 2 * m - 2;
    std::optional<Word> failure;
    for (const auto& u : x.language(len)) {
      bool hit = false;
      for (std::size_t j = d; j < d + g && !hit; ++j) hit = qualifies(u, j);
      if (!hit) {
        failure = u;
        break;
      }
    }
    if (!failure) return SyndeticReport{g, d, last_failure};
    last_failure = std::move(failure);
  }
  throw Error("cap-exceeded", "no gap G <= " + std::to_string(cap) + " works");
}

}  // namespace subshift
