#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subshift/subshift.hpp"

namespace subshift {

/// X(w). The result may be empty.
inline Subshift forbid(const Subshift& x, const Word& w) { return x.forbid(w); }

/// Whether some aperiodic point of X carries w at 0..|w|-1.
/// Throws "not-in-language".
bool cylinder_has_aperiodic(const Subshift& x, const Word& w);

struct RemovalRow {
  std::size_t n = 0;
  std::uint64_t lhs = 0;  // P_{X(w)}(n)
  std::int64_t rhs = 0;   // P_X(n) - (n - |w| + 1)
  bool holds() const { return static_cast<std::int64_t>(lhs) <= rhs; }
  std::int64_t slack() const { return rhs - static_cast<std::int64_t>(lhs); }
};

struct RemovalReport {
  Word w;
  std::vector<RemovalRow> rows;
  bool holds() const;
};

/// Rows for |w| <= n <= n_max. Throws "no-aperiodic-point" when the
/// cylinder of w has only periodic points.
RemovalReport verify_removal_bound(const Subshift& x, const Word& w, std::size_t n_max);

struct ChainLevel {
  Subshift subshift;  // X_i
  Word w;
  Word w_tilde;  // w extended 2R times on each side inside X_i
};

struct ChainBound {
  std::size_t length = 0;      // the word-length bound used (L or L')
  std::uint64_t complexity = 0;  // P_{X_0}(2 length - 1)
  bool holds = false;          // k < complexity / length
};

struct Chain {
  std::vector<ChainLevel> levels;     // X_0 .. X_{k-1}
  std::optional<ChainLevel> terminal;  // X_k, with X_k(w̃_k) empty
  std::size_t range = 0;
  std::size_t max_len = 0;  // L

  std::size_t k() const { return levels.size(); }
  std::size_t max_len_extended() const { return max_len + 4 * range; }  // L' = L + 4R
  /// w̃_0, ..., w̃_k.
  std::vector<Word> words() const;

  ChainBound bound_on_w;        // with L
  ChainBound bound_on_w_tilde;  // with L'
  /// P_{X_i}(2L' - 1) for i = 0..k; checked against P_{X_0}(2L' - 1) - i L'.
  std::vector<std::uint64_t> sharpening;
  bool sharpening_holds = false;
};

/// Greedy chain: at each level the shortlex-smallest w with |w| <= L that
/// extends uniquely 2R times. Throws "no-unique-extender" naming the level.
Chain build_chain(const Subshift& x, std::size_t range, std::size_t max_len, std::size_t cap);

/// Fills the bound fields of a chain over X_0.
void check_chain_bounds(Chain& chain, const Subshift& x0);

struct ShadowingReport {
  std::optional<std::size_t> level;
  std::size_t distance = 0;  // D
  std::size_t cap = 0;
  Word v;                            // the unique extension of u in Y
  std::optional<Word> counterexample;  // a word defeating D - 1
};

/// Least D <= cap such that every word of X of length |u| + 2(D + T) with u
/// centered, and no forbidden word lying inside the D-neighbourhood of u,
/// has v centered. Throws "not-in-language", "not-uniquely-extending",
/// "cap-exceeded".
ShadowingReport shadowing_distance(const Subshift& x, const std::vector<Word>& y_forbidden, const Word& u,
                                   std::size_t t, std::size_t cap);

struct SyndeticReport {
  std::size_t gap = 0;  // G
  std::size_t distance = 0;  // D
  std::optional<Word> counterexample;  // a word defeating G - 1
};

/// Least G <= cap such that every window of length G, in every point, holds
/// a start of w̃_0 or of some w̃_i with no w̃_t (t < i) starting within D of
/// it. Checked on words of length G + 2D + 2M - 2, M the longest w̃.
/// Throws "invalid-chain", "cap-exceeded".
SyndeticReport syndetic_gap(const Subshift& x, const Chain& chain, std::size_t d, std::size_t cap);

}  // namespace subshift
