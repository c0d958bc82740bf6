#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "subshift/alphabet.hpp"
#include "subshift/configuration.hpp"
#include "subshift/error.hpp"
#include "subshift/presentation.hpp"

namespace subshift {

/// A finitely described subshift: an SFT, a sparse-marker shift, or a
/// product, each optionally restricted further by a list of forbidden words.
///
/// Values are immutable and cheap to copy; the compiled presentation and the
/// language cache are shared between copies and safe for concurrent reads.
class Subshift {
 public:
  enum class Kind { sft, sparse, product };

  Kind kind() const;
  const Alphabet& alphabet() const;

  /// For an SFT this is its defining list; for the other kinds the words
  /// forbidden on top of the base description (see `forbid`).
  const std::vector<Word>& forbidden() const;

  Letter background() const;                                ///< sparse only
  const std::vector<std::vector<Letter>>& families() const;  ///< sparse only
  const Subshift& left() const;                              ///< product only
  const Subshift& right() const;                             ///< product only

  bool empty() const;

  /// L_n(X) in canonical order; cached. Throws "empty-subshift".
  const std::vector<Word>& language(std::size_t n) const;
  std::uint64_t complexity(std::size_t n) const;
  bool contains(const Word& w) const;
  /// Exact membership of an eventually periodic point.
  bool contains(const Configuration& x) const;

  /// X(w): same description with w appended to the forbidden list.
  Subshift forbid(const Word& w) const;
  Subshift forbid(const std::vector<Word>& words) const;

  /// Essential presentation (may have no vertices when the shift is empty).
  const LabeledGraph& graph() const;
  const SubsetAutomaton& automaton() const;

  friend Subshift build_sft(Alphabet alphabet, std::vector<Word> forbidden);
  friend Subshift build_sparse(Alphabet alphabet, Letter background, std::vector<std::vector<Letter>> families);
  friend Subshift product(const Subshift& left, const Subshift& right);

 private:
  struct State;
  explicit Subshift(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  std::shared_ptr<const State> state_;
};

Subshift build_sft(Alphabet alphabet, std::vector<Word> forbidden);
/// Families are multisets of marker letters; every sub-multiset (including the
/// empty one) is allowed.
Subshift build_sparse(Alphabet alphabet, Letter background, std::vector<std::vector<Letter>> families);
/// Pair alphabet "(l,r)" with index l * |right| + r.
Subshift product(const Subshift& left, const Subshift& right);

inline std::vector<Word> enumerate_language(const Subshift& x, std::size_t n) {
  if (n == 0) throw Error("invalid-length", "n must be at least 1");
  return x.language(n);
}
inline bool contains_word(const Subshift& x, const Word& w) { return x.contains(w); }

/// [w]_0^+ restricted to X; offset is always 0 here.
struct CylinderHandle {
  Word word;
  std::int64_t offset = 0;

  bool contains(const Configuration& x) const { return x.window(offset, word.size()) == word; }
};

}  // namespace subshift
