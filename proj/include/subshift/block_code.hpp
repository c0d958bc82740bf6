#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "subshift/configuration.hpp"
#include "subshift/subshift.hpp"

namespace subshift {

/// A sliding block code of range R on a subshift X. The rule is a table on
/// exactly the windows of L_{2R+1}(X); outputs()[i] is the image of
/// windows()[i].
class BlockCode {
 public:
  BlockCode(Subshift domain, std::size_t range, std::vector<Letter> outputs);

  /// Tabulates `rule` on every window of L_{2R+1}(X).
  static BlockCode from_rule(const Subshift& domain, std::size_t range,
                             const std::function<Letter(const Word& window)>& rule);

  const Subshift& domain() const { return domain_; }
  const Alphabet& alphabet() const { return domain_.alphabet(); }
  std::size_t range() const { return range_; }
  const std::vector<Word>& windows() const { return domain_.language(2 * range_ + 1); }
  const std::vector<Letter>& outputs() const { return outputs_; }

  std::optional<Letter> lookup(const Word& window) const;
  /// Throws "rule-incomplete" for windows outside the table.
  Letter rule(const Word& window) const;

 private:
  Subshift domain_;
  std::size_t range_;
  std::vector<Letter> outputs_;
};

Word apply_to_word(const BlockCode& phi, const Word& w);
/// The image point; the origin stays put and the output tails have the
/// input tail periods.
Configuration apply_to_config(const BlockCode& phi, const Configuration& x);

/// outer ∘ inner (inner is applied first). Range is the sum of ranges and the
/// domain is inner's. Throws "rule-incomplete" if inner leaves outer's table.
BlockCode compose(const BlockCode& outer, const BlockCode& inner);
/// The same map expressed at a range >= its own.
BlockCode pad(const BlockCode& phi, std::size_t range);
/// The same map at the smallest range that expresses it.
BlockCode minimize_range(const BlockCode& phi);

/// Equality as maps on X, decided on L_{2R*+1}(X) with R* the larger range.
bool equal_on_shift(const Subshift& x, const BlockCode& phi, const BlockCode& psi);

BlockCode identity_code(const Subshift& x, std::size_t range = 0);
/// σ^k, (σ^k x)_i = x_{i+k}, at range |k|.
BlockCode shift_code(const Subshift& x, std::int64_t k);
/// Range-0 code applying a letter map.
BlockCode letter_map(const Subshift& x, const std::vector<Letter>& image);

}  // namespace subshift
