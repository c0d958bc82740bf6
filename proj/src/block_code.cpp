#include "subshift/block_code.hpp"

#include <algorithm>
#include <map>

#include "subshift/error.hpp"

namespace subshift {

namespace {

Word middle(const Word& w, std::size_t trim) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(trim), w.end() - static_cast<std::ptrdiff_t>(trim));
}

}  // namespace

BlockCode::BlockCode(Subshift domain, std::size_t range, std::vector<Letter> outputs)
    : domain_(std::move(domain)), range_(range), outputs_(std::move(outputs)) {
  if (outputs_.size() != windows().size())
    throw Error("rule-incomplete", "table has " + std::to_string(outputs_.size()) + " entries, expected " +
                                       std::to_string(windows().size()));
  for (auto c : outputs_)
    if (c >= alphabet().size()) throw Error("invalid-letter", "rule output outside the alphabet");
}

BlockCode BlockCode::from_rule(const Subshift& domain, std::size_t range,
                               const std::function<Letter(const Word&)>& rule) {
  std::vector<Letter> out;
  const auto& ws = domain.language(2 * range + 1);
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(rule(w));
  return BlockCode(domain, range, std::move(out));
}

std::optional<Letter> BlockCode::lookup(const Word& window) const {
  const auto& ws = windows();
  auto it = std::lower_bound(ws.begin(), ws.end(), window);
  if (it == ws.end() || *it != window) return std::nullopt;
  return outputs_[static_cast<std::size_t>(it - ws.begin())];
}

Letter BlockCode::rule(const Word& window) const {
  if (auto c = lookup(window)) return *c;
  throw Error("rule-incomplete", "window " + alphabet().format(window) + " is not in the table");
}

Word apply_to_word(const BlockCode& phi, const Word& w) {
  const auto span = 2 * phi.range() + 1;
  if (w.size() < span) throw Error("invalid-length", "word shorter than 2R+1");
  Word out(w.size() - 2 * phi.range());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = phi.rule(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + span)));
  return out;
}

Configuration apply_to_config(const BlockCode& phi, const Configuration& x) {
  const auto r = static_cast<std::int64_t>(phi.range());
  const auto lp = static_cast<std::int64_t>(x.left_period().size());
  const auto rp = static_cast<std::int64_t>(x.right_period().size());
  // Left of begin the output repeats with period |L|, right of end with |R|.
  const auto begin = x.center_begin() - r - lp;
  const auto end = x.center_end() + r + rp;
  const auto image = [&](std::int64_t from, std::int64_t to) {
    return apply_to_word(phi, x.window(from - r, static_cast<std::size_t>(to - from + 2 * r)));
  };
  return Configuration(image(begin - lp, begin), image(begin, end), image(end, end + rp), -begin);
}

BlockCode compose(const BlockCode& outer, const BlockCode& inner) {
  if (!(outer.alphabet() == inner.alphabet())) throw Error("alphabet-mismatch", "codes use different alphabets");
  return BlockCode::from_rule(inner.domain(), outer.range() + inner.range(),
                              [&](const Word& w) { return outer.rule(apply_to_word(inner, w)); });
}

BlockCode pad(const BlockCode& phi, std::size_t range) {
  if (range < phi.range()) throw Error("invalid-argument", "cannot pad to a smaller range");
  if (range == phi.range()) return phi;
  const auto trim = range - phi.range();
  return BlockCode::from_rule(phi.domain(), range, [&](const Word& w) { return phi.rule(middle(w, trim)); });
}

BlockCode minimize_range(const BlockCode& phi) {
  const auto& ws = phi.windows();
  for (std::size_t r = 0; r < phi.range(); ++r) {
    const auto trim = phi.range() - r;
    std::map<Word, Letter> table;
    bool consistent = true;
    for (std::size_t i = 0; i < ws.size() && consistent; ++i) {
      auto [it, inserted] = table.emplace(middle(ws[i], trim), phi.outputs()[i]);
      consistent = inserted || it->second == phi.outputs()[i];
    }
    if (consistent)
      return BlockCode::from_rule(phi.domain(), r, [&](const Word& w) { return table.at(w); });
  }
  return phi;
}

bool equal_on_shift(const Subshift& x, const BlockCode& phi, const BlockCode& psi) {
  if (!(phi.alphabet() == psi.alphabet())) return false;
  const auto r = std::max(phi.range(), psi.range());
  for (const auto& w : x.language(2 * r + 1))
    if (phi.rule(middle(w, r - phi.range())) != psi.rule(middle(w, r - psi.range()))) return false;
  return true;
}

BlockCode identity_code(const Subshift& x, std::size_t range) {
  return BlockCode::from_rule(x, range, [range](const Word& w) { return w[range]; });
}

BlockCode shift_code(const Subshift& x, std::int64_t k) {
  const auto r = static_cast<std::size_t>(k < 0 ? -k : k);
  return BlockCode::from_rule(x, r, [&](const Word& w) { return w[static_cast<std::size_t>(static_cast<std::int64_t>(r) + k)]; });
}

BlockCode letter_map(const Subshift& x, const std::vector<Letter>& image) {
  if (image.size() != x.alphabet().size()) throw Error("invalid-argument", "letter map must cover the alphabet");
  return BlockCode::from_rule(x, 0, [&](const Word& w) { return image[w[0]]; });
}

}  // namespace subshift
