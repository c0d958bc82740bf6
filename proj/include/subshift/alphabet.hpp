#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subshift {

/// Index of a symbol in its alphabet. All enumeration order is by index.
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// An ordered list of distinct opaque tokens.
///
/// Words are printed by concatenating tokens when every token is a single
/// character, and space-separated otherwise. Parsing accepts both forms:
/// strings containing a space are split on spaces, anything else is
/// tokenized by longest match.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& token(Letter a) const;

  std::optional<Letter> find(std::string_view token) const;
  Letter index(std::string_view token) const;

  /// True when every token is exactly one character.
  bool compact() const { return compact_; }

  std::string format(const Word& w) const;
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<std::string> letters_;
  bool compact_ = true;
};

/// Canonical order: shorter words first, then lexicographic by letter index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Number of (possibly overlapping) occurrences of `needle` in `hay`.
std::size_t count_occurrences(const Word& hay, const Word& needle);
bool occurs_in(const Word& hay, const Word& needle, std::size_t from = 0,
               std::size_t to = static_cast<std::size_t>(-1));

}  // namespace subshift
