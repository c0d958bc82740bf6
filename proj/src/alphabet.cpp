#include "subshift/alphabet.hpp"

#include <algorithm>
#include <set>

#include "subshift/error.hpp"

namespace subshift {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error("invalid-alphabet", "alphabet must contain at least one letter");
  if (letters_.size() > 0xFFFF) throw Error("invalid-alphabet", "alphabet too large");
  std::set<std::string> seen;
  for (const auto& t : letters_) {
    if (t.empty()) throw Error("invalid-alphabet", "empty token");
    if (t.find(' ') != std::string::npos) throw Error("invalid-alphabet", "token contains a space: '" + t + "'");
    if (!seen.insert(t).second) throw Error("invalid-alphabet", "duplicate letter '" + t + "'");
    if (t.size() != 1) compact_ = false;
  }
}

const std::string& Alphabet::token(Letter a) const {
  if (a >= letters_.size()) throw Error("invalid-letter", "letter index " + std::to_string(a) + " out of range");
  return letters_[a];
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == token) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::index(std::string_view token) const {
  if (auto a = find(token)) return *a;
  throw Error("invalid-letter", "unknown letter '" + std::string(token) + "'");
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_ && i > 0) out += ' ';
    out += token(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  if (text.find(' ') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ') {
        ++pos;
        continue;
      }
      auto end = text.find(' ', pos);
      if (end == std::string_view::npos) end = text.size();
      w.push_back(index(text.substr(pos, end - pos)));
      pos = end;
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const auto& t = letters_[i];
      if (t.size() > best_len && text.compare(pos, t.size(), t) == 0) {
        best_len = t.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0)
      throw Error("invalid-letter", "cannot tokenize '" + std::string(text) + "' at offset " + std::to_string(pos));
    w.push_back(best);
    pos += best_len;
  }
  return w;
}

bool occurs_in(const Word& hay, const Word& needle, std::size_t from, std::size_t to) {
  to = std::min(to, hay.size());
  if (needle.empty()) return true;
  if (to < from || to - from < needle.size()) return false;
  return std::search(hay.begin() + static_cast<std::ptrdiff_t>(from), hay.begin() + static_cast<std::ptrdiff_t>(to),
                     needle.begin(), needle.end()) != hay.begin() + static_cast<std::ptrdiff_t>(to);
}

std::size_t count_occurrences(const Word& hay, const Word& needle) {
  if (needle.empty() || needle.size() > hay.size()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + static_cast<std::ptrdiff_t>(i))) ++n;
  return n;
}

}  // namespace subshift
