#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

using VertexSet = std::vector<std::uint32_t>;  // sorted, unique

/// Finite edge-labeled graph. The subshift it presents is the set of label
/// sequences of bi-infinite paths; after `essential()` every finite path
/// label is a word of that subshift.
class LabeledGraph {
 public:
  struct Edge {
    std::uint32_t from;
    Letter label;
    std::uint32_t to;
  };

  LabeledGraph() = default;
  LabeledGraph(std::size_t alphabet_size, std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return vertex_count_ == 0; }

  std::span<const std::uint32_t> successors(std::uint32_t v, Letter c) const;

  /// Iteratively drops vertices without incoming or outgoing edges.
  LabeledGraph essential() const;
  LabeledGraph reversed() const;

  VertexSet all_vertices() const;
  VertexSet step(const VertexSet& from, Letter c) const;

 private:
  std::size_t alphabet_size_ = 0;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_;  // (vertex * alphabet + label) -> range in targets_
  std::vector<std::uint32_t> targets_;
};

/// The graph restricted to paths whose labels avoid every word in `forbidden`
/// (product with an Aho-Corasick matcher; not pruned).
LabeledGraph avoiding(const LabeledGraph& g, const std::vector<Word>& forbidden);

/// Synchronous product; the pair (a, b) is labeled a * |B| + b.
LabeledGraph pair_product(const LabeledGraph& left, const LabeledGraph& right);

/// Subset construction over a labeled graph from a given start set, built
/// eagerly. State 0 is the start; dead transitions are kDead.
class SubsetAutomaton {
 public:
  static constexpr std::int32_t kDead = -1;

  SubsetAutomaton(const LabeledGraph& g, VertexSet start, std::size_t state_cap = 2'000'000);

  std::size_t state_count() const { return subsets_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  std::int32_t next(std::int32_t state, Letter c) const {
    return next_[static_cast<std::size_t>(state) * alphabet_size_ + c];
  }
  std::int32_t run(std::int32_t state, const Word& w) const;
  const VertexSet& subset(std::int32_t state) const { return subsets_[static_cast<std::size_t>(state)]; }

  /// Number of words of length n readable from the start state; throws on
  /// 64-bit overflow.
  std::uint64_t count_words(std::size_t n) const;
  /// Words of length n readable from the start, in lexicographic order.
  std::vector<Word> words(std::size_t n) const;

 private:
  std::size_t alphabet_size_ = 0;
  std::vector<VertexSet> subsets_;
  std::vector<std::int32_t> next_;
};

/// Shortest word readable in `sub` (from any vertex) that `super` rejects,
/// or nullopt if every word of `sub` is accepted.
std::optional<Word> find_word_outside(const LabeledGraph& sub, const SubsetAutomaton& super);

}  // namespace subshift
