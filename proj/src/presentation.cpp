#include "subshift/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "subshift/error.hpp"

namespace subshift {

LabeledGraph::LabeledGraph(std::size_t alphabet_size, std::size_t vertex_count, std::vector<Edge> edges)
    : alphabet_size_(alphabet_size), vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.label, a.to) < std::tie(b.from, b.label, b.to);
  });
  edges_.erase(std::unique(edges_.begin(), edges_.end(),
                           [](const Edge& a, const Edge& b) {
                             return a.from == b.from && a.label == b.label && a.to == b.to;
                           }),
               edges_.end());
  offsets_.assign(vertex_count_ * alphabet_size_ + 1, 0);
  for (const auto& e : edges_) {
    if (e.from >= vertex_count_ || e.to >= vertex_count_ || e.label >= alphabet_size_)
      throw Error("invalid-graph", "edge out of range");
    ++offsets_[e.from * alphabet_size_ + e.label + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.reserve(edges_.size());
  for (const auto& e : edges_) targets_.push_back(e.to);  // edges_ already sorted by (from, label)
}

std::span<const std::uint32_t> LabeledGraph::successors(std::uint32_t v, Letter c) const {
  const auto k = v * alphabet_size_ + c;
  return {targets_.data() + offsets_[k], targets_.data() + offsets_[k + 1]};
}

LabeledGraph LabeledGraph::essential() const {
  std::vector<std::size_t> in(vertex_count_, 0), out(vertex_count_, 0);
  std::vector<std::vector<std::size_t>> incident(vertex_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    ++out[e.from];
    ++in[e.to];
    incident[e.from].push_back(i);
    if (e.to != e.from) incident[e.to].push_back(i);
  }
  std::vector<bool> alive(vertex_count_, true);
  std::vector<bool> edge_alive(edges_.size(), true);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < vertex_count_; ++v)
    if (in[v] == 0 || out[v] == 0) {
      alive[v] = false;
      queue.push_back(v);
    }
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto i : incident[v]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = false;
      const auto& e = edges_[i];
      --out[e.from];
      --in[e.to];
      for (auto u : {e.from, e.to}) {
        if (alive[u] && (in[u] == 0 || out[u] == 0)) {
          alive[u] = false;
          queue.push_back(u);
        }
      }
    }
  }
  std::vector<std::uint32_t> renumber(vertex_count_, 0);
  std::uint32_t n = 0;
  for (std::uint32_t v = 0; v < vertex_count_; ++v)
    if (alive[v]) renumber[v] = n++;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edge_alive[i] && alive[edges_[i].from] && alive[edges_[i].to])
      kept.push_back({renumber[edges_[i].from], edges_[i].label, renumber[edges_[i].to]});
  return LabeledGraph(alphabet_size_, n, std::move(kept));
}

LabeledGraph LabeledGraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const auto& e : edges_) rev.push_back({e.to, e.label, e.from});
  return LabeledGraph(alphabet_size_, vertex_count_, std::move(rev));
}

VertexSet LabeledGraph::all_vertices() const {
  VertexSet all(vertex_count_);
  for (std::uint32_t v = 0; v < vertex_count_; ++v) all[v] = v;
  return all;
}

VertexSet LabeledGraph::step(const VertexSet& from, Letter c) const {
  VertexSet out;
  for (auto v : from)
    for (auto t : successors(v, c)) out.push_back(t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct AhoCorasick {
  std::size_t alphabet = 0;
  std::vector<std::int32_t> go;  // state * alphabet + letter
  std::vector<bool> dead;        // some forbidden word ends here

  AhoCorasick(std::size_t a, const std::vector<Word>& words) : alphabet(a) {
    go.assign(a, -1);
    dead.assign(1, false);
    for (const auto& w : words) {
      if (w.empty()) throw Error("invalid-word", "forbidden words must be nonempty");
      std::int32_t s = 0;
      for (auto c : w) {
        if (c >= a) throw Error("invalid-letter", "forbidden word uses a letter outside the alphabet");
        auto& slot = go[static_cast<std::size_t>(s) * a + c];
        if (slot < 0) {
          slot = static_cast<std::int32_t>(dead.size());
          dead.push_back(false);
          go.resize(go.size() + a, -1);
        }
        s = go[static_cast<std::size_t>(s) * a + c];
      }
      dead[static_cast<std::size_t>(s)] = true;
    }
    std::vector<std::int32_t> fail(dead.size(), 0);
    std::deque<std::int32_t> queue;
    for (std::size_t c = 0; c < a; ++c) {
      auto& t = go[c];
      if (t < 0) {
        t = 0;
      } else {
        fail[static_cast<std::size_t>(t)] = 0;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      const auto s = queue.front();
      queue.pop_front();
      const auto su = static_cast<std::size_t>(s);
      if (dead[static_cast<std::size_t>(fail[su])]) dead[su] = true;
      for (std::size_t c = 0; c < a; ++c) {
        auto& t = go[su * a + c];
        const auto via_fail = go[static_cast<std::size_t>(fail[su]) * a + c];
        if (t < 0) {
          t = via_fail;
        } else {
          fail[static_cast<std::size_t>(t)] = via_fail;
          queue.push_back(t);
        }
      }
    }
  }

  std::size_t states() const { return dead.size(); }
};

}  // namespace

LabeledGraph avoiding(const LabeledGraph& g, const std::vector<Word>& forbidden) {
  if (forbidden.empty()) return g;
  const AhoCorasick ac(g.alphabet_size(), forbidden);
  const auto s_count = ac.states();
  std::vector<LabeledGraph::Edge> edges;
  for (const auto& e : g.edges()) {
    for (std::size_t s = 0; s < s_count; ++s) {
      if (ac.dead[s]) continue;
      const auto t = static_cast<std::size_t>(ac.go[s * ac.alphabet + e.label]);
      if (ac.dead[t]) continue;
      edges.push_back({static_cast<std::uint32_t>(e.from * s_count + s), e.label,
                       static_cast<std::uint32_t>(e.to * s_count + t)});
    }
  }
  return LabeledGraph(g.alphabet_size(), g.vertex_count() * s_count, std::move(edges));
}

LabeledGraph pair_product(const LabeledGraph& left, const LabeledGraph& right) {
  const auto rv = right.vertex_count();
  const auto ra = right.alphabet_size();
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(left.edges().size() * right.edges().size());
  for (const auto& a : left.edges())
    for (const auto& b : right.edges())
      edges.push_back({static_cast<std::uint32_t>(a.from * rv + b.from), static_cast<Letter>(a.label * ra + b.label),
                       static_cast<std::uint32_t>(a.to * rv + b.to)});
  return LabeledGraph(left.alphabet_size() * ra, left.vertex_count() * rv, std::move(edges));
}

SubsetAutomaton::SubsetAutomaton(const LabeledGraph& g, VertexSet start, std::size_t state_cap)
    : alphabet_size_(g.alphabet_size()) {
  std::map<VertexSet, std::int32_t> index;
  index.emplace(start, 0);
  subsets_.push_back(std::move(start));
  for (std::size_t s = 0; s < subsets_.size(); ++s) {
    next_.resize((s + 1) * alphabet_size_, kDead);
    for (std::size_t c = 0; c < alphabet_size_; ++c) {
      auto t = g.step(subsets_[s], static_cast<Letter>(c));
      if (t.empty()) continue;
      auto [it, inserted] = index.emplace(std::move(t), static_cast<std::int32_t>(subsets_.size()));
      if (inserted) {
        if (subsets_.size() >= state_cap) throw Error("automaton-too-large", "subset construction exceeded its cap");
        subsets_.push_back(it->first);
      }
      next_[s * alphabet_size_ + c] = it->second;
    }
  }
}

std::int32_t SubsetAutomaton::run(std::int32_t state, const Word& w) const {
  for (auto c : w) {
    if (state == kDead) return kDead;
    if (c >= alphabet_size_) return kDead;
    state = next(state, c);
  }
  return state;
}

std::uint64_t SubsetAutomaton::count_words(std::size_t n) const {
  std::vector<std::uint64_t> cur(subsets_.size(), 1), nxt(subsets_.size());
  for (std::size_t len = 0; len < n; ++len) {
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < alphabet_size_; ++c) {
        const auto t = next_[s * alphabet_size_ + c];
        if (t == kDead) continue;
        if (__builtin_add_overflow(total, cur[static_cast<std::size_t>(t)], &total))
          throw Error("count-overflow", "word count exceeds 64 bits");
      }
      nxt[s] = total;
    }
    std::swap(cur, nxt);
  }
  return cur[0];
}

std::vector<Word> SubsetAutomaton::words(std::size_t n) const {
  std::vector<Word> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  Word w(n);
  std::vector<std::int32_t> states(n + 1, 0);
  std::vector<std::size_t> letter(n, 0);
  std::size_t depth = 0;
  letter[0] = 0;
  while (true) {
    if (letter[depth] >= alphabet_size_) {
      if (depth == 0) break;
      --depth;
      ++letter[depth];
      continue;
    }
    const auto t = next(states[depth], static_cast<Letter>(letter[depth]));
    if (t == kDead) {
      ++letter[depth];
      continue;
    }
    w[depth] = static_cast<Letter>(letter[depth]);
    if (depth + 1 == n) {
      out.push_back(w);
      ++letter[depth];
      continue;
    }
    states[depth + 1] = t;
    ++depth;
    letter[depth] = 0;
  }
  return out;
}

std::optional<Word> find_word_outside(const LabeledGraph& sub, const SubsetAutomaton& super) {
  if (sub.empty()) return std::nullopt;
  const SubsetAutomaton a(sub, sub.all_vertices());
  std::map<std::pair<std::int32_t, std::int32_t>, std::pair<std::pair<std::int32_t, std::int32_t>, Letter>> parent;
  std::deque<std::pair<std::int32_t, std::int32_t>> queue;
  const std::pair<std::int32_t, std::int32_t> root{0, 0};
  parent.emplace(root, std::make_pair(root, Letter{0}));
  queue.push_back(root);
  auto trace = [&](std::pair<std::int32_t, std::int32_t> node, Letter last) {
    Word w{last};
    while (node != root) {
      const auto& [p, c] = parent.at(node);
      w.push_back(c);
      node = p;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  while (!queue.empty()) {
    const auto node = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < a.alphabet_size(); ++c) {
      const auto sa = a.next(node.first, static_cast<Letter>(c));
      if (sa == SubsetAutomaton::kDead) continue;
      const auto sb = c < super.alphabet_size() ? super.next(node.second, static_cast<Letter>(c)) : SubsetAutomaton::kDead;
      if (sb == SubsetAutomaton::kDead) return trace(node, static_cast<Letter>(c));
      const std::pair<std::int32_t, std::int32_t> child{sa, sb};
      if (parent.emplace(child, std::make_pair(node, static_cast<Letter>(c))).second) queue.push_back(child);
    }
  }
  return std::nullopt;
}

}  // namespace subshift
