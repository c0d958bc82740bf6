#include "subshift/subshift.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <variant>

#include "subshift/error.hpp"

namespace subshift {

namespace {

struct SftBase {};
struct SparseBase {
  Letter background;
  std::vector<std::vector<Letter>> families;
};
struct ProductBase {
  std::shared_ptr<const Subshift> left;
  std::shared_ptr<const Subshift> right;
};

bool is_submultiset(const std::vector<Letter>& small, const std::vector<Letter>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

LabeledGraph full_shift_graph(std::size_t alphabet) {
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t c = 0; c < alphabet; ++c) edges.push_back({0, static_cast<Letter>(c), 0});
  return LabeledGraph(alphabet, 1, std::move(edges));
}

// One vertex per reachable sub-multiset of markers; the background loops on
// every vertex and a marker moves to the enlarged multiset.
LabeledGraph sparse_graph(std::size_t alphabet, Letter background, const std::vector<std::vector<Letter>>& families) {
  std::map<std::vector<Letter>, std::uint32_t> index;
  std::vector<std::vector<Letter>> vertices{{}};
  index.emplace(std::vector<Letter>{}, 0);
  std::vector<LabeledGraph::Edge> edges;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto current = vertices[v];
    edges.push_back({static_cast<std::uint32_t>(v), background, static_cast<std::uint32_t>(v)});
    for (std::size_t c = 0; c < alphabet; ++c) {
      if (c == background) continue;
      auto grown = current;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), static_cast<Letter>(c)), static_cast<Letter>(c));
      const bool fits = std::any_of(families.begin(), families.end(),
                                    [&](const auto& f) { return is_submultiset(grown, f); });
      if (!fits) continue;
      auto [it, inserted] = index.emplace(grown, static_cast<std::uint32_t>(vertices.size()));
      if (inserted) vertices.push_back(grown);
      edges.push_back({static_cast<std::uint32_t>(v), static_cast<Letter>(c), it->second});
    }
  }
  return LabeledGraph(alphabet, vertices.size(), std::move(edges));
}

void check_word(const Alphabet& a, const Word& w, const char* what) {
  if (w.empty()) throw Error("invalid-word", std::string(what) + " must be nonempty");
  for (auto c : w)
    if (c >= a.size()) throw Error("invalid-letter", std::string(what) + " uses a letter outside the alphabet");
}

}  // namespace

struct Subshift::State {
  Alphabet alphabet;
  std::variant<SftBase, SparseBase, ProductBase> base;
  std::vector<Word> forbidden;
  LabeledGraph graph;
  std::optional<SubsetAutomaton> automaton;

  mutable std::mutex cache_mutex;
  mutable std::map<std::size_t, std::vector<Word>> cache;

  State(Alphabet a, std::variant<SftBase, SparseBase, ProductBase> b, std::vector<Word> f)
      : alphabet(std::move(a)), base(std::move(b)), forbidden(std::move(f)) {
    LabeledGraph raw;
    if (std::holds_alternative<SftBase>(base)) {
      raw = full_shift_graph(alphabet.size());
    } else if (const auto* s = std::get_if<SparseBase>(&base)) {
      raw = sparse_graph(alphabet.size(), s->background, s->families);
    } else {
      const auto& p = std::get<ProductBase>(base);
      raw = pair_product(p.left->graph(), p.right->graph());
    }
    graph = avoiding(raw, forbidden).essential();
    if (!graph.empty()) automaton.emplace(graph, graph.all_vertices());
  }
};

Subshift::Kind Subshift::kind() const {
  if (std::holds_alternative<SftBase>(state_->base)) return Kind::sft;
  if (std::holds_alternative<SparseBase>(state_->base)) return Kind::sparse;
  return Kind::product;
}

const Alphabet& Subshift::alphabet() const { return state_->alphabet; }
const std::vector<Word>& Subshift::forbidden() const { return state_->forbidden; }

Letter Subshift::background() const {
  if (const auto* s = std::get_if<SparseBase>(&state_->base)) return s->background;
  throw Error("wrong-kind", "background is defined for sparse shifts only");
}

const std::vector<std::vector<Letter>>& Subshift::families() const {
  if (const auto* s = std::get_if<SparseBase>(&state_->base)) return s->families;
  throw Error("wrong-kind", "families are defined for sparse shifts only");
}

const Subshift& Subshift::left() const {
  if (const auto* p = std::get_if<ProductBase>(&state_->base)) return *p->left;
  throw Error("wrong-kind", "factors are defined for products only");
}

const Subshift& Subshift::right() const {
  if (const auto* p = std::get_if<ProductBase>(&state_->base)) return *p->right;
  throw Error("wrong-kind", "factors are defined for products only");
}

bool Subshift::empty() const { return state_->graph.empty(); }
const LabeledGraph& Subshift::graph() const { return state_->graph; }

const SubsetAutomaton& Subshift::automaton() const {
  if (!state_->automaton) throw Error("empty-subshift", "the subshift is empty");
  return *state_->automaton;
}

const std::vector<Word>& Subshift::language(std::size_t n) const {
  const auto& dfa = automaton();
  std::lock_guard lock(state_->cache_mutex);
  auto it = state_->cache.find(n);
  if (it == state_->cache.end()) {
    if (dfa.count_words(n) > 50'000'000) throw Error("enumeration-too-large", "L_" + std::to_string(n) + " too large");
    it = state_->cache.emplace(n, dfa.words(n)).first;
  }
  return it->second;
}

std::uint64_t Subshift::complexity(std::size_t n) const {
  if (n == 0) throw Error("invalid-length", "n must be at least 1");
  return automaton().count_words(n);
}

bool Subshift::contains(const Word& w) const {
  if (empty()) return false;
  for (auto c : w)
    if (c >= alphabet().size()) return false;
  return automaton().run(0, w) != SubsetAutomaton::kDead;
}

bool Subshift::contains(const Configuration& x) const {
  if (empty()) return false;
  const auto& g = graph();
  for (const auto* w : {&x.left_period(), &x.center(), &x.right_period()})
    for (auto c : *w)
      if (c >= alphabet().size()) return false;

  // Vertices from which R can be read forever (greatest fixpoint).
  VertexSet right = g.all_vertices();
  while (true) {
    VertexSet keep;
    for (auto v : right) {
      VertexSet s{v};
      for (auto c : x.right_period()) s = g.step(s, c);
      if (std::any_of(s.begin(), s.end(), [&](auto t) { return std::binary_search(right.begin(), right.end(), t); }))
        keep.push_back(v);
    }
    if (keep == right) break;
    right = std::move(keep);
  }
  // Vertices reachable at the end of ...LLL (greatest fixpoint).
  VertexSet left = g.all_vertices();
  while (true) {
    VertexSet s = left;
    for (auto c : x.left_period()) s = g.step(s, c);
    VertexSet keep;
    std::set_intersection(left.begin(), left.end(), s.begin(), s.end(), std::back_inserter(keep));
    if (keep == left) break;
    left = std::move(keep);
  }
  VertexSet s = left;
  for (auto c : x.center()) s = g.step(s, c);
  return std::any_of(s.begin(), s.end(), [&](auto t) { return std::binary_search(right.begin(), right.end(), t); });
}

Subshift Subshift::forbid(const Word& w) const { return forbid(std::vector<Word>{w}); }

Subshift Subshift::forbid(const std::vector<Word>& words) const {
  auto f = state_->forbidden;
  for (const auto& w : words) {
    check_word(alphabet(), w, "forbidden word");
    if (std::find(f.begin(), f.end(), w) == f.end()) f.push_back(w);
  }
  return Subshift(std::make_shared<const State>(state_->alphabet, state_->base, std::move(f)));
}

Subshift build_sft(Alphabet alphabet, std::vector<Word> forbidden) {
  for (const auto& w : forbidden) check_word(alphabet, w, "forbidden word");
  return Subshift(std::make_shared<const Subshift::State>(std::move(alphabet), SftBase{}, std::move(forbidden)));
}

Subshift build_sparse(Alphabet alphabet, Letter background, std::vector<std::vector<Letter>> families) {
  if (background >= alphabet.size()) throw Error("invalid-letter", "background outside the alphabet");
  for (auto& f : families) {
    for (auto c : f) {
      if (c >= alphabet.size()) throw Error("invalid-letter", "marker outside the alphabet");
      if (c == background) throw Error("marker-is-background", "a marker equals the background letter");
    }
    std::sort(f.begin(), f.end());
  }
  return Subshift(std::make_shared<const Subshift::State>(std::move(alphabet), SparseBase{background, std::move(families)},
                                                          std::vector<Word>{}));
}

Subshift product(const Subshift& left, const Subshift& right) {
  if (left.empty() || right.empty()) throw Error("empty-subshift", "product factors must be nonempty");
  std::vector<std::string> tokens;
  for (const auto& a : left.alphabet().letters())
    for (const auto& b : right.alphabet().letters()) tokens.push_back("(" + a + "," + b + ")");
  return Subshift(std::make_shared<const Subshift::State>(
      Alphabet(std::move(tokens)),
      ProductBase{std::make_shared<const Subshift>(left), std::make_shared<const Subshift>(right)}, std::vector<Word>{}));
}

}  // namespace subshift
