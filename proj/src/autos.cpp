#include "subshift/autos.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "subshift/complexity.hpp"
#include "subshift/error.hpp"

namespace subshift {

namespace {

std::size_t window_index(const std::vector<Word>& windows, const Word& w) {
  auto it = std::lower_bound(windows.begin(), windows.end(), w);
  if (it == windows.end() || *it != w) throw Error("rule-incomplete", "window outside the language");
  return static_cast<std::size_t>(it - windows.begin());
}

Word slice(const Word& w, std::size_t from, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(from + len));
}

// Whether `outer ∘ inner` is the identity on X; false if inner leaves the table.
bool is_identity_composition(const Subshift& x, const BlockCode& outer, const BlockCode& inner) {
  try {
    return equal_on_shift(x, compose(outer, inner), identity_code(x));
  } catch (const Error& e) {
    if (e.code() == "rule-incomplete") return false;
    throw;
  }
}

using CodeKey = std::pair<std::size_t, std::vector<Letter>>;

CodeKey key_of(const BlockCode& c) { return {c.range(), c.outputs()}; }

}  // namespace

std::optional<Word> endomorphism_witness(const Subshift& x, const BlockCode& phi) {
  if (x.empty()) return std::nullopt;
  const auto& g = x.graph();
  const auto r = phi.range();
  std::vector<std::vector<std::uint32_t>> out(g.vertex_count());
  for (std::uint32_t e = 0; e < g.edges().size(); ++e) out[g.edges()[e].from].push_back(e);

  // Vertices of the image graph are paths of 2R edges (plain vertices when R = 0).
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> paths;
  const auto end_of = [&](const std::vector<std::uint32_t>& p) {
    return r == 0 ? p[0] : g.edges()[p.back()].to;
  };
  if (r == 0) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) paths.push_back({v});
  } else {
    std::vector<std::uint32_t> current;
    std::function<void(std::uint32_t)> grow = [&](std::uint32_t v) {
      if (current.size() == 2 * r) {
        paths.push_back(current);
        return;
      }
      for (auto e : out[v]) {
        current.push_back(e);
        grow(g.edges()[e].to);
        current.pop_back();
      }
    };
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) grow(v);
  }
  for (std::uint32_t i = 0; i < paths.size(); ++i) ids.emplace(paths[i], i);

  std::vector<LabeledGraph::Edge> edges;
  Word window(2 * r + 1);
  for (std::uint32_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    for (auto e : out[end_of(p)]) {
      std::vector<std::uint32_t> target;
      if (r == 0) {
        window[0] = g.edges()[e].label;
        target = {g.edges()[e].to};
      } else {
        for (std::size_t k = 0; k < p.size(); ++k) window[k] = g.edges()[p[k]].label;
        window[2 * r] = g.edges()[e].label;
        target.assign(p.begin() + 1, p.end());
        target.push_back(e);
      }
      edges.push_back({i, phi.rule(window), ids.at(target)});
    }
  }
  const LabeledGraph image(x.alphabet().size(), paths.size(), std::move(edges));
  return find_word_outside(image, x.automaton());
}

std::optional<BlockCode> find_inverse(const Subshift& x, const BlockCode& phi, std::size_t r_max) {
  if (endomorphism_witness(x, phi)) return std::nullopt;
  const auto rp = phi.range();
  for (std::size_t r = 0; r <= r_max; ++r) {
    std::map<Word, Letter> wanted;
    bool consistent = true;
    for (const auto& u : x.language(2 * (rp + r) + 1)) {
      auto [it, inserted] = wanted.emplace(apply_to_word(phi, u), u[rp + r]);
      if (!inserted && it->second != u[rp + r]) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    const auto psi = BlockCode::from_rule(x, r, [&](const Word& w) {
      auto it = wanted.find(w);
      return it == wanted.end() ? Letter{0} : it->second;
    });
    if (endomorphism_witness(x, psi)) continue;
    if (is_identity_composition(x, psi, phi) && is_identity_composition(x, phi, psi)) return psi;
  }
  return std::nullopt;
}

CertifyResult certify_automorphism(const Subshift& x, const BlockCode& phi, std::size_t r_max) {
  CertifyResult out;
  if (auto w = endomorphism_witness(x, phi)) {
    out.status = CertifyResult::Status::not_endomorphism;
    out.witness = std::move(w);
    return out;
  }
  if (auto inv = find_inverse(x, phi, r_max)) {
    out.status = CertifyResult::Status::certified;
    const auto r = std::max(phi.range(), inv->range());
    out.cert = AutomorphismCert{phi, std::move(*inv), r};
  }
  return out;
}

std::vector<AutomorphismCert> enumerate_automorphisms(const Subshift& x, std::size_t range, std::size_t node_cap) {
  const auto& windows = x.language(2 * range + 1);
  const auto m = windows.size();
  const auto a = x.alphabet().size();

  // Words of length 2R+2 and 2R+3 tie two or three table entries together;
  // their images must be words of X. Each check fires once its last entry is set.
  struct Constraint {
    std::vector<std::size_t> entries;
  };
  std::vector<std::vector<Constraint>> due(m);
  for (std::size_t extra = 1; extra <= 2; ++extra)
    for (const auto& u : x.language(2 * range + 1 + extra)) {
      Constraint c;
      for (std::size_t s = 0; s <= extra; ++s) c.entries.push_back(window_index(windows, slice(u, s, 2 * range + 1)));
      const auto last = *std::max_element(c.entries.begin(), c.entries.end());
      due[last].push_back(std::move(c));
    }

  std::vector<Letter> table(m, 0);
  std::vector<AutomorphismCert> found;
  std::size_t nodes = 0;
  Word image;
  std::function<void(std::size_t)> search = [&](std::size_t t) {
    if (t == m) {
      BlockCode phi(x, range, table);
      if (auto inv = find_inverse(x, phi, range)) {
        const auto r = std::max(phi.range(), inv->range());
        found.push_back(AutomorphismCert{std::move(phi), std::move(*inv), r});
      }
      return;
    }
    for (std::size_t c = 0; c < a; ++c) {
      if (++nodes > node_cap) throw Error("search-cap-exceeded", "more than " + std::to_string(node_cap) + " search nodes");
      table[t] = static_cast<Letter>(c);
      bool ok = true;
      for (const auto& con : due[t]) {
        image.clear();
        for (auto e : con.entries) image.push_back(table[e]);
        if (!x.contains(image)) {
          ok = false;
          break;
        }
      }
      if (ok) search(t + 1);
    }
  };
  search(0);
  return found;
}

bool preserves_occurrences(const Subshift& x, const BlockCode& phi, const Word& v, const std::optional<Anchors>& anchors) {
  const auto r = phi.range();
  const auto d = anchors ? anchors->distance : 0;
  if (anchors && v.size() <= 2 * r) throw Error("invalid-argument", "relative form needs |v| > 2R");
  for (const auto& u : centered_extensions(x, v, r + d)) {
    if (anchors) {
      bool blocked = false;
      for (const auto& w : anchors->words) blocked = blocked || occurs_in(u, w, r, r + v.size() + 2 * d);
      if (blocked) continue;
    }
    const auto image = apply_to_word(phi, u);
    if (!std::equal(v.begin(), v.end(), image.begin() + static_cast<std::ptrdiff_t>(d))) return false;
  }
  return true;
}

std::vector<Word> coset_signature(const BlockCode& phi, const Chain& chain) {
  if (phi.range() > chain.range) throw Error("invalid-argument", "code range exceeds the chain's range");
  const auto padded = pad(phi, chain.range);
  std::vector<Word> sig;
  for (const auto& w : chain.words()) sig.push_back(apply_to_word(padded, w));
  return sig;
}

std::size_t coset_count(const Subshift& x, std::size_t n, const Chain& chain) {
  if (chain.words().empty()) throw Error("invalid-chain", "chain has no words");
  if (n > chain.range) throw Error("invalid-argument", "n must not exceed the chain's range");
  std::set<std::vector<Word>> signatures;
  for (const auto& cert : enumerate_automorphisms(x, n)) signatures.insert(coset_signature(cert.code, chain));
  return signatures.size();
}

std::uint64_t coset_bound(const Subshift& x, const Chain& chain) {
  const auto words = chain.words();
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  const auto base = x.complexity(longest);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

ClosureResult subgroup_closure(const Subshift& x, const std::vector<AutomorphismCert>& gens, std::size_t cap) {
  std::vector<BlockCode> steps;
  for (const auto& g : gens) {
    steps.push_back(minimize_range(g.code));
    steps.push_back(minimize_range(g.inverse));
  }
  std::map<CodeKey, BlockCode> seen;
  std::vector<BlockCode> queue{identity_code(x)};
  seen.emplace(key_of(queue[0]), queue[0]);
  ClosureResult result;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : steps) {
      auto c = minimize_range(compose(s, queue[head]));
      if (!seen.emplace(key_of(c), c).second) continue;
      if (seen.size() > cap) {
        result.cap_exceeded = true;
        break;
      }
      queue.push_back(std::move(c));
    }
    if (result.cap_exceeded) break;
  }
  for (auto& [k, c] : seen) result.elements.push_back(c);
  return result;
}

BlockCode semigroup_element(const BlockCode& a, const BlockCode& b, const std::string& word) {
  if (word.empty()) throw Error("invalid-argument", "empty generator word");
  const auto gen = [&](char c) -> const BlockCode& {
    if (c == 'a') return a;
    if (c == 'b') return b;
    throw Error("invalid-argument", std::string("unknown generator '") + c + "'");
  };
  BlockCode code = gen(word.back());
  for (auto i = word.size() - 1; i-- > 0;) code = compose(gen(word[i]), code);
  return code;
}

FreenessVerdict certify_free_semigroup(const Subshift& x, const AutomorphismCert& a, const AutomorphismCert& b,
                                       std::size_t depth) {
  FreenessVerdict v;
  v.depth = depth;
  std::map<std::string, BlockCode> codes;
  for (std::size_t len = 1; len <= depth; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w.push_back((bits >> (len - 1 - i)) & 1 ? 'b' : 'a');
      v.words.push_back(w);
      if (len == 1)
        codes.emplace(w, w == "a" ? a.code : b.code);
      else
        codes.emplace(w, compose(codes.at(w.substr(0, 1)), codes.at(w.substr(1))));
    }
  }
  std::size_t top = 0;
  for (const auto& [w, c] : codes) top = std::max(top, c.range());
  // Equal as maps on X iff equal on L_{2 top + 1}(X).
  std::vector<std::vector<Letter>> tables;
  for (const auto& w : v.words) {
    const auto& c = codes.at(w);
    const auto trim = static_cast<std::ptrdiff_t>(top - c.range());
    std::vector<Letter> t;
    for (const auto& u : x.language(2 * top + 1)) t.push_back(c.rule(Word(u.begin() + trim, u.end() - trim)));
    tables.push_back(std::move(t));
  }
  const auto n = v.words.size();
  v.equal.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      v.equal[i][j] = tables[i] == tables[j];
      if (i < j && v.equal[i][j] && !v.collision) v.collision = std::make_pair(v.words[i], v.words[j]);
    }
  v.free = !v.collision;
  return v;
}

BlockCode commutator(const BlockCode& a, const BlockCode& b, const BlockCode& a_inv, const BlockCode& b_inv) {
  return compose(a, compose(b, compose(a_inv, b_inv)));
}

}  // namespace subshift
