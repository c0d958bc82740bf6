#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "automorphism_oracle.hpp"
#include "subshift/autos.hpp"
#include "subshift/complexity.hpp"
#include "subshift/examples.hpp"

using namespace subshift;

namespace {

std::vector<std::vector<Letter>> tables(const std::vector<AutomorphismCert>& certs) {
  std::vector<std::vector<Letter>> out;
  for (const auto& c : certs) out.push_back(c.code.outputs());
  return out;
}

}  // namespace

TEST_CASE("word action and rule completeness") {
  const auto full = make_example("full2");
  const auto sigma = full.code("shift");
  CHECK(sigma.range() == 1);
  CHECK(apply_to_word(sigma, {0, 1, 0}) == Word{0});
  CHECK(apply_to_word(sigma, {0, 0, 1, 1}) == Word{1, 1});
  CHECK(apply_to_word(full.code("identity"), {0, 1, 1, 0}) == Word{0, 1, 1, 0});
  CHECK_THROWS_AS(apply_to_word(sigma, {0, 1}), Error);

  const auto g = make_example("golden_mean").spec;
  const auto id = identity_code(g, 1);
  CHECK_THROWS_WITH_AS(apply_to_word(id, {0, 1, 1}), doctest::Contains("rule-incomplete"), Error);
  CHECK_THROWS_WITH_AS(BlockCode(g, 1, {0, 0}), doctest::Contains("rule-incomplete"), Error);
}

TEST_CASE("point action") {
  const auto full = make_example("full2");
  const auto x = Configuration::marked(0, {1}, 0);
  CHECK(apply_to_config(full.code("identity"), x) == x);
  CHECK(apply_to_config(full.code("shift"), x) == Configuration::marked(0, {1}, -1));
  CHECK(apply_to_config(full.code("shift_inv"), x) == Configuration::marked(0, {1}, 1));

  const auto h = make_example("hallway");
  using namespace hallway;
  const auto y = apply_to_config(h.code("phi_a"), h.probe("x1"));
  CHECK(y.at(-1) == kEmpty);
  CHECK(y.at(0) == kAP);
  CHECK(y == Configuration::marked(kEmpty, {kAP}, 0));
  CHECK(apply_to_config(h.code("phi_b"), h.probe("x1")).at(0) == kBP);
  // the person walks one cell per step
  CHECK(apply_to_config(h.code("phi_a"), h.probe("x3")) == h.probe("x2"));
  CHECK(h.spec.alphabet().format(apply_to_word(h.code("phi_a"), h.spec.alphabet().parse("0 0 p 1 0"))) == "0 0 ap");
  CHECK(h.spec.alphabet().format(apply_to_word(h.code("phi_a"), h.spec.alphabet().parse("0 p 1 0"))) == "0 ap");
}

TEST_CASE("word and point actions agree") {
  std::mt19937_64 rng(11);
  for (const auto& name : example_names()) {
    const auto s = make_example(name);
    for (const auto& [cname, code] : s.codes)
      for (const auto& [pname, p] : s.probes) {
        const auto y = apply_to_config(code, p);
        CHECK(s.spec.contains(y));
        for (int t = 0; t < 10; ++t) {
          const auto i = static_cast<std::int64_t>(rng() % 21) - 10;
          const auto n = 1 + rng() % 8;
          CHECK(y.window(i, n) == apply_to_word(code, p.window(i - static_cast<std::int64_t>(code.range()), n + 2 * code.range())));
        }
      }
  }
}

TEST_CASE("composition, padding and equality") {
  const auto full = make_example("full2");
  const auto& x = full.spec;
  const auto sigma = full.code("shift");
  const auto flip = full.code("flip");
  const auto s2 = compose(sigma, sigma);
  CHECK(s2.range() == 2);
  CHECK(equal_on_shift(x, s2, shift_code(x, 2)));
  CHECK(equal_on_shift(x, compose(sigma, flip), compose(flip, sigma)));
  CHECK(equal_on_shift(x, identity_code(x), identity_code(x, 2)));
  CHECK_FALSE(equal_on_shift(x, sigma, identity_code(x)));
  CHECK(equal_on_shift(x, compose(identity_code(x), sigma), sigma));
  CHECK(pad(sigma, 3).range() == 3);
  CHECK(equal_on_shift(x, pad(sigma, 3), sigma));
  CHECK(minimize_range(pad(flip, 2)).range() == 0);
  CHECK(minimize_range(pad(flip, 2)).outputs() == flip.outputs());
  CHECK(minimize_range(s2).range() == 2);

  const auto h = make_example("hallway");
  CHECK_FALSE(equal_on_shift(h.spec, h.code("phi_a"), h.code("phi_b")));
  const auto ab = compose(h.code("phi_a"), h.code("phi_b"));
  CHECK(ab.range() == 2);
  CHECK(equal_on_shift(h.spec, ab, semigroup_element(h.code("phi_a"), h.code("phi_b"), "ab")));
  for (const auto& [n, p] : h.probes)
    CHECK(apply_to_config(ab, p) == apply_to_config(h.code("phi_a"), apply_to_config(h.code("phi_b"), p)));
}

TEST_CASE("inverses and certification") {
  const auto full = make_example("full2");
  const auto& x = full.spec;
  auto inv = find_inverse(x, full.code("flip"), 0);
  REQUIRE(inv);
  CHECK(equal_on_shift(x, *inv, full.code("flip")));
  inv = find_inverse(x, full.code("shift"), 1);
  REQUIRE(inv);
  CHECK(equal_on_shift(x, *inv, full.code("shift_inv")));
  const auto xor_code = BlockCode::from_rule(x, 1, [](const Word& w) { return static_cast<Letter>(w[1] ^ w[2]); });
  CHECK_FALSE(find_inverse(x, xor_code, 2));
  CHECK(certify_automorphism(x, xor_code, 2).status == CertifyResult::Status::unknown);

  const auto h = make_example("hallway");
  for (char pic : {'a', 'b'}) {
    const auto name = std::string("phi_") + pic;
    const auto r = certify_automorphism(h.spec, h.code(name), 1);
    REQUIRE(r.status == CertifyResult::Status::certified);
    CHECK(r.cert->inverse.range() == 1);
    CHECK(r.cert->r_certified == 1);
    CHECK(equal_on_shift(h.spec, r.cert->inverse, h.code(name + "_inv")));
  }

  const auto g = make_example("golden_mean").spec;
  const auto r = certify_automorphism(g, letter_map(g, {1, 0}), 2);
  CHECK(r.status == CertifyResult::Status::not_endomorphism);
  REQUIRE(r.witness);
  CHECK_FALSE(g.contains(*r.witness));
  for (const auto& name : example_names()) {
    const auto s = make_example(name);
    CHECK(certify_automorphism(s.spec, identity_code(s.spec), 0).status == CertifyResult::Status::certified);
  }
}

TEST_CASE("exact endomorphism check on a sparse shift") {
  // On at-most-one-1 the map "1 iff the left neighbour is 1 or I am 1" is
  // locally fine on 3-blocks yet creates "11".
  const auto x = make_example("at_most_one_1").spec;
  const auto spread = BlockCode::from_rule(x, 1, [](const Word& w) { return static_cast<Letter>(w[0] | w[1]); });
  const auto w = endomorphism_witness(x, spread);
  REQUIRE(w);
  CHECK(*w == Word{1, 1});
  CHECK_FALSE(endomorphism_witness(x, shift_code(x, 1)));
}

TEST_CASE("automorphism enumeration against brute force") {
  const auto full = make_example("full2").spec;
  const auto a0 = enumerate_automorphisms(full, 0);
  CHECK(tables(a0) == oracle::bijective_tables(full, 0, 6));
  REQUIRE(a0.size() == 2);
  CHECK(equal_on_shift(full, a0[0].code, identity_code(full)));
  CHECK(equal_on_shift(full, a0[1].code, letter_map(full, {1, 0})));

  const auto g = make_example("golden_mean").spec;
  const auto g0 = enumerate_automorphisms(g, 0);
  CHECK(tables(g0) == oracle::bijective_tables(g, 0, 6));
  REQUIRE(g0.size() == 1);

  const auto a1 = enumerate_automorphisms(full, 1);
  const auto oracle = oracle::bijective_tables(full, 1, 7);
  for (const auto& t : tables(a1)) CHECK(std::find(oracle.begin(), oracle.end(), t) != oracle.end());
  const auto flip = letter_map(full, {1, 0});
  for (const auto& want : {identity_code(full), flip, shift_code(full, 1), shift_code(full, -1),
                           compose(flip, shift_code(full, 1)), compose(flip, shift_code(full, -1))}) {
    bool found = false;
    for (const auto& c : a1) found = found || equal_on_shift(full, c.code, want);
    CHECK(found);
  }
  CHECK_THROWS_WITH_AS(enumerate_automorphisms(full, 1, 10), doctest::Contains("search-cap-exceeded"), Error);
}

TEST_CASE("enumeration is closed under composition") {
  for (const auto& [name, r] : {std::pair{"at_most_one_1", 1}, std::pair{"golden_mean", 0}, std::pair{"full2", 0}}) {
    const auto x = make_example(name).spec;
    const auto small = enumerate_automorphisms(x, r);
    const auto big = enumerate_automorphisms(x, 2 * r);
    for (const auto& p : small)
      for (const auto& q : small) {
        const auto pq = compose(p.code, q.code);
        bool found = false;
        for (const auto& c : big) found = found || equal_on_shift(x, pq, c.code);
        CHECK(found);
      }
  }
}

TEST_CASE("occurrence preservation") {
  const auto full = make_example("full2");
  CHECK(preserves_occurrences(full.spec, full.code("identity"), {0, 1, 1}));
  CHECK_FALSE(preserves_occurrences(full.spec, full.code("flip"), {0}));
  const auto one = make_example("at_most_one_1");
  CHECK_FALSE(preserves_occurrences(one.spec, one.code("shift"), {1}));
  CHECK(preserves_occurrences(one.spec, one.code("identity"), {1}));
  // σ keeps "00000" only when no 1 is nearby; relative to the anchor "1" at distance 1 it is preserved
  CHECK_FALSE(preserves_occurrences(one.spec, one.code("shift"), {0, 0, 0}));
  CHECK(preserves_occurrences(one.spec, one.code("shift"), {0, 0, 0}, Anchors{{{1}}, 1}));
  CHECK_THROWS_AS(preserves_occurrences(one.spec, one.code("shift"), {0, 0}, Anchors{{{1}}, 1}), Error);
}

TEST_CASE("replaying the occurrence-preservation lemma") {
  // If w extends uniquely 2R times to w̃ and φ(w̃) = ψ(w̃), then φ⁻¹∘ψ preserves occurrences of w̃.
  const auto check_system = [](const Subshift& x, const std::vector<AutomorphismCert>& autos, std::size_t r) {
    std::size_t replays = 0;
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& w : x.language(n)) {
        const auto ext = extension_radius(x, w, 2 * r);
        if (ext.radius < 2 * r) continue;
        const auto wt = *ext.extension_to(2 * r);
        for (const auto& p : autos)
          for (const auto& q : autos) {
            if (apply_to_word(pad(p.code, r), wt) != apply_to_word(pad(q.code, r), wt)) continue;
            CHECK(preserves_occurrences(x, compose(p.inverse, q.code), wt));
            ++replays;
          }
      }
    return replays;
  };
  const auto one = make_example("at_most_one_1").spec;
  CHECK(check_system(one, enumerate_automorphisms(one, 1), 1) > 0);
  const auto h = make_example("hallway");
  std::vector<AutomorphismCert> gens{h.cert("identity", "identity"), h.cert("phi_a", "phi_a_inv"),
                                     h.cert("phi_b", "phi_b_inv"), h.cert("phi_a_inv", "phi_a"),
                                     h.cert("phi_b_inv", "phi_b"), h.cert("shift", "shift_inv")};
  CHECK(check_system(h.spec, gens, 1) > 0);
}

TEST_CASE("coset signatures") {
  const auto one = make_example("at_most_one_1").spec;
  const auto chain = build_chain(one, 1, 1, 10);
  CHECK(coset_count(one, 0, chain) == 1);
  CHECK(coset_count(one, 1, chain) == 3);
  CHECK(coset_count(one, 1, chain) <= coset_bound(one, chain));
  CHECK(coset_bound(one, chain) == 36);

  const auto full = make_example("full2").spec;
  Chain degenerate;
  degenerate.terminal = ChainLevel{full, {0}, {0}};
  CHECK(coset_count(full, 0, degenerate) == 2);
  CHECK_THROWS_WITH_AS(coset_count(full, 0, Chain{}), doctest::Contains("invalid-chain"), Error);
}

TEST_CASE("subgroup closure") {
  const auto full = make_example("full2");
  auto r = subgroup_closure(full.spec, {full.cert("flip", "flip")}, 10);
  CHECK_FALSE(r.cap_exceeded);
  CHECK(r.elements.size() == 2);
  r = subgroup_closure(full.spec, {full.cert("shift", "shift_inv")}, 10);
  CHECK(r.cap_exceeded);
  const auto h = make_example("hallway");
  r = subgroup_closure(h.spec, {}, 10);
  CHECK_FALSE(r.cap_exceeded);
  REQUIRE(r.elements.size() == 1);
  CHECK(equal_on_shift(h.spec, r.elements[0], identity_code(h.spec)));
  const auto cyc = make_example("cycle2");
  r = subgroup_closure(cyc.spec, {cyc.cert("shift", "shift_inv")}, 10);
  CHECK_FALSE(r.cap_exceeded);
  CHECK(r.elements.size() == 2);
}

TEST_CASE("free semigroup certification") {
  const auto h = make_example("hallway");
  const auto a = h.cert("phi_a", "phi_a_inv");
  const auto b = h.cert("phi_b", "phi_b_inv");
  auto v = certify_free_semigroup(h.spec, a, b, 2);
  CHECK(v.free);
  CHECK(v.words == std::vector<std::string>{"a", "b", "aa", "ab", "ba", "bb"});
  for (std::size_t i = 0; i < v.words.size(); ++i)
    for (std::size_t j = 0; j < v.words.size(); ++j) CHECK(v.equal[i][j] == (i == j));

  const auto full = make_example("full2");
  const auto s = full.cert("shift", "shift_inv");
  const auto s2 = AutomorphismCert{shift_code(full.spec, 2), shift_code(full.spec, -2), 2};
  v = certify_free_semigroup(full.spec, s, s2, 3);
  CHECK_FALSE(v.free);
  CHECK(v.collision == std::make_pair(std::string("b"), std::string("aa")));
  const auto id = full.cert("identity", "identity");
  v = certify_free_semigroup(full.spec, id, id, 1);
  CHECK(v.collision == std::make_pair(std::string("a"), std::string("b")));
}

TEST_CASE("hallway probe decoding") {
  using namespace hallway;
  const auto h = make_example("hallway");
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      std::string w;
      for (std::size_t i = 0; i < k; ++i) w.push_back((bits >> (k - 1 - i)) & 1 ? 'b' : 'a');
      const auto g = semigroup_element(h.code("phi_a"), h.code("phi_b"), w);
      CHECK(g.range() == k);
      // the person reaches the origin exactly on x_k
      for (std::size_t i = 1; i <= 8; ++i) {
        const auto c = apply_to_config(g, probe(i)).at(0);
        CHECK((c == kNailP || c == kAP || c == kBP) == (i == k));
      }
      std::string decoded;
      for (std::size_t i = 1; i <= k; ++i) {
        auto c = apply_to_config(g, probe(k - i + 1)).at(0);
        if (i == 1) c = c == kAP ? kA : c == kBP ? kB : c;
        decoded.push_back(c == kA ? 'a' : c == kB ? 'b' : '?');
      }
      CHECK(decoded == w);
    }
}

TEST_CASE("commutators") {
  const auto full = make_example("full2");
  const auto& sig = full.code("shift");
  const auto& flip = full.code("flip");
  CHECK(equal_on_shift(full.spec, commutator(sig, flip, full.code("shift_inv"), flip), identity_code(full.spec)));
  CHECK(equal_on_shift(full.spec, commutator(identity_code(full.spec), sig, identity_code(full.spec), full.code("shift_inv")),
                       identity_code(full.spec)));
  const auto h = make_example("hallway");
  const auto c = commutator(h.code("phi_a"), h.code("phi_b"), h.code("phi_a_inv"), h.code("phi_b_inv"));
  CHECK(c.range() == 4);
  CHECK_FALSE(equal_on_shift(h.spec, c, identity_code(h.spec)));
  const auto y = apply_to_config(c, h.probe("on_nail_1"));
  CHECK(y == h.probe("on_nail_b"));
}
