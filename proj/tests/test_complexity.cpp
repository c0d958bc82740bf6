#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "subshift/complexity.hpp"
#include "subshift/examples.hpp"

using namespace subshift;

namespace {

// Radius of unique extension computed from an explicit list of language words.
template <class Lang>
std::size_t radius_oracle(const Word& w, std::size_t cap, Lang&& lang) {
  std::size_t k = 0;
  while (k < cap) {
    const auto words = lang(w.size() + 2 * (k + 1));
    std::size_t hits = 0;
    for (const auto& u : words)
      if (std::equal(w.begin(), w.end(), u.begin() + static_cast<std::ptrdiff_t>(k + 1))) ++hits;
    if (hits != 1) break;
    ++k;
  }
  return k;
}

Subshift golden() { return make_example("golden_mean").spec; }

}  // namespace

TEST_CASE("complexity tables on the built-in systems") {
  CHECK(complexity(make_example("full2").spec, 10) == 1024);
  CHECK(complexity(make_example("salo_schraudner").spec, 5) == 36);
  CHECK(complexity(make_example("hallway").spec, 2) == 21);

  const auto t = complexity_table(golden(), 10, "golden_mean");
  CHECK(t.max_n() == 10);
  std::uint64_t a = 2, b = 3;
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(t.at(n) == a);
    const auto c = a + b;
    a = b;
    b = c;
  }
  for (const auto& name : example_names()) {
    const auto x = make_example(name).spec;
    const auto tab = complexity_table(x, 8);
    CHECK(tab.at(1) <= x.alphabet().size());
    for (std::size_t n = 1; n < 8; ++n) {
      CHECK(tab.at(n) <= tab.at(n + 1));
      CHECK(tab.at(n + 1) <= x.alphabet().size() * tab.at(n));
    }
  }
}

TEST_CASE("morse-hedlund classification") {
  const auto cycle = make_example("cycle2").spec;
  const auto v = morse_hedlund_classify(cycle, 3);
  CHECK(v.all_periodic);
  CHECK(v.witness == 2);
  CHECK_FALSE(morse_hedlund_classify(golden(), 10).all_periodic);
  const auto fixed = build_sparse(Alphabet({"0"}), 0, {});
  CHECK(morse_hedlund_classify(fixed, 1).witness == 1);
  CHECK_FALSE(morse_hedlund_classify(make_example("at_most_one_1").spec, 12).all_periodic);
}

TEST_CASE("extension radius") {
  const auto g = golden();
  auto r = extension_radius(g, {1}, 5);
  CHECK(r.radius == 1);
  CHECK_FALSE(r.at_least_cap);
  CHECK(r.extension == Word{0, 1, 0});
  CHECK(*r.extension_to(1) == Word{0, 1, 0});
  CHECK(*r.extension_to(0) == Word{1});
  CHECK_FALSE(r.extension_to(2));

  const auto one = make_example("at_most_one_1").spec;
  r = extension_radius(one, {1}, 100);
  CHECK(r.at_least_cap);
  CHECK(r.radius == 100);
  Word expect(201, 0);
  expect[100] = 1;
  CHECK(r.extension == expect);

  CHECK(extension_radius(make_example("full2").spec, {0}, 5).radius == 0);
  CHECK_THROWS_WITH_AS(extension_radius(g, {1, 1}, 5), doctest::Contains("not-in-language"), Error);
}

TEST_CASE("extension radius agrees with the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto r = oracle::random_sft(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r.alphabet; ++i) names.push_back(std::to_string(i));
    const auto x = build_sft(Alphabet(names), r.forbidden);
    if (x.empty()) continue;
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& w : x.language(n)) {
        const auto got = extension_radius(x, w, 3);
        const auto want = radius_oracle(w, 3, [&](std::size_t m) { return oracle::sft_language(r.alphabet, r.forbidden, m); });
        CHECK(got.radius == want);
        CHECK(got.at_least_cap == (want == 3));
      }
  }
  // sparse: the hallway, against the marker-placement oracle
  const auto h = make_example("hallway").spec;
  std::vector<std::vector<Letter>> fam;
  for (Letter m = 1; m <= 7; ++m) fam.push_back({m});
  for (Letter m = 1; m <= 3; ++m) fam.push_back({m, 4});
  for (const auto& w : h.language(2)) {
    const auto want = radius_oracle(w, 3, [&](std::size_t m) { return oracle::sparse_language(0, fam, m); });
    CHECK(extension_radius(h, w, 3).radius == want);
  }
}

TEST_CASE("extension radius is antitone under centered extension") {
  for (const auto& name : {"golden_mean", "hallway", "at_most_one_1"}) {
    const auto x = make_example(name).spec;
    for (const auto& w : x.language(2)) {
      const auto rw = extension_radius(x, w, 6);
      for (const auto& u : centered_extensions(x, w, 1)) {
        const auto ru = extension_radius(x, u, 6);
        CHECK(static_cast<long>(ru.radius) >= static_cast<long>(rw.radius) - 1);
      }
    }
  }
}

TEST_CASE("minimal non-extendable radius") {
  auto k = min_nonextendable_radius(golden(), 1, 10);
  CHECK(k.k == 2);
  CHECK_FALSE(k.exceeds_cap);
  CHECK(min_nonextendable_radius(make_example("at_most_one_1").spec, 1, 50).exceeds_cap);
  k = min_nonextendable_radius(make_example("full2").spec, 3, 10);
  CHECK(k.k == 1);
}

TEST_CASE("doubling property P(n + 2k_n) >= 2 P(n)") {
  for (const auto& name : {"golden_mean", "hallway"}) {
    const auto x = make_example(name).spec;
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto k = min_nonextendable_radius(x, n, 20);
      if (k.exceeds_cap) continue;
      CHECK(x.complexity(n + 2 * k.k) >= 2 * x.complexity(n));
    }
  }
}

TEST_CASE("extension window") {
  const auto one = make_example("at_most_one_1").spec;
  auto w = find_extension_window(one, 10, 2, 50, 2);
  CHECK(w.m == 1);
  CHECK(w.k_m.exceeds_cap);
  CHECK(w.threshold == doctest::Approx(std::log(2.0) / 8 * 10));
  CHECK(w.m_max == 23);

  const auto h = make_example("hallway").spec;
  w = find_extension_window(h, 10, 3, 50, 5);
  CHECK((w.k_m.exceeds_cap || static_cast<double>(w.k_m.k) >= std::log(2.0) / 12 * 10));
  CHECK(w.m <= w.m_max);

  CHECK_THROWS_WITH_AS(find_extension_window(make_example("full2").spec, 10, 2, 10, 2),
                       doctest::Contains("lemma-window-not-found"), Error);
  // the hallway violates P(j) <= j^3 at j = 4
  CHECK_THROWS_WITH_AS(find_extension_window(h, 10, 3, 50, 4), doctest::Contains("lemma-window-not-found"), Error);
}

TEST_CASE("slow growth window") {
  std::vector<std::uint64_t> lin, pow2, flat(11, 7);
  for (std::uint64_t x = 0; x <= 10; ++x) {
    lin.push_back(x + 1);
    pow2.push_back(std::uint64_t{1} << x);
  }
  CHECK(slow_growth_window(lin, 1, 0.5) == std::optional<std::size_t>(2));
  CHECK_FALSE(slow_growth_window(pow2, 1, 0.5));
  CHECK(slow_growth_window(flat, 3, 0.01) == std::optional<std::size_t>(0));
  std::vector<std::uint64_t> bad{1, 3, 2};
  CHECK_THROWS_WITH_AS(slow_growth_window(bad, 1, 0.5), doctest::Contains("not-nondecreasing"), Error);
  CHECK_THROWS_AS(slow_growth_window(lin, 11, 0.5), Error);

  // "none" only when every window violates the bound
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint64_t> f{1 + rng() % 5};
    for (int i = 0; i < 8; ++i) f.push_back(f.back() + rng() % 6);
    const auto k = 1 + rng() % 3;
    const double eps = 0.1 + static_cast<double>(rng() % 10) / 10;
    const auto got = slow_growth_window(f, k, eps);
    std::optional<std::size_t> want;
    for (std::size_t x = 0; x + k < f.size() && !want; ++x)
      if (static_cast<double>(f[x + k] - f[x]) / static_cast<double>(f[x]) < eps) want = x;
    CHECK(got == want);
  }
}
