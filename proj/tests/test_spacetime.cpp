#include <doctest.h>

#include <random>

#include "subshift/examples.hpp"
#include "subshift/spacetime.hpp"

using namespace subshift;

namespace {

bool has(const std::vector<PeriodVector>& vs, std::int64_t a, std::int64_t b) {
  return std::find(vs.begin(), vs.end(), PeriodVector{a, b}) != vs.end();
}

Configuration power(const BlockCode& c, Configuration x, std::size_t j) {
  for (std::size_t i = 0; i < j; ++i) x = apply_to_config(c, x);
  return x;
}

}  // namespace

TEST_CASE("space-time windows") {
  const auto full = make_example("full2");
  const auto id = full.cert("identity", "identity");
  const auto sig = full.cert("shift", "shift_inv");
  const auto x = full.probe("single_1");

  auto w = spacetime_window(full.spec, id, x, 7, 3, -3);
  for (const auto& row : w.grid) CHECK(row == x.window(-3, 7));

  w = spacetime_window(full.spec, sig, x, 5, 3, -2);
  // the single 1 moves one column left per row
  for (std::int64_t j = 0; j < 3; ++j)
    for (std::int64_t i = -2; i < 3; ++i) CHECK(w.at(i, j) == (i == -j ? 1 : 0));

  const auto h = make_example("hallway");
  w = spacetime_window(h.spec, h.cert("phi_a", "phi_a_inv"), h.probe("x3"), 9, 4, -4);
  for (std::int64_t j = 0; j < 3; ++j) CHECK(w.at(-3 + j, j) == hallway::kPerson);
  CHECK(w.at(0, 3) == hallway::kAP);

  // negative rows run the inverse
  w = spacetime_window(full.spec, sig, x, 5, 5, -2, -2);
  CHECK(w.at(2, -2) == 1);
  CHECK(w.at(0, 0) == 1);

  CHECK_THROWS_WITH_AS(spacetime_window(make_example("golden_mean").spec,
                                        make_example("golden_mean").cert("identity", "identity"),
                                        Configuration::constant(1), 3, 3),
                       doctest::Contains("not-in-subshift"), Error);
}

TEST_CASE("space-time entries match the definition") {
  std::mt19937_64 rng(19);
  const auto h = make_example("hallway");
  const auto cert = h.cert("phi_b", "phi_b_inv");
  const auto w = spacetime_window(h.spec, cert, h.probe("x5"), 15, 8, -7);
  for (int t = 0; t < 20; ++t) {
    const auto i = static_cast<std::int64_t>(rng() % 15) - 7;
    const auto j = rng() % 8;
    // coordinate 0 of φ^j σ^i x
    CHECK(w.at(i, static_cast<std::int64_t>(j)) == power(cert.code, h.probe("x5").shifted(i), j).at(0));
  }
}

TEST_CASE("rectangular complexity") {
  const auto full = make_example("full2");
  const auto p = full.probe("periodic_01");
  const auto idw = spacetime_window(full.spec, full.cert("identity", "identity"), p, 12, 12);
  CHECK(rect_complexity(idw, 2, 2) == 2);
  const auto sw = spacetime_window(full.spec, full.cert("shift", "shift_inv"), p, 12, 12);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= 6; ++k) CHECK(rect_complexity(sw, n, k) == 2);
  const auto cw = spacetime_window(full.spec, full.cert("shift", "shift_inv"), full.probe("zero"), 6, 6);
  CHECK(rect_complexity(cw, 3, 4) == 1);
  CHECK_THROWS_AS(rect_complexity(cw, 7, 1), Error);

}

TEST_CASE("rectangular complexity is monotone") {
  // Counts are compared over the same anchor positions: growing the
  // rectangle grows the window with it.
  const auto h = make_example("hallway");
  const auto cert = h.cert("phi_a", "phi_a_inv");
  const auto win = [&](std::size_t w, std::size_t ht) { return spacetime_window(h.spec, cert, h.probe("x4"), w, ht, -6); };
  for (std::size_t n = 1; n < 6; ++n)
    for (std::size_t k = 1; k < 6; ++k) {
      CHECK(rect_complexity(win(10, 8), n, k) <= rect_complexity(win(11, 8), n + 1, k));
      CHECK(rect_complexity(win(10, 8), n, k) <= rect_complexity(win(10, 9), n, k + 1));
    }
}

TEST_CASE("period vectors") {
  const auto full = make_example("full2");
  const auto sig = full.cert("shift", "shift_inv");
  for (const auto& name : {"single_1", "pair_10", "periodic_01"}) {
    const auto w = spacetime_window(full.spec, sig, full.probe(name), 10, 10, -5);
    CHECK(has(detect_period_vectors(w, 2), 1, -1));
  }
  const auto idw = spacetime_window(full.spec, full.cert("identity", "identity"), full.probe("periodic_01"), 8, 8);
  const auto v = detect_period_vectors(idw, 2);
  CHECK(has(v, 0, 1));
  CHECK(has(v, 2, 0));
  CHECK(std::is_sorted(v.begin(), v.end()));

  const auto h = make_example("hallway");
  const auto hw = spacetime_window(h.spec, h.cert("phi_a", "phi_a_inv"), h.probe("x2"), 8, 6, -4);
  CHECK(detect_period_vectors(hw, 3).empty());
}

TEST_CASE("period vectors cap rectangle counts") {
  // a period vector on a (2n)×(2k) window caps the n×k rectangle count at n·k
  for (const auto& name : example_names()) {
    const auto s = make_example(name);
    const auto cert = s.cert("shift", "shift_inv");
    for (const auto& [pn, p] : s.probes)
      for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t k = 1; k <= 4; ++k) {
          const auto w = spacetime_window(s.spec, cert, p, 2 * n, 2 * k, -static_cast<std::int64_t>(n));
          if (detect_period_vectors(w, std::min(2 * n, 2 * k) - 1).empty()) continue;
          INFO(name, " ", pn, " n=", n, " k=", k);
          CHECK(rect_complexity(w, n, k) <= n * k);
        }
  }
}

TEST_CASE("orbit preservation and powers") {
  const auto full = make_example("full2");
  const AutomorphismCert s2{shift_code(full.spec, 2), shift_code(full.spec, -2), 2};
  auto k = orbit_preserving(full.spec, s2, {full.probe("single_1"), full.probe("pair_10")}, 3);
  CHECK(k[0] == std::optional<std::int64_t>(2));
  CHECK(k[1] == std::optional<std::int64_t>(2));
  k = orbit_preserving(full.spec, full.cert("flip", "flip"), {full.probe("single_1")}, 5);
  CHECK_FALSE(k[0]);
  const auto one = make_example("at_most_one_1");
  k = orbit_preserving(one.spec, one.cert("identity", "identity"), {one.probe("single_1")}, 2);
  CHECK(k[0] == std::optional<std::int64_t>(0));

  const auto ps = power_is_shift(full.spec, full.cert("shift", "shift_inv"),
                                 {full.probe("single_1"), full.probe("pair_10")}, 3, 3);
  REQUIRE(ps);
  CHECK(ps->power == 1);
  CHECK(ps->shifts == std::vector<std::int64_t>{1, 1});

  for (const auto& cert : enumerate_automorphisms(one.spec, 1)) {
    const auto r = power_is_shift(one.spec, cert, {one.probe("single_1")}, 4, 6);
    REQUIRE(r);
    CHECK(r->power <= 4);
  }

  const auto h = make_example("hallway");
  std::vector<Configuration> probes;
  for (auto n : {"x1", "x2", "x3", "x4"}) probes.push_back(h.probe(n));
  CHECK_FALSE(power_is_shift(h.spec, h.cert("phi_a", "phi_a_inv"), probes, 6, 10));
}

TEST_CASE("text export") {
  const auto full = make_example("full2");
  const auto w = spacetime_window(full.spec, full.cert("shift", "shift_inv"), full.probe("single_1"), 5, 2, -2);
  CHECK(to_text(w, full.spec.alphabet()) == "00100\n01000\n");
  const auto h = make_example("hallway");
  const auto hw = spacetime_window(h.spec, h.cert("phi_a", "phi_a_inv"), h.probe("x1"), 3, 2, -1);
  CHECK(to_text(hw, h.spec.alphabet()) == "p  1  0\n0  ap 0\n");
}
