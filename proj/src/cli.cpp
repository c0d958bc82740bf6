#include "subshift/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <random>

#include "subshift/io.hpp"

namespace subshift {

namespace {

constexpr const char* kBuiltin = "builtin:";

bool is_builtin(const std::string& s) { return s.rfind(kBuiltin, 0) == 0; }

struct Loaded {
  Subshift spec;
  std::optional<NamedSystem> system;  // set for builtin specs
};

Json parse_text(const std::string& path, const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("invalid-json", path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

template <class F>
auto in_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + std::string(e.what()).substr(e.code().size() + 2));
  }
}

struct Session {
  Json inputs = Json::object();

  void record(const std::string& name, const std::string& source, const std::string& bytes) {
    inputs[name] = Json{{"source", source}, {"fnv1a", fnv1a_hex(bytes)}};
  }

  Loaded spec(const std::string& arg) {
    if (is_builtin(arg)) {
      auto sys = make_example(arg.substr(std::string(kBuiltin).size()));
      record("spec", arg, spec_to_json(sys.spec).dump());
      auto x = sys.spec;
      return Loaded{std::move(x), std::move(sys)};
    }
    const auto text = read_text_file(arg);
    record("spec", arg, text);
    return Loaded{in_file(arg, [&] { return spec_from_json(parse_text(arg, text)); }), std::nullopt};
  }

  BlockCode code(const std::string& name, const std::string& arg, const Loaded& x) {
    if (is_builtin(arg)) {
      const auto& [sys, item] = builtin_item(arg, x);
      const auto& c = sys.code(item);
      record(name, arg, code_to_json(c).dump());
      return c;
    }
    const auto text = read_text_file(arg);
    record(name, arg, text);
    return in_file(arg, [&] { return code_from_json(parse_text(arg, text), x.spec); });
  }

  Configuration probe(const std::string& arg, const Loaded& x) {
    if (is_builtin(arg)) {
      const auto& [sys, item] = builtin_item(arg, x);
      const auto& p = sys.probe(item);
      record("probe", arg, configuration_to_json(p, sys.spec.alphabet()).dump());
      return p;
    }
    const auto text = read_text_file(arg);
    record("probe", arg, text);
    return in_file(arg, [&] { return configuration_from_json(parse_text(arg, text), x.spec.alphabet()); });
  }

 private:
  std::optional<NamedSystem> other_;

  // "builtin:NAME" looks NAME up in the spec's own system; "builtin:SYSTEM/NAME" names both.
  std::pair<const NamedSystem&, std::string> builtin_item(const std::string& arg, const Loaded& x) {
    const auto rest = arg.substr(std::string(kBuiltin).size());
    const auto slash = rest.find('/');
    if (slash != std::string::npos) {
      other_ = make_example(rest.substr(0, slash));
      if (!(other_->spec.alphabet() == x.spec.alphabet()))
        throw Error("invalid-argument", arg + " belongs to a system with a different alphabet");
      return {*other_, rest.substr(slash + 1)};
    }
    if (!x.system) throw Error("invalid-argument", arg + " needs a builtin spec or the form builtin:SYSTEM/NAME");
    return {*x.system, rest};
  }
};

Json violation(const std::string& lemma, Json witness) {
  Json v;
  v["lemma"] = lemma;
  v["witness"] = std::move(witness);
  return v;
}

Json word_list(const std::vector<Word>& ws, const Alphabet& a) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(a.format(w));
  return out;
}

// ---------------------------------------------------------------------------
// verify-lemmas: each suite turns (rng, trial) into self-contained cases, and
// check() decides a case on its own, so a violation's case replays standalone.

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Nonempty SFT with at most 3 letters and at most 3 forbidden words of length <= 3.
Subshift random_sft(Rng& rng, std::size_t max_letters = 3) {
  for (;;) {
    const auto k = pick(rng, 2, max_letters);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
    std::vector<Word> forbidden(pick(rng, 1, 3));
    for (auto& f : forbidden) {
      f.resize(pick(rng, 1, 3));
      for (auto& c : f) c = static_cast<Letter>(pick(rng, 0, k - 1));
    }
    auto x = build_sft(Alphabet(names), forbidden);
    if (!x.empty()) return x;
  }
}

struct Outcome {
  enum class Kind { pass, violation, inconclusive } kind = Kind::pass;
  std::string lemma;
  Json detail;
  static Outcome ok() { return {}; }
  static Outcome fail(std::string lemma, Json detail) { return {Kind::violation, std::move(lemma), std::move(detail)}; }
  static Outcome unknown(Json detail) { return {Kind::inconclusive, {}, std::move(detail)}; }
};

struct Suite {
  std::vector<Json> (*generate)(Rng&, std::size_t trial);
  Outcome (*check)(const Json& c);
};

std::size_t at(const Json& c, const char* key) { return c.at(key).get<std::size_t>(); }

// --- removal: P_{X(w)}(n) <= P_X(n) - (n - |w| + 1).
std::vector<Json> removal_cases(Rng& rng, std::size_t) {
  const auto x = random_sft(rng);
  std::vector<Json> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& w : x.language(n))
      if (cylinder_has_aperiodic(x, w))
        out.push_back(Json{{"spec", spec_to_json(x)}, {"w", x.alphabet().format(w)}, {"n_max", 10}});
  return out;
}

Outcome removal_check(const Json& c) {
  const auto x = spec_from_json(c.at("spec"));
  const auto w = x.alphabet().parse(c.at("w").get<std::string>());
  for (const auto& row : verify_removal_bound(x, w, at(c, "n_max")).rows)
    if (!row.holds()) return Outcome::fail("removal-bound", Json{{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}});
  return Outcome::ok();
}

// --- chain: k < P_X(2L'-1)/L' and the inductive sharpening.
Json chain_case(const Subshift& x, std::size_t r, std::size_t l) {
  return Json{{"spec", spec_to_json(x)}, {"range", r}, {"max_len", l}, {"cap", 2 * r}};
}

std::vector<Json> chain_cases(Rng& rng, std::size_t trial) {
  if (trial == 0) return {chain_case(make_example("at_most_one_1").spec, 1, 1)};
  if (trial == 1) return {chain_case(make_example("hallway").spec, 1, 3)};
  return {chain_case(random_sft(rng), 1, pick(rng, 1, 3))};
}

std::optional<Chain> try_chain(const Json& c, Json& why) {
  try {
    return build_chain(spec_from_json(c.at("spec")), at(c, "range"), at(c, "max_len"), at(c, "cap"));
  } catch (const Error& e) {
    if (e.code() != "no-unique-extender" && e.code() != "empty-subshift") throw;
    why = e.what();
    return std::nullopt;
  }
}

// The bound assumes every cylinder [w̃_i] in X_i holds an aperiodic point.
std::optional<std::size_t> periodic_level(const Chain& chain) {
  for (std::size_t i = 0; i < chain.levels.size(); ++i)
    if (!cylinder_has_aperiodic(chain.levels[i].subshift, chain.levels[i].w_tilde)) return i;
  return std::nullopt;
}

Outcome chain_check(const Json& c) {
  Json why;
  const auto chain = try_chain(c, why);
  if (!chain) return Outcome::unknown(why);
  if (const auto i = periodic_level(*chain))
    return Outcome::unknown("periodic-cylinder: level " + std::to_string(*i) + " has only periodic points");
  if (!chain->bound_on_w_tilde.holds) return Outcome::fail("chain-bound", chain_to_json(*chain));
  if (!chain->sharpening_holds) return Outcome::fail("chain-sharpening", chain_to_json(*chain));
  return Outcome::ok();
}

// --- extend: the extension window for P(n) <= n^d, and P(n + 2k_n) >= 2 P(n).
std::vector<Json> extend_cases(Rng& rng, std::size_t trial) {
  struct Poly { const char* name; unsigned d; std::size_t from; };
  static constexpr Poly polys[] = {{"at_most_one_1", 2, 2}, {"hallway", 3, 5}, {"salo_schraudner", 3, 3}};
  if (trial % 2 == 0) {
    const auto& p = polys[pick(rng, 0, 2)];
    const auto n = pick(rng, std::max<std::size_t>(p.from, 4), 10);
    return {Json{{"spec", spec_to_json(make_example(p.name).spec)}, {"n", n}, {"d", p.d}, {"from", p.from}, {"cap", 2 * n}}};
  }
  const auto n = pick(rng, 1, 6);
  return {Json{{"spec", spec_to_json(random_sft(rng))}, {"n", n}, {"d", nullptr}, {"from", nullptr}, {"cap", 2 * n}}};
}

Outcome extend_check(const Json& c) {
  const auto x = spec_from_json(c.at("spec"));
  const auto n = at(c, "n");
  const auto cap = at(c, "cap");
  if (!c.at("d").is_null()) {
    const auto d = c.at("d").get<unsigned>();
    const auto from = at(c, "from");
    const auto m_max = static_cast<std::size_t>(std::floor(static_cast<double>(n) * std::log(static_cast<double>(n))));
    for (std::size_t j = from; j <= m_max; ++j)
      if (static_cast<double>(x.complexity(j)) > std::pow(static_cast<double>(j), d))
        return Outcome::unknown("hypothesis P(j) <= j^d fails at j = " + std::to_string(j));
    try {
      const auto win = find_extension_window(x, n, d, cap, from);
      if (!win.k_m.exceeds_cap && static_cast<double>(win.k_m.k) < win.threshold)
        return Outcome::fail("extension-window", Json{{"m", win.m}, {"k_m", win.k_m.k}, {"threshold", win.threshold}});
    } catch (const Error& e) {
      if (e.code() != "lemma-window-not-found") throw;
      return Outcome::fail("extension-window", e.what());
    }
  }
  const auto k = min_nonextendable_radius(x, n, cap);
  if (k.exceeds_cap) {
    // for the polynomial systems a marker word extends forever, so k_n is infinite
    return c.at("d").is_null() ? Outcome::unknown("k_n exceeds the cap") : Outcome::ok();
  }
  const auto lhs = x.complexity(n + 2 * k.k);
  const auto rhs = 2 * x.complexity(n);
  if (lhs < rhs) return Outcome::fail("doubling", Json{{"k_n", k.k}, {"lhs", lhs}, {"rhs", rhs}});
  return Outcome::ok();
}

// --- shadow: D from shadowing_distance, rechecked over all of L(X).
std::vector<Json> shadow_cases(Rng& rng, std::size_t trial) {
  Subshift x = trial == 0 ? make_example("full2").spec : random_sft(rng);
  const auto& a = x.alphabet();
  std::vector<Word> y;
  if (trial == 0) {
    y = {{1, 1}};
  } else {
    const auto len = pick(rng, 1, 3);
    const auto& words = x.language(len);
    y = {words[pick(rng, 0, words.size() - 1)]};
  }
  const auto yy = x.forbid(y);
  std::vector<Json> out;
  if (yy.empty()) return out;
  for (std::size_t len = 1; len <= 3; ++len)
    for (const auto& u : yy.language(len))
      if (extension_radius(yy, u, 1).radius >= 1)
        out.push_back(Json{{"spec", spec_to_json(x)}, {"y_forbidden", word_list(y, a)}, {"u", a.format(u)}, {"t", 1}, {"cap", 6}});
  return out;
}

bool forbidden_inside(const Word& z, const std::vector<Word>& ys, std::size_t lo, std::size_t hi) {
  for (const auto& y : ys)
    for (std::size_t s = lo; s + y.size() <= hi; ++s)
      if (std::equal(y.begin(), y.end(), z.begin() + static_cast<std::ptrdiff_t>(s))) return true;
  return false;
}

// Every z in L(X) of length |u| + 2(d + t) with u at its center and no forbidden
// word inside z[t, t + |u| + 2d) has v at z[d, d + |v|).
std::optional<Word> shadow_failure(const Subshift& x, const std::vector<Word>& ys, const Word& u, const Word& v,
                                   std::size_t t, std::size_t d) {
  for (const auto& z : x.language(u.size() + 2 * (d + t))) {
    if (!std::equal(u.begin(), u.end(), z.begin() + static_cast<std::ptrdiff_t>(d + t))) continue;
    if (forbidden_inside(z, ys, t, t + u.size() + 2 * d)) continue;
    if (!std::equal(v.begin(), v.end(), z.begin() + static_cast<std::ptrdiff_t>(d))) return z;
  }
  return std::nullopt;
}

Outcome shadow_check(const Json& c) {
  const auto x = spec_from_json(c.at("spec"));
  const auto& a = x.alphabet();
  std::vector<Word> ys;
  for (const auto& y : c.at("y_forbidden")) ys.push_back(a.parse(y.get<std::string>()));
  const auto u = a.parse(c.at("u").get<std::string>());
  const auto t = at(c, "t");
  ShadowingReport rep;
  try {
    rep = shadowing_distance(x, ys, u, t, at(c, "cap"));
  } catch (const Error& e) {
    if (e.code() == "not-uniquely-extending" || e.code() == "cap-exceeded") return Outcome::unknown(e.what());
    throw;
  }
  if (const auto z = shadow_failure(x, ys, u, rep.v, t, rep.distance))
    return Outcome::fail("shadowing", Json{{"D", rep.distance}, {"v", a.format(rep.v)}, {"defeated_by", a.format(*z)}});
  if (rep.distance > 0 && !shadow_failure(x, ys, u, rep.v, t, rep.distance - 1))
    return Outcome::fail("shadowing-minimality", Json{{"D", rep.distance}, {"v", a.format(rep.v)}});
  return Outcome::ok();
}

// --- syndetic: G from syndetic_gap, rechecked on every periodic point of period <= 6.
std::vector<Json> syndetic_cases(Rng& rng, std::size_t trial) {
  Json c = trial % 4 == 0   ? chain_case(make_example("at_most_one_1").spec, 1, 1)
           : trial % 4 == 1 ? chain_case(make_example("hallway").spec, 1, 3)
                            : chain_case(random_sft(rng), 1, pick(rng, 1, 3));
  c["d"] = pick(rng, 0, 2);
  c["gap_cap"] = 40;
  return {c};
}

// Max distance between consecutive elements of S_x along one period (0 if S_x is empty).
std::size_t periodic_gap(const Configuration& p, const std::vector<Word>& ws, std::size_t d, std::size_t period) {
  const auto starts = [&](const Word& w, std::int64_t j) { return p.window(j, w.size()) == w; };
  const auto D = static_cast<std::int64_t>(d);
  std::vector<std::int64_t> s;
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(period); ++j) {
    bool hit = starts(ws[0], j);
    for (std::size_t i = 1; i < ws.size() && !hit; ++i) {
      if (!starts(ws[i], j)) continue;
      bool clear = true;
      for (auto q = j - D; q <= j + D + static_cast<std::int64_t>(ws[i].size()) - 1 && clear; ++q)
        for (std::size_t t = 0; t < i && clear; ++t) clear = !starts(ws[t], q);
      hit = clear;
    }
    if (hit) s.push_back(j);
  }
  if (s.empty()) return 0;
  std::size_t gap = static_cast<std::size_t>(s.front() + static_cast<std::int64_t>(period) - s.back());
  for (std::size_t i = 1; i < s.size(); ++i) gap = std::max(gap, static_cast<std::size_t>(s[i] - s[i - 1]));
  return gap;
}

Outcome syndetic_check(const Json& c) {
  Json why;
  const auto chain = try_chain(c, why);
  if (!chain) return Outcome::unknown(why);
  if (chain->levels.empty()) return Outcome::unknown("chain has no levels");
  const auto x = spec_from_json(c.at("spec"));
  const auto d = at(c, "d");
  SyndeticReport rep;
  try {
    rep = syndetic_gap(x, *chain, d, at(c, "gap_cap"));
  } catch (const Error& e) {
    if (e.code() == "cap-exceeded") return Outcome::unknown(e.what());
    throw;
  }
  const auto ws = chain->words();
  const auto& a = x.alphabet();
  for (std::size_t p = 1; p <= 6; ++p)
    for (const auto& w : x.language(p)) {
      const auto point = Configuration::periodic(w);
      if (!x.contains(point)) continue;
      const auto g = periodic_gap(point, ws, d, p);
      if (g == 0 || g > rep.gap)
        return Outcome::fail("syndetic-gap", Json{{"G", rep.gap}, {"D", d}, {"period", a.format(w)}, {"observed_gap", g}});
    }
  return Outcome::ok();
}

// --- subgroup: <H> is finite, H = automorphisms of range R preserving the chain's words.
std::vector<Json> subgroup_cases(Rng& rng, std::size_t trial) {
  Json c = trial == 0 ? chain_case(make_example("at_most_one_1").spec, 1, 1) : chain_case(random_sft(rng, 2), 1, pick(rng, 1, 2));
  c["d"] = pick(rng, 0, 2);
  c["closure_cap"] = 2000;
  return {c};
}

Outcome subgroup_check(const Json& c) {
  Json why;
  const auto chain = try_chain(c, why);
  if (!chain) return Outcome::unknown(why);
  const auto x = spec_from_json(c.at("spec"));
  const auto ws = chain->words();
  std::vector<AutomorphismCert> autos;
  try {
    autos = enumerate_automorphisms(x, chain->range, 200'000);
  } catch (const Error& e) {
    if (e.code() == "search-cap-exceeded") return Outcome::unknown(e.what());
    throw;
  }
  std::vector<AutomorphismCert> h;
  for (const auto& cert : autos) {
    bool keep = preserves_occurrences(x, cert.code, ws[0]);
    for (std::size_t i = 1; i < ws.size() && keep; ++i)
      keep = preserves_occurrences(x, cert.code, ws[i], Anchors{{ws.begin(), ws.begin() + static_cast<std::ptrdiff_t>(i)}, at(c, "d")});
    if (keep) h.push_back(cert);
  }
  const auto closure = subgroup_closure(x, h, at(c, "closure_cap"));
  if (closure.cap_exceeded) return Outcome::unknown("closure exceeds the cap with " + std::to_string(h.size()) + " generators");
  return Outcome::ok();
}

// --- subexp: a slow-growth window for nondecreasing subexponential f.
std::vector<Json> subexp_cases(Rng& rng, std::size_t trial) {
  static const std::vector<std::string> systems = example_names();
  static constexpr double epss[] = {0.1, 0.2, 0.5};
  Json f = Json::array();
  std::size_t k = pick(rng, 1, 3);
  double eps = epss[pick(rng, 0, 2)];
  if (trial % 3 == 2) {
    // a polynomial complexity function of a builtin system
    const auto& name = systems[pick(rng, 0, systems.size() - 1)];
    if (name == "full2" || name == "golden_mean") return {};  // exponential growth
    const auto x = make_example(name).spec;
    for (std::size_t n = 1; n <= 40; ++n) f.push_back(x.complexity(n));
    k = 1;
    eps = 0.5;
  } else {
    const auto d = pick(rng, 1, 3);
    const auto a = pick(rng, 1, 5);
    const auto b = pick(rng, 0, 10);
    for (std::size_t n = 0; n <= 400; ++n) f.push_back(a * static_cast<std::uint64_t>(std::pow(n + 1, d)) + b);
  }
  return {Json{{"f", f}, {"k", k}, {"eps", eps}}};
}

Outcome subexp_check(const Json& c) {
  const auto f = c.at("f").get<std::vector<std::uint64_t>>();
  const auto k = at(c, "k");
  const auto eps = c.at("eps").get<double>();
  const auto x = slow_growth_window(f, k, eps);
  if (!x) return Outcome::fail("slow-growth", Json{{"N", f.size() - 1}});
  const auto ratio = static_cast<double>(f[*x + k] - f[*x]) / static_cast<double>(f[*x]);
  if (!(ratio < eps)) return Outcome::fail("slow-growth", Json{{"x", *x}, {"ratio", ratio}});
  return Outcome::ok();
}

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s = {
      {"removal", {removal_cases, removal_check}},     {"chain", {chain_cases, chain_check}},
      {"extend", {extend_cases, extend_check}},        {"shadow", {shadow_cases, shadow_check}},
      {"syndetic", {syndetic_cases, syndetic_check}},  {"subgroup", {subgroup_cases, subgroup_check}},
      {"subexp", {subexp_cases, subexp_check}},
  };
  return s;
}

// ---------------------------------------------------------------------------

struct Options {
  std::string spec, code, gen_a, gen_b, probe, out, format = "json", suite, replay, example, dir;
  std::size_t max_n = 12, range = 1, maxlen = 1, cap = 0, rmax = 0, depth = 4, width = 16, height = 16;
  std::size_t node_cap = 5'000'000, trials = 20;
  std::optional<std::size_t> detect;
  std::int64_t col_start = 0, row_start = 0;
  std::uint64_t seed = 1;
  bool timing = false;
};

Json status_json(const CertifyResult& r, const Alphabet& a) {
  Json j;
  switch (r.status) {
    case CertifyResult::Status::certified:
      j["status"] = "certified";
      j["r_certified"] = r.cert->r_certified;
      j["inverse"] = code_to_json(r.cert->inverse);
      break;
    case CertifyResult::Status::unknown:
      j["status"] = "unknown";
      break;
    case CertifyResult::Status::not_endomorphism:
      j["status"] = "not-endomorphism";
      j["witness"] = a.format(*r.witness);
      break;
  }
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on one-dimensional subshifts and their automorphisms", "subshift"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "Write the report (or CSV table) to this file instead of stdout");
  app.add_flag("--timing", o.timing, "Measure elapsed_ms (null otherwise, keeping reports byte-identical)");
  const auto spec_opt = [&](CLI::App* s) {
    s->add_option("--spec", o.spec, "Spec JSON file or builtin:NAME")->required();
  };

  auto* complexity_cmd = app.add_subcommand("complexity", "Complexity table P_X(1..N)");
  complexity_cmd->fallthrough();
  spec_opt(complexity_cmd);
  complexity_cmd->add_option("--max-n", o.max_n)->check(CLI::PositiveNumber);
  complexity_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* chain_cmd = app.add_subcommand("chain", "Build the descending chain X_0 > X_1 > ...");
  chain_cmd->fallthrough();
  spec_opt(chain_cmd);
  chain_cmd->add_option("--range", o.range)->required();
  chain_cmd->add_option("--maxlen", o.maxlen)->required();
  chain_cmd->add_option("--cap", o.cap)->required();

  auto* autos_cmd = app.add_subcommand("autos", "Automorphisms of bounded range");
  autos_cmd->fallthrough();
  autos_cmd->require_subcommand(1);
  auto* enumerate_cmd = autos_cmd->add_subcommand("enumerate", "All of Aut_R(X)");
  enumerate_cmd->fallthrough();
  spec_opt(enumerate_cmd);
  enumerate_cmd->add_option("--range", o.range)->required();
  enumerate_cmd->add_option("--node-cap", o.node_cap);
  auto* certify_cmd = autos_cmd->add_subcommand("certify", "Certify a block code as an automorphism");
  certify_cmd->fallthrough();
  spec_opt(certify_cmd);
  certify_cmd->add_option("--code", o.code, "Code JSON file or builtin:NAME")->required();
  certify_cmd->add_option("--rmax", o.rmax)->required();

  auto* free_cmd = app.add_subcommand("certify-free", "Check that two automorphisms generate a free semigroup");
  free_cmd->fallthrough();
  spec_opt(free_cmd);
  free_cmd->add_option("--gen-a", o.gen_a)->required();
  free_cmd->add_option("--gen-b", o.gen_b)->required();
  free_cmd->add_option("--depth", o.depth)->required()->check(CLI::PositiveNumber);
  free_cmd->add_option("--rmax", o.rmax, "Inverse search range (default: the larger generator range)");

  auto* st_cmd = app.add_subcommand("spacetime", "Space-time window of an automorphism on a point");
  st_cmd->fallthrough();
  spec_opt(st_cmd);
  st_cmd->add_option("--code", o.code)->required();
  st_cmd->add_option("--probe", o.probe, "Configuration JSON file or builtin:NAME")->required();
  st_cmd->add_option("--width", o.width)->required()->check(CLI::PositiveNumber);
  st_cmd->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
  st_cmd->add_option("--detect-periods", o.detect, "Search period vectors with entries bounded by B");
  st_cmd->add_option("--col-start", o.col_start);
  st_cmd->add_option("--row-start", o.row_start);
  st_cmd->add_option("--rmax", o.rmax, "Inverse search range (default: the code's range)");
  st_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "Randomized lemma suites");
  verify_cmd->fallthrough();
  auto* suite_opt = verify_cmd->add_option("--suite", o.suite)->check(CLI::IsMember(
      {"removal", "chain", "extend", "shadow", "syndetic", "subgroup", "subexp"}));
  verify_cmd->add_option("--trials", o.trials, "Number of trials (default 20)")
      ->check(CLI::Validator([](std::string& v) { return v == "0" ? std::string("trials must be >= 1") : std::string(); }, "", "AT_LEAST_1"))
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", o.seed, "Generator seed (default 1)");
  auto* replay_opt = verify_cmd->add_option("--replay", o.replay, "Re-check the violations of an earlier report");
  suite_opt->excludes(replay_opt);

  auto* export_cmd = app.add_subcommand("export", "Write a built-in system as spec, code and probe files");
  export_cmd->fallthrough();
  export_cmd->add_option("--example", o.example)->required()->check(CLI::IsMember(example_names()));
  export_cmd->add_option("--dir", o.dir)->required();

  std::vector<std::string> argv_s{"subshift"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_s) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (verify_cmd->parsed() && o.suite.empty() && o.replay.empty()) {
    err << "verify-lemmas: one of --suite or --replay is required\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Session session;
  Json report;
  Json results;
  Json violations = Json::array();
  Json seed = nullptr;
  std::string command;
  std::optional<std::string> raw;  // emitted as-is instead of a JSON report

  try {
    if (complexity_cmd->parsed()) {
      command = "complexity";
      const auto x = session.spec(o.spec);
      const auto table = complexity_table(x.spec, o.max_n, o.spec);
      if (o.format == "csv") {
        raw = table_to_csv(table);
      } else {
        const auto mh = morse_hedlund_classify(x.spec, o.max_n);
        results["table"] = table_to_json(table);
        results["morse_hedlund"] = Json{{"all_periodic", mh.all_periodic},
                                        {"witness", mh.all_periodic ? Json(mh.witness) : Json(nullptr)}};
      }
    } else if (chain_cmd->parsed()) {
      command = "chain";
      const auto x = session.spec(o.spec);
      const auto chain = build_chain(x.spec, o.range, o.maxlen, o.cap);
      results = chain_to_json(chain);
      const auto periodic = periodic_level(chain);
      results["aperiodic_cylinders"] = !periodic.has_value();
      if (periodic) {
        // the lemma does not apply; the bounds are reported but not judged
      } else if (!chain.bound_on_w_tilde.holds) violations.push_back(violation("chain-bound", results["bounds"]["L_prime"]));
      if (!periodic && !chain.sharpening_holds)
        violations.push_back(violation("chain-sharpening", results["bounds"]["sharpening"]));
    } else if (enumerate_cmd->parsed()) {
      command = "autos enumerate";
      const auto x = session.spec(o.spec);
      const auto found = enumerate_automorphisms(x.spec, o.range, o.node_cap);
      results["range"] = o.range;
      results["count"] = found.size();
      Json list = Json::array();
      for (const auto& c : found)
        list.push_back(Json{{"code", code_to_json(c.code)}, {"inverse", code_to_json(c.inverse)}, {"r_certified", c.r_certified}});
      results["automorphisms"] = list;
    } else if (certify_cmd->parsed()) {
      command = "autos certify";
      const auto x = session.spec(o.spec);
      const auto phi = session.code("code", o.code, x);
      const auto r = certify_automorphism(x.spec, phi, o.rmax);
      results = status_json(r, x.spec.alphabet());
      if (r.status != CertifyResult::Status::certified) violations.push_back(violation("automorphism", results));
    } else if (free_cmd->parsed()) {
      command = "certify-free";
      const auto x = session.spec(o.spec);
      const auto a = session.code("gen_a", o.gen_a, x);
      const auto b = session.code("gen_b", o.gen_b, x);
      const auto rmax = o.rmax ? o.rmax : std::max(a.range(), b.range());
      const auto ca = certify_automorphism(x.spec, a, rmax);
      const auto cb = certify_automorphism(x.spec, b, rmax);
      results["generators"] = Json{{"a", status_json(ca, x.spec.alphabet())}, {"b", status_json(cb, x.spec.alphabet())}};
      if (!ca.cert || !cb.cert) {
        violations.push_back(violation("automorphism", results["generators"]));
      } else {
        const auto v = certify_free_semigroup(x.spec, *ca.cert, *cb.cert, o.depth);
        results["depth"] = v.depth;
        results["products"] = v.words.size();
        results["free_to_depth"] = v.free;
        results["collision"] = v.collision ? Json::array({v.collision->first, v.collision->second}) : Json(nullptr);
        if (!v.free)
          violations.push_back(violation("free-semigroup", Json::array({v.collision->first, v.collision->second})));
      }
    } else if (st_cmd->parsed()) {
      command = "spacetime";
      const auto x = session.spec(o.spec);
      const auto phi = session.code("code", o.code, x);
      const auto p = session.probe(o.probe, x);
      const auto r = certify_automorphism(x.spec, phi, o.rmax ? o.rmax : phi.range());
      std::optional<AutomorphismCert> cert = r.cert;
      if (!cert) {
        if (o.row_start < 0)
          throw Error("invalid-argument", "negative rows need an automorphism, and the code does not certify");
        // forward rows only use the code itself
        cert = AutomorphismCert{phi, phi, phi.range()};
      }
      const auto w = spacetime_window(x.spec, *cert, p, o.width, o.height, o.col_start, o.row_start);
      if (o.format == "text") {
        raw = to_text(w, x.spec.alphabet());
      } else {
        results["certified"] = r.cert.has_value();
        results["window"] = window_to_json(w, x.spec.alphabet());
        if (o.detect) {
          Json vs = Json::array();
          for (const auto& v : detect_period_vectors(w, *o.detect)) vs.push_back(Json::array({v.v1, v.v2}));
          results["period_vectors"] = vs;
        }
      }
    } else if (verify_cmd->parsed()) {
      command = "verify-lemmas";
      std::size_t cases = 0, inconclusive = 0;
      Json reasons = Json::object();
      const auto run = [&](const std::string& suite, const Json& c) {
        ++cases;
        const auto outcome = suites().at(suite).check(c);
        if (outcome.kind == Outcome::Kind::inconclusive) {
          ++inconclusive;
          const auto why = outcome.detail.get<std::string>();
          const auto key = why.substr(0, why.find(':'));
          reasons[key] = reasons.value(key, 0) + 1;
        }
        if (outcome.kind == Outcome::Kind::violation) {
          Json v = violation(outcome.lemma, Json{{"suite", suite}, {"case", c}});
          v["detail"] = outcome.detail;
          violations.push_back(v);
        }
      };
      if (!o.replay.empty()) {
        const auto text = read_text_file(o.replay);
        session.record("replay", o.replay, text);
        const auto old = Json::parse(text);
        std::size_t replayed = 0;
        for (const auto& v : old.at("violations")) {
          const auto& w = v.at("witness");
          const auto suite = w.at("suite").get<std::string>();
          if (!suites().count(suite)) throw Error("invalid-argument", "unknown suite " + suite);
          run(suite, w.at("case"));
          ++replayed;
        }
        results["replayed"] = replayed;
        results["reproduced"] = violations.size();
      } else {
        seed = o.seed;
        Rng rng(o.seed);
        for (std::size_t t = 0; t < o.trials; ++t)
          for (const auto& c : suites().at(o.suite).generate(rng, t)) run(o.suite, c);
        results["suite"] = o.suite;
        results["trials"] = o.trials;
      }
      results["cases"] = cases;
      results["inconclusive"] = inconclusive;
      results["inconclusive_reasons"] = reasons;
    } else if (export_cmd->parsed()) {
      command = "export";
      const auto sys = make_example(o.example);
      export_example(sys, o.dir);
      Json files = Json::array({"spec.json"});
      for (const auto& [name, c] : sys.codes) files.push_back("codes/" + name + ".json");
      for (const auto& [name, p] : sys.probes) files.push_back("probes/" + name + ".json");
      results["example"] = o.example;
      results["files"] = files;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid-json: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (raw) {
    text = *raw;
  } else {
    report["command"] = command;
    report["inputs"] = session.inputs;
    report["seed"] = seed;
    report["results"] = results;
    report["violations"] = violations;
    report["elapsed_ms"] = o.timing ? Json(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count())
                                    : Json(nullptr);
    text = report.dump(2) + "\n";
  }
  try {
    if (o.out.empty())
      out << text;
    else
      write_file_atomic(o.out, text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return violations.empty() ? 0 : 1;
}

}  // namespace subshift
