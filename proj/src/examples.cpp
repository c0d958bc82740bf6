#include "subshift/examples.hpp"

#include "subshift/error.hpp"

namespace subshift {

namespace hallway {

namespace {

bool carries_person(Letter c) { return c == kPerson || c == kNailP || c == kAP || c == kBP; }
bool is_nail(Letter c) { return c == kNail || c == kA || c == kB; }
Letter with_person(Letter nail) { return nail == kNail ? kNailP : nail == kA ? kAP : kBP; }
Letter without_person(Letter c) { return c == kNailP ? kNail : c == kAP ? kA : kB; }

// The picture action: the chosen picture is hung on an empty nail or taken
// down if already hanging; the other picture is left alone.
Letter act(Letter nail, char picture) {
  const Letter mine = picture == 'a' ? kA : kB;
  if (nail == kNail) return mine;
  if (nail == mine) return kNail;
  return nail;
}

void check_picture(char picture) {
  if (picture != 'a' && picture != 'b') throw Error("invalid-argument", "picture must be 'a' or 'b'");
}

}  // namespace

Subshift spec() {
  std::vector<std::vector<Letter>> families;
  for (Letter m : {kNail, kA, kB, kPerson, kNailP, kAP, kBP}) families.push_back({m});
  for (Letter m : {kNail, kA, kB}) families.push_back({m, kPerson});
  return build_sparse(Alphabet({"0", "1", "a", "b", "p", "1p", "ap", "bp"}), kEmpty, families);
}

BlockCode step_right(const Subshift& x, char picture) {
  check_picture(picture);
  return BlockCode::from_rule(x, 1, [picture](const Word& w) -> Letter {
    const Letter l = w[0], c = w[1];
    if (c == kEmpty) return carries_person(l) ? kPerson : kEmpty;
    if (c == kPerson) return kEmpty;
    if (is_nail(c)) return l == kPerson ? with_person(act(c, picture)) : c;
    return without_person(c);
  });
}

BlockCode step_left(const Subshift& x, char picture) {
  check_picture(picture);
  return BlockCode::from_rule(x, 1, [picture](const Word& w) -> Letter {
    const Letter c = w[1], r = w[2];
    if (c == kEmpty) return carries_person(r) ? kPerson : kEmpty;
    if (c == kPerson) return kEmpty;
    if (is_nail(c)) return r == kPerson ? with_person(c) : c;
    return act(without_person(c), picture);  // act is an involution
  });
}

Configuration probe(std::size_t i) {
  Word center(i + 1, kEmpty);
  center.front() = kPerson;
  center.back() = kNail;
  return Configuration::marked(kEmpty, center, -static_cast<std::int64_t>(i));
}

}  // namespace hallway

const BlockCode& NamedSystem::code(const std::string& n) const {
  auto it = codes.find(n);
  if (it == codes.end()) throw Error("unknown-code", name + " has no code '" + n + "'");
  return it->second;
}

const Configuration& NamedSystem::probe(const std::string& n) const {
  for (const auto& [k, p] : probes)
    if (k == n) return p;
  throw Error("unknown-probe", name + " has no probe '" + n + "'");
}

AutomorphismCert NamedSystem::cert(const std::string& code_name, const std::string& inverse_name) const {
  const auto& c = code(code_name);
  const auto& i = code(inverse_name);
  return AutomorphismCert{c, i, std::max(c.range(), i.range())};
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"full2",         "golden_mean",     "cycle2",
                                              "at_most_one_1", "salo_schraudner", "hallway"};
  return names;
}

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

Subshift at_most_one_1() { return build_sparse(binary(), 0, {{1}}); }

void add_shifts(NamedSystem& s) {
  s.codes.emplace("identity", identity_code(s.spec));
  s.codes.emplace("shift", shift_code(s.spec, 1));
  s.codes.emplace("shift_inv", shift_code(s.spec, -1));
}

}  // namespace

NamedSystem make_example(const std::string& name) {
  using C = Configuration;
  if (name == "full2") {
    NamedSystem s{name, build_sft(binary(), {}), {}, {}};
    add_shifts(s);
    s.codes.emplace("flip", letter_map(s.spec, {1, 0}));
    s.probes = {{"single_1", C::marked(0, {1}, 0)}, {"periodic_01", C::periodic({0, 1})},
                {"zero", C::constant(0)}, {"pair_10", C::marked(0, {1, 0, 1}, 0)}};
    return s;
  }
  if (name == "golden_mean") {
    NamedSystem s{name, build_sft(binary(), {{1, 1}}), {}, {}};
    add_shifts(s);
    s.probes = {{"single_1", C::marked(0, {1}, 0)}, {"periodic_01", C::periodic({0, 1})}, {"zero", C::constant(0)}};
    return s;
  }
  if (name == "cycle2") {
    NamedSystem s{name, build_sft(binary(), {{0, 0}, {1, 1}}), {}, {}};
    add_shifts(s);
    s.probes = {{"periodic_01", C::periodic({0, 1})}, {"periodic_10", C::periodic({1, 0})}};
    return s;
  }
  if (name == "at_most_one_1") {
    NamedSystem s{name, at_most_one_1(), {}, {}};
    add_shifts(s);
    s.probes = {{"single_1", C::marked(0, {1}, 0)}, {"zero", C::constant(0)}};
    return s;
  }
  if (name == "salo_schraudner") {
    NamedSystem s{name, product(at_most_one_1(), at_most_one_1()), {}, {}};
    add_shifts(s);
    // (l, r) is letter 2l + r
    s.codes.emplace("swap", letter_map(s.spec, {0, 2, 1, 3}));
    s.probes = {{"single_11", C::marked(0, {3}, 0)},
                {"split_3", C::marked(0, {2, 0, 0, 1}, 0)},
                {"zero", C::constant(0)}};
    return s;
  }
  if (name == "hallway") {
    NamedSystem s{name, hallway::spec(), {}, {}};
    add_shifts(s);
    s.codes.emplace("phi_a", hallway::step_right(s.spec, 'a'));
    s.codes.emplace("phi_b", hallway::step_right(s.spec, 'b'));
    s.codes.emplace("phi_a_inv", hallway::step_left(s.spec, 'a'));
    s.codes.emplace("phi_b_inv", hallway::step_left(s.spec, 'b'));
    for (std::size_t i = 1; i <= 8; ++i) s.probes.emplace_back("x" + std::to_string(i), hallway::probe(i));
    using namespace hallway;
    s.probes.emplace_back("x3_nail_a", C::marked(kEmpty, {kPerson, kEmpty, kEmpty, kA}, -3));
    s.probes.emplace_back("x3_nail_b", C::marked(kEmpty, {kPerson, kEmpty, kEmpty, kB}, -3));
    s.probes.emplace_back("on_nail_1", C::marked(kEmpty, {kNailP}, 0));
    s.probes.emplace_back("on_nail_a", C::marked(kEmpty, {kAP}, 0));
    s.probes.emplace_back("on_nail_b", C::marked(kEmpty, {kBP}, 0));
    s.probes.emplace_back("past_nail", C::marked(kEmpty, {kNail, kEmpty, kPerson}, 0));
    s.probes.emplace_back("nail_only", C::marked(kEmpty, {kNail}, 0));
    s.probes.emplace_back("person_only", C::marked(kEmpty, {kPerson}, 0));
    return s;
  }
  throw Error("unknown-example", "no built-in system named '" + name + "'");
}

}  // namespace subshift
