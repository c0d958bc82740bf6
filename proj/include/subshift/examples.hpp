#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subshift/autos.hpp"

namespace subshift {

struct NamedSystem {
  std::string name;
  Subshift spec;
  std::map<std::string, BlockCode> codes;
  std::vector<std::pair<std::string, Configuration>> probes;

  const BlockCode& code(const std::string& name) const;
  const Configuration& probe(const std::string& name) const;
  /// Certificate from a code and its named inverse (no search).
  AutomorphismCert cert(const std::string& code_name, const std::string& inverse_name) const;
};

/// full2, golden_mean, cycle2, at_most_one_1, salo_schraudner, hallway.
/// Throws "unknown-example".
NamedSystem make_example(const std::string& name);
const std::vector<std::string>& example_names();

namespace hallway {

// Letter indices in the hallway alphabet {0, 1, a, b, p, 1p, ap, bp}.
inline constexpr Letter kEmpty = 0, kNail = 1, kA = 2, kB = 3, kPerson = 4, kNailP = 5, kAP = 6, kBP = 7;

Subshift spec();
/// φ_a (picture = 'a') or φ_b: the person steps right and acts on arrival.
BlockCode step_right(const Subshift& x, char picture);
/// The inverse walk: the person steps left, undoing the arrival action.
BlockCode step_left(const Subshift& x, char picture);
/// x_i: nail "1" at the origin, the person i cells to the left.
Configuration probe(std::size_t i);

}  // namespace hallway

}  // namespace subshift
