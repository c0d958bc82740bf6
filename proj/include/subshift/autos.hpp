#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subshift/block_code.hpp"
#include "subshift/chains.hpp"

namespace subshift {

struct AutomorphismCert {
  BlockCode code;
  BlockCode inverse;
  std::size_t r_certified = 0;  // max of both ranges
};

/// ψ with ψ∘φ = id and φ∘ψ = id on X at the smallest range r <= r_max, or
/// nullopt (inconclusive).
std::optional<BlockCode> find_inverse(const Subshift& x, const BlockCode& phi, std::size_t r_max);

/// A word of φ(X) outside L(X), or nullopt when φ(X) ⊆ X. Exact: the image
/// is presented by a higher-block graph of X's presentation.
std::optional<Word> endomorphism_witness(const Subshift& x, const BlockCode& phi);

struct CertifyResult {
  enum class Status { certified, unknown, not_endomorphism };
  Status status = Status::unknown;
  std::optional<AutomorphismCert> cert;
  std::optional<Word> witness;  // image word outside L(X)
};

CertifyResult certify_automorphism(const Subshift& x, const BlockCode& phi, std::size_t r_max);

/// Aut_R(X): every code of range R whose inverse also has range <= R, in
/// lexicographic order of rule tables. Throws "search-cap-exceeded".
std::vector<AutomorphismCert> enumerate_automorphisms(const Subshift& x, std::size_t range,
                                                      std::size_t node_cap = 5'000'000);

struct Anchors {
  std::vector<Word> words;
  std::size_t distance = 0;
};

/// φ maps [v]_0^+ ∩ X into [v]_0^+. With anchors, only occurrences of v
/// whose D-neighbourhood holds no anchor word count.
bool preserves_occurrences(const Subshift& x, const BlockCode& phi, const Word& v,
                           const std::optional<Anchors>& anchors = std::nullopt);

/// (φ(w̃_0), ..., φ(w̃_k)) with φ padded to the chain's range.
std::vector<Word> coset_signature(const BlockCode& phi, const Chain& chain);
/// f(n): distinct signatures over Aut_n(X), n <= R. Throws "invalid-chain".
std::size_t coset_count(const Subshift& x, std::size_t n, const Chain& chain);
/// P_X(max |w̃|)^(number of signature entries), saturating.
std::uint64_t coset_bound(const Subshift& x, const Chain& chain);

struct ClosureResult {
  bool cap_exceeded = false;
  std::vector<BlockCode> elements;  // minimal-range codes, canonically ordered
};

ClosureResult subgroup_closure(const Subshift& x, const std::vector<AutomorphismCert>& gens, std::size_t cap);

struct FreenessVerdict {
  bool free = false;
  std::size_t depth = 0;
  std::vector<std::string> words;          // "a", "b", "aa", ... in shortlex order
  std::vector<std::vector<bool>> equal;    // equal[i][j]: words i and j give the same map
  std::optional<std::pair<std::string, std::string>> collision;
};

/// Builds the code of a word over {a, b}; "ab" means a∘b (b applied first).
BlockCode semigroup_element(const BlockCode& a, const BlockCode& b, const std::string& word);
FreenessVerdict certify_free_semigroup(const Subshift& x, const AutomorphismCert& a, const AutomorphismCert& b,
                                       std::size_t depth);

/// a∘b∘a⁻¹∘b⁻¹.
BlockCode commutator(const BlockCode& a, const BlockCode& b, const BlockCode& a_inv, const BlockCode& b_inv);

}  // namespace subshift
