#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d2p/field.hpp"

namespace d2p {

// Witness for the zero-sum splitting step: positions k1 < k2 carry equal
// values, and seq[k1] plus the entries at the (disjoint, ascending) subset
// positions sums to zero mod p. All indices are 0-based.
struct ZeroSumWitness {
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  std::vector<std::size_t> subset;

  bool operator==(const ZeroSumWitness&) const = default;
};

// Smallest subset of positions (by size, then lexicographically on the
// ascending index list) disjoint from {k1, k2} with seq[k1] + sum == 0, or
// nullopt when none exists. Entries must be nonzero and share a modulus;
// requires seq[k1] == seq[k2].
std::optional<std::vector<std::size_t>> zerosum_completion(const std::vector<ZmodP>& seq,
                                                           std::size_t k1, std::size_t k2);

// First (lexicographically by (k1, k2)) equal pair admitting a completion.
// For a sequence of length >= p+1 over nonzero residues mod a prime p this
// always exists; the function itself only assumes nonzero entries and throws
// when no equal pair exists or no pair completes, so composite moduli can be
// probed for counterexamples.
ZeroSumWitness schmid_zero_sum(const std::vector<ZmodP>& seq);

// Convenience: wrap raw values mod p (validates p >= 2 and nonzero entries).
std::vector<ZmodP> make_residues(const std::vector<std::uint32_t>& values, std::uint32_t p);

}  // namespace d2p
