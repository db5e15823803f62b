#include "d2p/zerosum.hpp"

#include <stdexcept>

namespace d2p {

namespace {

void check_sequence(const std::vector<ZmodP>& seq) {
  if (seq.empty()) throw std::invalid_argument("zero-sum: empty sequence");
  const std::uint32_t p = seq[0].modulus();
  for (const ZmodP& v : seq) {
    if (v.modulus() != p) throw std::invalid_argument("zero-sum: mixed moduli in sequence");
    if (v.is_zero()) throw std::invalid_argument("zero-sum: entries must be nonzero mod p");
  }
}

// Advances `combo` to the next size-|combo| combination of {0..n-1} in
// lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - (k - i)) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> zerosum_completion(const std::vector<ZmodP>& seq,
                                                           std::size_t k1, std::size_t k2) {
  check_sequence(seq);
  if (k1 >= seq.size() || k2 >= seq.size() || k1 == k2) {
    throw std::invalid_argument("zero-sum: pair indices out of range");
  }
  if (!(seq[k1] == seq[k2])) {
    throw std::invalid_argument("zero-sum: pair entries are not equal");
  }

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != k1 && i != k2) pool.push_back(i);
  }

  const ZmodP zero(0, seq[0].modulus());
  for (std::size_t size = 0; size <= pool.size(); ++size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    do {
      ZmodP sum = seq[k1];
      for (std::size_t i : combo) sum = sum + seq[pool[i]];
      if (sum == zero) {
        std::vector<std::size_t> subset(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = pool[combo[i]];
        return subset;
      }
    } while (size > 0 && next_combination(combo, pool.size()));
  }
  return std::nullopt;
}

ZeroSumWitness schmid_zero_sum(const std::vector<ZmodP>& seq) {
  check_sequence(seq);

  bool pair_seen = false;
  for (std::size_t k1 = 0; k1 < seq.size(); ++k1) {
    for (std::size_t k2 = k1 + 1; k2 < seq.size(); ++k2) {
      if (!(seq[k1] == seq[k2])) continue;
      pair_seen = true;
      if (auto subset = zerosum_completion(seq, k1, k2)) {
        return ZeroSumWitness{k1, k2, std::move(*subset)};
      }
    }
  }
  if (!pair_seen) {
    throw std::invalid_argument(
        "zero-sum: no equal pair in the sequence (guaranteed only for length >= p+1)");
  }
  throw std::invalid_argument(
      "zero-sum: equal pairs exist but none admits a completion (possible only for "
      "composite moduli or short sequences)");
}

std::vector<ZmodP> make_residues(const std::vector<std::uint32_t>& values, std::uint32_t p) {
  std::vector<ZmodP> out;
  out.reserve(values.size());
  for (std::uint32_t v : values) out.emplace_back(v, p);
  check_sequence(out);
  return out;
}

}  // namespace d2p
