#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "weight.hpp"

namespace fundstring {

/// All weights in the Weyl orbit of mu, sorted lexicographically.
///   A: permutations. B, C: signed permutations. D: signed permutations with
///   an even number of sign changes.
inline std::vector<Weight> weyl_orbit(LieType const& lie, Weight const& mu) {
  Weight const dom = dominant_representative(lie, mu);
  std::vector<std::int64_t> base(dom.doubled().begin(), dom.doubled().end());
  std::vector<Weight> out;

  if (lie.family() == Family::A) {
    std::sort(base.begin(), base.end());
    do {
      out.push_back(Weight::from_doubled(base));
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool const has_zero = std::find(base.begin(), base.end(), 0) != base.end();
  int const parity = neg_count(dom) % 2;
  for (auto& v : base) v = v < 0 ? -v : v;
  std::sort(base.begin(), base.end());

  std::vector<std::size_t> nonzero;
  std::vector<std::int64_t> w(base.size());
  do {
    nonzero.clear();
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] != 0) nonzero.push_back(i);
    }
    std::uint64_t const patterns = std::uint64_t{1} << nonzero.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      if (lie.family() == Family::D && !has_zero && (std::popcount(mask) % 2) != parity) continue;
      w = base;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) w[nonzero[b]] = -w[nonzero[b]];
      }
      out.push_back(Weight::from_doubled(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fundstring
