#pragma once

// Independent ground truth for weight multiplicities: root data, the
// Freudenthal recursion, the Weyl dimension formula and tensor products of
// Freudenthal diagrams. Nothing here calls the closed formulas.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "label.hpp"
#include "orbit.hpp"
#include "weight.hpp"

namespace fundstring {

struct RootSystem {
  LieType lie;
  std::vector<Weight> positive_roots;
  std::vector<Weight> simple_roots;
  Weight rho;
};

/// Four times the Euclidean pairing; exact on the doubled coordinates.
inline std::int64_t pairing_x4(Weight const& a, Weight const& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a.doubled()[i] * b.doubled()[i];
  return s;
}

inline RootSystem root_system(LieType const& lie) {
  auto const dim = static_cast<std::size_t>(lie.ambient_dim());
  auto const n = static_cast<std::size_t>(lie.rank());
  auto unit = [dim](std::size_t i, std::int64_t ci, std::size_t j, std::int64_t cj) {
    std::vector<std::int64_t> d(dim, 0);
    d[i] += 2 * ci;
    if (cj != 0) d[j] += 2 * cj;
    return Weight::from_doubled(std::move(d));
  };

  std::vector<Weight> pos;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      pos.push_back(unit(i, 1, j, -1));
      if (lie.family() != Family::A) pos.push_back(unit(i, 1, j, 1));
    }
  }
  if (lie.family() == Family::B) {
    for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(i, 1, i, 0));
  } else if (lie.family() == Family::C) {
    for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(i, 2, i, 0));
  }

  std::vector<Weight> simple;
  for (std::size_t i = 0; i + 1 < dim; ++i) simple.push_back(unit(i, 1, i + 1, -1));
  switch (lie.family()) {
    case Family::A: break;
    case Family::B: simple.push_back(unit(n - 1, 1, n - 1, 0)); break;
    case Family::C: simple.push_back(unit(n - 1, 2, n - 1, 0)); break;
    case Family::D: simple.push_back(unit(n - 2, 1, n - 1, 1)); break;
  }

  // rho = half the sum of positive roots; doubled(rho) = sum of halves of
  // doubled roots, which is integral.
  std::vector<std::int64_t> rho2(dim, 0);
  for (auto const& a : pos) {
    for (std::size_t i = 0; i < dim; ++i) rho2[i] += a.doubled()[i];
  }
  for (auto& v : rho2) v /= 2;
  return RootSystem{lie, std::move(pos), std::move(simple), Weight::from_doubled(std::move(rho2))};
}

/// Coefficients of lambda - mu in the simple roots, or empty when they are
/// not all non-negative integers (mu is not below lambda).
inline std::optional<std::vector<std::int64_t>> simple_root_coefficients(LieType const& lie, Weight const& lambda,
                                                                         Weight const& mu) {
  auto const dim = static_cast<std::size_t>(lie.ambient_dim());
  std::vector<std::int64_t> partial(dim);
  std::int64_t running = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    running += lambda.doubled()[i] - mu.doubled()[i];
    partial[i] = running;  // doubled partial sums
  }
  // Each entry of `twice` is twice a coefficient.
  std::vector<std::int64_t> twice;
  switch (lie.family()) {
    case Family::A:
      if (partial[dim - 1] != 0) return std::nullopt;
      twice.assign(partial.begin(), partial.end() - 1);
      break;
    case Family::B:
      twice = partial;
      break;
    case Family::C:
      twice.assign(partial.begin(), partial.end());
      if (twice.back() % 2 != 0) return std::nullopt;
      twice.back() /= 2;
      break;
    case Family::D: {
      std::int64_t const last_diff = lambda.doubled()[dim - 1] - mu.doubled()[dim - 1];
      // c_n = S_n / 2 and c_{n-1} = (S_{n-1} - d_n) / 2 in undoubled terms.
      std::int64_t const c_top = partial[dim - 1];
      std::int64_t const c_next = partial[dim - 2] - last_diff;
      if (c_top % 2 != 0 || c_next % 2 != 0) return std::nullopt;
      twice.assign(partial.begin(), partial.end() - 2);
      twice.push_back(c_next / 2);
      twice.push_back(c_top / 2);
      break;
    }
  }
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(twice.size());
  for (auto v : twice) {
    if (v < 0 || v % 2 != 0) return std::nullopt;
    coeffs.push_back(v / 2);
  }
  return coeffs;
}

namespace detail {

inline void require_dominant_highest(LieType const& lie, Weight const& lambda) {
  require_rank(lie, lambda);
  if (!is_dominant(lie, lambda)) throw Error("highest weight " + lambda.to_string() + " is not dominant");
  if ((lie.family() == Family::A || lie.family() == Family::C) && !lambda.is_integral()) {
    throw Error("highest weight " + lambda.to_string() + " is not in the weight lattice of " + lie.name());
  }
}

}  // namespace detail

/// Multiplicities of every dominant weight of pi_lambda, by the Freudenthal
/// recursion
///   ((l+rho,l+rho) - (mu+rho,mu+rho)) m(mu) = 2 sum_{a>0} sum_{j>=1} (mu+j a, a) m(mu+j a)
/// driven over dominant weights in order of increasing depth below lambda.
inline std::map<Weight, BigInt> dominant_multiplicities(LieType const& lie, Weight const& lambda) {
  detail::require_dominant_highest(lie, lambda);
  RootSystem const roots = root_system(lie);

  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (auto const& m : frontier) {
      for (auto const& a : roots.positive_roots) {
        Weight d = dominant_representative(lie, m - a);
        if (seen.count(d) || !simple_root_coefficients(lie, lambda, d)) continue;
        seen.insert(d);
        next.push_back(std::move(d));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::int64_t, Weight>> by_depth;
  for (auto const& w : seen) {
    auto const c = simple_root_coefficients(lie, lambda, w);
    std::int64_t depth = 0;
    for (auto v : *c) depth += v;
    by_depth.emplace_back(depth, w);
  }
  std::sort(by_depth.begin(), by_depth.end());

  std::map<Weight, BigInt> mult;
  Weight const lr = lambda + roots.rho;
  std::int64_t const top = pairing_x4(lr, lr);
  for (auto const& [depth, mu] : by_depth) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    BigInt numerator = 0;
    for (auto const& a : roots.positive_roots) {
      Weight shifted = mu + a;
      while (true) {
        auto it = mult.find(dominant_representative(lie, shifted));
        if (it == mult.end()) break;
        numerator += BigInt(pairing_x4(shifted, a)) * it->second;
        shifted = shifted + a;
      }
    }
    numerator *= 2;
    Weight const mr = mu + roots.rho;
    std::int64_t const denominator = top - pairing_x4(mr, mr);
    if (denominator <= 0 || numerator % denominator != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
    }
    BigInt m = numerator / denominator;
    if (m > 0) mult.emplace(mu, std::move(m));
  }
  return mult;
}

/// Multiplicity of mu in pi_lambda; 0 when mu is not a weight.
inline BigInt freudenthal(LieType const& lie, Weight const& lambda, Weight const& mu) {
  require_rank(lie, mu);
  auto const table = dominant_multiplicities(lie, lambda);
  if (mu.is_integral() != lambda.is_integral()) return 0;
  auto it = table.find(dominant_representative(lie, mu));
  return it == table.end() ? BigInt(0) : it->second;
}

/// Full weight table of pi_lambda (Weyl orbits of the dominant table).
inline WeightDiagram weight_diagram(LieType const& lie, Weight const& lambda) {
  WeightDiagram out;
  out.label = lie.name() + " highest weight " + lambda.to_string();
  for (auto const& [dom, m] : dominant_multiplicities(lie, lambda)) {
    for (auto const& w : weyl_orbit(lie, dom)) out.entries.emplace(w, m);
  }
  return out;
}

/// Sum of the Freudenthal diagrams of every constituent of a label.
inline WeightDiagram weight_diagram(StringLabel const& label) {
  WeightDiagram out;
  out.label = label.to_string();
  for (auto const& lambda : highest_weights(label)) {
    for (auto const& [w, m] : weight_diagram(label.lie(), lambda).entries) out.add(w, m);
  }
  return out;
}

/// prod_{a>0} (lambda+rho, a) / (rho, a), evaluated exactly.
inline BigInt weyl_dimension(LieType const& lie, Weight const& lambda) {
  detail::require_dominant_highest(lie, lambda);
  RootSystem const roots = root_system(lie);
  Weight const lr = lambda + roots.rho;
  BigInt num = 1;
  BigInt den = 1;
  for (auto const& a : roots.positive_roots) {
    num *= pairing_x4(lr, a);
    den *= pairing_x4(roots.rho, a);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not integral for " + lambda.to_string());
  return num / den;
}

inline BigInt weyl_dimension(StringLabel const& label) {
  BigInt total = 0;
  for (auto const& lambda : highest_weights(label)) total += weyl_dimension(label.lie(), lambda);
  return total;
}

/// Weight table of sigma_{k,p} = pi_{k w1} (x) pi_{e1+...+ep}, built as the
/// convolution of two Freudenthal diagrams.
inline WeightDiagram tensor_sigma_diagram(LieType const& lie, int k, int p) {
  if (lie.family() == Family::A) throw Error("tensor_sigma_oracle: family must be B, C or D");
  int const n = lie.rank();
  if (k < 0) throw Error("tensor_sigma_oracle: k must be >= 0");
  if (p < 1 || p > n) throw Error("tensor_sigma_oracle: p must lie in 1.." + std::to_string(n));

  std::vector<std::int64_t> sym(static_cast<std::size_t>(n), 0);
  sym[0] = 2 * k;
  std::vector<std::int64_t> ext(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p; ++i) ext[static_cast<std::size_t>(i)] = 2;

  WeightDiagram const left = weight_diagram(lie, Weight::from_doubled(sym));
  WeightDiagram const right = weight_diagram(lie, Weight::from_doubled(ext));
  WeightDiagram out;
  out.label = "sigma " + lie.name() + " k=" + std::to_string(k) + " p=" + std::to_string(p);
  for (auto const& [x, mx] : left.entries) {
    for (auto const& [y, my] : right.entries) out.add(x + y, mx * my);
  }
  return out;
}

/// m_{sigma_{k,p}}(mu) = sum_eta m_{pi_{k w1}}(mu - eta) m_{pi_{e1+..+ep}}(eta).
inline BigInt tensor_sigma_oracle(LieType const& lie, int k, int p, Weight const& mu) {
  require_rank(lie, mu);
  if (!mu.is_integral()) {
    (void)tensor_sigma_diagram(lie, k, p);  // argument validation
    return 0;
  }
  return tensor_sigma_diagram(lie, k, p).at(mu);
}

/// Coefficients c_0..c_max_k of z^shift / (1 - z^2)^(n-1), by repeated
/// multiplication with the truncated geometric series in z^2.
inline std::vector<BigInt> genfunc_coefficients(int n, std::int64_t shift, int max_k) {
  if (n < 2) throw Error("genfunc: n must be >= 2");
  if (max_k < 0) return {};
  auto const len = static_cast<std::size_t>(max_k) + 1;
  std::vector<BigInt> series(len, 0);
  series[0] = 1;
  for (int f = 0; f < n - 1; ++f) {
    // multiply by 1 + z^2 + z^4 + ...: running sums with stride 2
    for (std::size_t i = 2; i < len; ++i) series[i] += series[i - 2];
  }
  std::vector<BigInt> out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    if (static_cast<std::int64_t>(i) >= shift) out[i] = series[i - static_cast<std::size_t>(shift)];
  }
  return out;
}

using SymPowerSource = std::function<BigInt(int k)>;

/// Checks sum_k m_{pi_{k w1}}(mu) z^k = z^{|mu|} / (1 - z^2)^(n-1) in type D_n
/// for k <= max_k. `source` supplies m_{pi_{k w1}}(mu); by default Freudenthal.
inline bool genfunc_check(int n, Weight const& mu, int max_k, SymPowerSource source = {}) {
  LieType const lie(Family::D, n);
  if (!is_G_integral(lie, mu)) throw Error("genfunc_check: weight must be G-integral");
  if (!source) {
    source = [&](int k) {
      std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
      d[0] = 2 * k;
      return freudenthal(lie, Weight::from_doubled(std::move(d)), mu);
    };
  }
  auto const coeffs = genfunc_coefficients(n, one_norm(mu).as_int(), max_k);
  for (int k = 0; k <= max_k; ++k) {
    if (source(k) != coeffs[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

}  // namespace fundstring
