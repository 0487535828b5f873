#pragma once

// Closed weight-multiplicity formulas for the representations
// pi_{k w1 + w_p} of the classical Lie algebras, together with the fusion
// rule and virtual-ring inversion they are assembled from.
//
// Notation used throughout: n is the rank, |mu| the one-norm, Z(mu) the
// number of zero coordinates, and pi_{k,p} the representation with highest
// weight k*e1 + (e1+...+ep) (for D_n with p = n, the sum of the two
// irreducibles k w1 + 2w_{n-1} and k w1 + 2w_n).

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "label.hpp"
#include "orbit.hpp"
#include "weight.hpp"

namespace fundstring {

/// One term sign * sigma_{k,p} of the virtual-ring expansion of pi_{k,p}.
/// Terms with k < 0 vanish; sigma_{k,0} is pi_{k w1}.
struct SignedSigmaTerm {
  int sign;
  int k;
  int p;

  bool operator==(SignedSigmaTerm const&) const = default;
};

/// pi_{k,p} = sum_{j=1}^{p} (-1)^{j-1} sum_{i=0}^{j-1} sigma_{k+j-2i, p-j}
/// in the representation ring. Terms are listed in (j, i) order, including
/// those with a negative first index.
inline std::vector<SignedSigmaTerm> string_decomposition(int k, int p) {
  if (k < 0) throw Error("string_decomposition: k must be >= 0");
  if (p < 1) throw Error("string_decomposition: p must be >= 1");
  std::vector<SignedSigmaTerm> out;
  for (int j = 1; j <= p; ++j) {
    int const sign = (j % 2 == 1) ? 1 : -1;
    for (int i = 0; i < j; ++i) out.push_back({sign, k + j - 2 * i, p - j});
  }
  return out;
}

/// A summand coefficient * pi_{k,p} of sigma_{k,p}. The pair (k, p) = (-1, 1)
/// names the trivial representation (highest weight (k+1) e1 = 0).
struct FusionSummand {
  int coefficient;
  int k;
  int p;

  bool is_trivial() const noexcept { return k == -1 && p == 1; }
  bool operator==(FusionSummand const&) const = default;
};

/// sigma_{k,p} = pi_{k,p} + pi_{k-1,p+1} + pi_{k-2,p} + pi_{k-1,p-1}, 1 <= p <= n-1.
///
/// At small k the right-hand side only holds after straightening each term
/// by the dotted Weyl action: pi_{a,0} = 0, pi_{-1,1} is the trivial
/// representation, pi_{-2,2} is minus the trivial representation, and every
/// other term with a negative first index is zero. Opposite terms cancel.
inline std::vector<FusionSummand> sigma_fusion(LieType const& lie, int k, int p) {
  if (lie.family() == Family::A) throw Error("sigma_fusion: family must be B, C or D");
  int const n = lie.rank();
  if (k < 0) throw Error("sigma_fusion: k must be >= 0");
  if (p < 1 || p > n - 1) throw Error("sigma_fusion: p must lie in 1.." + std::to_string(n - 1));

  std::vector<FusionSummand> out;
  auto add = [&out](int coefficient, int a, int b) {
    for (auto it = out.begin(); it != out.end(); ++it) {
      if (it->k == a && it->p == b) {
        it->coefficient += coefficient;
        if (it->coefficient == 0) out.erase(it);
        return;
      }
    }
    out.push_back({coefficient, a, b});
  };
  std::pair<int, int> const terms[] = {{k, p}, {k - 1, p + 1}, {k - 2, p}, {k - 1, p - 1}};
  for (auto [a, b] : terms) {
    if (b == 0) continue;
    if (a >= 0) {
      add(1, a, b);
    } else if (a == -1 && b == 1) {
      add(1, -1, 1);
    } else if (a == -2 && b == 2) {
      add(-1, -1, 1);
    }
  }
  return out;
}

namespace detail {

inline void require_bcd(LieType const& lie, char const* op) {
  if (lie.family() == Family::A) throw Error(std::string(op) + ": family A is not supported (use mult_string)");
}

/// Lazily filled table of binom(x, bottom) for x in a window of consecutive
/// integers; the innermost sums of every formula draw from a few dozen tops.
class BinomColumn {
 public:
  BinomColumn(std::int64_t bottom, std::int64_t lo, std::int64_t hi)
      : bottom_(bottom), lo_(lo), values_(static_cast<std::size_t>(hi - lo + 1)) {}

  BigInt const& operator()(std::int64_t top) {
    auto& slot = values_.at(static_cast<std::size_t>(top - lo_));
    if (!slot) slot = binom(top, bottom_);
    return *slot;
  }

 private:
  std::int64_t bottom_;
  std::int64_t lo_;
  std::vector<std::optional<BigInt>> values_;
};

/// sum_{beta=0}^{rem} 2^{rem-beta} C(n-Z, beta) C(Z, rem-beta)
///   sum_{alpha=0}^{beta} C(beta, alpha) inner(alpha)
/// The weight shell of e1+...+e_rem-type weights split by zero pattern.
template <typename Inner>
BigInt shell_sum(int n, int zeros, int rem, Inner&& inner) {
  BigInt total = 0;
  for (int beta = 0; beta <= rem; ++beta) {
    BigInt const count = pow2(rem - beta) * binom(n - zeros, beta) * binom(zeros, rem - beta);
    if (count == 0) continue;
    BigInt acc = 0;
    for (int alpha = 0; alpha <= beta; ++alpha) acc += binom(beta, alpha) * inner(alpha);
    total += count * acc;
  }
  return total;
}

/// Non-negative integer r with k + p - |mu| = 2r, if any.
inline std::optional<std::int64_t> half_excess(std::int64_t k, std::int64_t p, Weight const& mu) {
  std::int64_t const e = k + p - one_norm(mu).as_int();
  if (e < 0 || e % 2 != 0) return std::nullopt;
  return e / 2;
}

/// sigma_{k,p} with 0 <= p <= n-1 and any k (zero for k < 0).
inline BigInt sigma_term(LieType const& lie, std::int64_t k, int p, Weight const& mu) {
  if (k < 0 || !mu.is_integral()) return 0;
  int const n = lie.rank();
  int const zeros = zero_count(mu);

  if (lie.family() == Family::B) {
    std::int64_t const r = k + p - one_norm(mu).as_int();
    std::int64_t const even_part = floor_div(r, 2);
    std::int64_t const odd_part = floor_div(r + 1, 2);
    BigInt total = 0;
    for (int t = 0; t <= p / 2; ++t) {
      total += binom(n - p + 2 * t, t) * shell_sum(n, zeros, p - 2 * t, [&](int alpha) {
                 return binom(even_part - p + alpha + t + n - 1, n - 1);
               });
    }
    for (int t = 0; 2 * t <= p - 1; ++t) {
      total += binom(n - p + 1 + 2 * t, t) * shell_sum(n, zeros, p - 1 - 2 * t, [&](int alpha) {
                 return binom(odd_part - p + alpha + t + n - 1, n - 1);
               });
    }
    return total;
  }

  auto const r = half_excess(k, p, mu);
  if (!r) return 0;
  int const drop = lie.family() == Family::C ? 1 : 2;
  BigInt total = 0;
  for (int t = 0; t <= p / 2; ++t) {
    BigInt const prefactor = lie.family() == Family::C ? ballot(n - p, t) : binom(n - p + 2 * t, t);
    total += prefactor * shell_sum(n, zeros, p - 2 * t, [&](int alpha) {
               return binom(*r - p + alpha + t + n - drop, n - drop);
             });
  }
  return total;
}

}  // namespace detail

/// Multiplicity of mu in pi_{k w1} (harmonic part of Sym^k for B and D,
/// all of Sym^k for C). Zero off the integer lattice.
inline BigInt mult_sym_power(LieType const& lie, int k, Weight const& mu) {
  detail::require_bcd(lie, "mult_sym_power");
  require_rank(lie, mu);
  if (k < 0 || !mu.is_integral()) return 0;
  int const n = lie.rank();
  std::int64_t const norm = one_norm(mu).as_int();
  switch (lie.family()) {
    case Family::B:
      return binom(floor_div(k - norm, 2) + n - 1, n - 1);
    case Family::C:
    case Family::D: {
      auto const r = detail::half_excess(k, 0, mu);
      if (!r) return 0;
      return lie.family() == Family::C ? binom(*r + n - 1, n - 1) : binom(*r + n - 2, n - 2);
    }
    case Family::A:
      break;
  }
  return 0;
}

/// Multiplicity of mu in pi_{w_p} for C, and in pi_{e1+...+ep} = Lambda^p of
/// the standard representation for B and D.
inline BigInt mult_fund_exterior(LieType const& lie, int p, Weight const& mu) {
  detail::require_bcd(lie, "mult_fund_exterior");
  require_rank(lie, mu);
  int const n = lie.rank();
  if (p < 1 || p > n) throw Error("mult_fund_exterior: p must lie in 1.." + std::to_string(n));
  if (!mu.is_integral()) return 0;
  for (auto v : mu.doubled()) {
    if (v > 2 || v < -2) return 0;
  }
  std::int64_t const norm = one_norm(mu).as_int();
  if (lie.family() == Family::B) {
    std::int64_t const r = p - norm;
    if (r < 0) return 0;
    return binom(n - p + r, r / 2);
  }
  auto const r = detail::half_excess(0, p, mu);
  if (!r) return 0;
  if (lie.family() == Family::C) return ballot(n - p, *r);
  return binom(n - p + 2 * *r, *r);
}

/// Multiplicity of mu in sigma_{k,p} = pi_{k w1} (x) pi_{e1+...+ep}, 1 <= p <= n-1.
inline BigInt mult_sigma(LieType const& lie, int k, int p, Weight const& mu) {
  detail::require_bcd(lie, "mult_sigma");
  require_rank(lie, mu);
  int const n = lie.rank();
  if (p < 1 || p > n - 1) throw Error("mult_sigma: p must lie in 1.." + std::to_string(n - 1));
  if (k < 0) throw Error("mult_sigma: k must be >= 0");
  return detail::sigma_term(lie, k, p, mu);
}

namespace detail {

/// Types C and D: closed string multiplicity, nested sums in the order j, t, beta, alpha, i.
inline BigInt string_CD(LieType const& lie, int k, int p, Weight const& mu) {
  if (!mu.is_integral()) return 0;
  auto const r = half_excess(k, p, mu);
  if (!r) return 0;
  int const n = lie.rank();
  int const zeros = zero_count(mu);
  bool const is_c = lie.family() == Family::C;
  int const drop = is_c ? 1 : 2;
  BinomColumn inner(n - drop, *r - 2 * p + n - drop - 1, *r + 2 * p + n);

  BigInt total = 0;
  for (int j = 1; j <= p; ++j) {
    BigInt block = 0;
    for (int t = 0; 2 * t <= p - j; ++t) {
      BigInt const prefactor = is_c ? ballot(n - p + j, t) : binom(n - p + j + 2 * t, t);
      block += prefactor * shell_sum(n, zeros, p - j - 2 * t, [&](int alpha) {
                 BigInt s = 0;
                 for (int i = 0; i < j; ++i) s += inner(*r - i - p + alpha + t + j + n - drop);
                 return s;
               });
    }
    if (j % 2 == 1) {
      total += block;
    } else {
      total -= block;
    }
  }
  return total;
}

/// Type B closed string multiplicity: two alternating blocks, floors of r/2 and (r+1)/2.
inline BigInt string_B(LieType const& lie, int k, int p, Weight const& mu) {
  if (!mu.is_integral()) return 0;
  int const n = lie.rank();
  int const zeros = zero_count(mu);
  std::int64_t const r = static_cast<std::int64_t>(k) + p - one_norm(mu).as_int();
  if (r < 0) return 0;  // every innermost binomial vanishes
  std::int64_t const even_part = floor_div(r, 2);
  std::int64_t const odd_part = floor_div(r + 1, 2);
  BinomColumn inner(n - 1, even_part - 2 * p + n - 2, odd_part + 2 * p + n);

  BigInt total = 0;
  for (int j = 1; j <= p; ++j) {
    BigInt block = 0;
    for (int t = 0; 2 * t <= p - j; ++t) {
      block += binom(n - p + j + 2 * t, t) * shell_sum(n, zeros, p - j - 2 * t, [&](int alpha) {
                 BigInt s = 0;
                 for (int i = 0; i < j; ++i) s += inner(even_part - i - p + j + alpha + t + n - 1);
                 return s;
               });
    }
    for (int t = 0; 2 * t <= p - j - 1; ++t) {
      block += binom(n - p + j + 2 * t + 1, t) * shell_sum(n, zeros, p - j - 2 * t - 1, [&](int alpha) {
                 BigInt s = 0;
                 for (int i = 0; i < j; ++i) s += inner(odd_part - i - p + j + alpha + t + n - 1);
                 return s;
               });
    }
    if (j % 2 == 1) {
      total += block;
    } else {
      total -= block;
    }
  }
  return total;
}

/// Type A: mu is normalized to non-negative coordinates summing to k + p;
/// the prefix condition is checked on the coordinates in the given order.
inline BigInt string_A(LieType const& lie, int k, int p, Weight const& mu) {
  int const n = lie.rank();
  auto const normalized = normalize_A(n, k, p, mu);
  if (!normalized) return 0;
  std::int64_t prefix = 0;
  for (int j = 1; j <= p; ++j) {
    prefix += (*normalized)[static_cast<std::size_t>(j - 1)].as_int();
    if (prefix > k + j) return 0;
  }
  return binom(n - zero_count(*normalized), p - 1);
}

}  // namespace detail

/// Multiplicity of mu in pi_{k,p} (label variant String). For A_n the weight
/// may be given with n or n + 1 coordinates.
inline BigInt mult_string(StringLabel const& label, Weight const& mu) {
  if (label.variant() != Variant::String) throw Error("mult_string: label variant must be string");
  LieType const& lie = label.lie();
  if (lie.family() == Family::A) {
    if (static_cast<int>(mu.rank()) != lie.rank() && static_cast<int>(mu.rank()) != lie.rank() + 1) {
      require_rank(lie, mu);
    }
    return detail::string_A(lie, label.k(), label.p(), mu);
  }
  require_rank(lie, mu);
  if (lie.family() == Family::B) return detail::string_B(lie, label.k(), label.p(), mu);
  return detail::string_CD(lie, label.k(), label.p(), mu);
}

/// Spin strings: k w1 + w_n (B, D) and k w1 + w_{n-1} (D).
/// With r = k + n/2 - |mu|:
///   B:       C(r+n-1, n-1)
///   D spin+: C(r+n-2, n-2) when r >= 0 and neg(mu) = r (mod 2)
///   D spin-: C(r+n-2, n-2) when r >= 0 and neg(mu) = r+1 (mod 2)
/// and zero on integer weights.
inline BigInt mult_spin(StringLabel const& label, Weight const& mu) {
  if (label.variant() != Variant::SpinPlus && label.variant() != Variant::SpinMinus) {
    throw Error("mult_spin: label variant must be spin+ or spin-");
  }
  LieType const& lie = label.lie();
  require_rank(lie, mu);
  if (mu.is_integral()) return 0;
  int const n = lie.rank();
  std::int64_t const twice_r = 2 * static_cast<std::int64_t>(label.k()) + n - one_norm(mu).twice;
  if (twice_r % 2 != 0) throw std::logic_error("mult_spin: r(mu) is not an integer on the spin coset");
  std::int64_t const r = twice_r / 2;
  if (lie.family() == Family::B) return binom(r + n - 1, n - 1);
  if (r < 0) return 0;
  std::int64_t const want = label.variant() == Variant::SpinPlus ? r : r + 1;
  if ((neg_count(mu) - want) % 2 != 0) return 0;
  return binom(r + n - 2, n - 2);
}

/// Multiplicities of mu in the two halves of pi_{k,n} for D_n, returned as
/// (k w1 + 2w_{n-1}, k w1 + 2w_n).
inline std::pair<BigInt, BigInt> split_D_top(int n, int k, Weight const& mu) {
  LieType const lie(Family::D, n);
  require_rank(lie, mu);
  if (!mu.is_integral()) return {0, 0};
  BigInt const whole = mult_string(StringLabel(lie, k, n), mu);
  std::int64_t const norm = one_norm(mu).as_int();
  std::int64_t const top = static_cast<std::int64_t>(k) + n;
  if (norm > top) return {0, 0};
  if (norm == top) {
    if (neg_count(mu) % 2 == 0) return {0, whole};
    return {whole, 0};
  }
  if (whole % 2 != 0) {
    throw std::logic_error("split_D_top: odd multiplicity " + whole.str() + " at " + mu.to_string() +
                           " cannot be halved");
  }
  BigInt const half = whole / 2;
  return {half, half};
}

/// Multiplicity for any label variant.
inline BigInt multiplicity(StringLabel const& label, Weight const& mu) {
  switch (label.variant()) {
    case Variant::String: return mult_string(label, mu);
    case Variant::SpinPlus:
    case Variant::SpinMinus: return mult_spin(label, mu);
    case Variant::SplitTop: return split_D_top(label.lie().rank(), label.k(), mu).second;
    case Variant::SplitBottom: return split_D_top(label.lie().rank(), label.k(), mu).first;
  }
  return 0;
}

/// Multiplicity of mu in a fusion summand, without its coefficient.
inline BigInt summand_multiplicity(LieType const& lie, FusionSummand const& s, Weight const& mu) {
  if (s.is_trivial()) {
    require_rank(lie, mu);
    return mu == Weight::zero(mu.rank()) ? 1 : 0;
  }
  return mult_string(StringLabel(lie, s.k, s.p), mu);
}

namespace detail {

inline void enumerate_non_increasing(int slots, std::int64_t max_part, std::int64_t budget, bool exact,
                                     std::vector<std::int64_t>& prefix,
                                     std::function<void(std::vector<std::int64_t> const&)> const& emit) {
  if (slots == 0) {
    if (!exact || budget == 0) emit(prefix);
    return;
  }
  std::int64_t const hi = std::min(max_part, budget);
  for (std::int64_t v = hi; v >= 0; --v) {
    if (exact && v * slots < budget) break;
    prefix.push_back(v);
    enumerate_non_increasing(slots - 1, v, budget - v, exact, prefix, emit);
    prefix.pop_back();
  }
}

/// Dominant weights that can occur in the labelled representation.
inline std::vector<Weight> dominant_candidates(StringLabel const& label) {
  LieType const& lie = label.lie();
  int const n = lie.rank();
  int const k = label.k();
  std::vector<Weight> out;
  std::vector<std::int64_t> prefix;

  if (lie.family() == Family::A) {
    enumerate_non_increasing(n + 1, k + 1, k + label.p(), true, prefix, [&](auto const& parts) {
      std::vector<std::int64_t> d(parts);
      for (auto& v : d) v *= 2;
      out.push_back(Weight::from_doubled(std::move(d)));
    });
    return out;
  }

  bool const spin = label.variant() == Variant::SpinPlus || label.variant() == Variant::SpinMinus;
  // Spin weights are (2b_i + 1)/2 with sum b_i <= k; others have |mu| <= k + p.
  std::int64_t const budget = spin ? k : k + label.p();
  std::int64_t const max_part = spin ? k : k + 1;
  enumerate_non_increasing(n, max_part, budget, false, prefix, [&](auto const& parts) {
    std::vector<std::int64_t> d(parts);
    for (auto& v : d) v = spin ? 2 * v + 1 : 2 * v;
    if (lie.family() == Family::D && d.back() != 0) {
      out.push_back(Weight::from_doubled(d));
      d.back() = -d.back();
    }
    out.push_back(Weight::from_doubled(std::move(d)));
  });
  return out;
}

}  // namespace detail

/// Streams every weight of the labelled representation with its closed-form
/// multiplicity, ordered by dominant representative and then coordinates.
inline void for_each_closed_weight(StringLabel const& label,
                                   std::function<void(Weight const&, BigInt const&)> const& visit) {
  auto candidates = detail::dominant_candidates(label);
  std::sort(candidates.begin(), candidates.end());
  for (auto const& dom : candidates) {
    BigInt const m = multiplicity(label, dom);
    if (m == 0) continue;
    for (auto const& w : weyl_orbit(label.lie(), dom)) visit(w, m);
  }
}

inline WeightDiagram closed_weight_diagram(StringLabel const& label) {
  WeightDiagram out;
  out.label = label.to_string();
  for_each_closed_weight(label, [&out](Weight const& w, BigInt const& m) { out.entries.emplace(w, m); });
  return out;
}

}  // namespace fundstring
