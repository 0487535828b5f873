#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "combinatorics.hpp"
#include "weight.hpp"

namespace fundstring {

/// Which member of a p-fundamental string a label names.
enum class Variant {
  String,       ///< pi_{k,p}: highest weight k*w1 + (e1+...+ep); reducible for D with p = n
  SpinPlus,     ///< k*w1 + w_n (B and D)
  SpinMinus,    ///< k*w1 + w_{n-1} (D only)
  SplitTop,     ///< k*w1 + 2w_n, one half of pi_{k,n} in type D
  SplitBottom,  ///< k*w1 + 2w_{n-1}, the other half
};

inline std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::String: return "string";
    case Variant::SpinPlus: return "spin+";
    case Variant::SpinMinus: return "spin-";
    case Variant::SplitTop: return "split+";
    case Variant::SplitBottom: return "split-";
  }
  return "?";
}

/// Representation in a p-fundamental string: (type, k, p) plus a variant tag.
/// Only valid combinations can be constructed.
class StringLabel {
 public:
  StringLabel(LieType lie, int k, int p, Variant variant = Variant::String)
      : lie_(lie), k_(k), p_(p), variant_(variant) {
    validate();
  }

  static StringLabel spin_plus(LieType lie, int k) { return {lie, k, lie.rank(), Variant::SpinPlus}; }
  static StringLabel spin_minus(LieType lie, int k) { return {lie, k, lie.rank() - 1, Variant::SpinMinus}; }

  LieType const& lie() const noexcept { return lie_; }
  int k() const noexcept { return k_; }
  int p() const noexcept { return p_; }
  Variant variant() const noexcept { return variant_; }

  std::string to_string() const {
    return lie_.name() + " k=" + std::to_string(k_) + " p=" + std::to_string(p_) + " " +
           std::string(variant_name(variant_));
  }

  bool operator==(StringLabel const&) const = default;

 private:
  void validate() const {
    int const n = lie_.rank();
    Family const f = lie_.family();
    if (k_ < 0) throw Error("k must be >= 0 (got " + std::to_string(k_) + ")");
    switch (variant_) {
      case Variant::String:
        if (p_ < 1 || p_ > n) {
          throw Error("p must lie in 1.." + std::to_string(n) + " for " + lie_.name() + " (got " +
                      std::to_string(p_) + ")");
        }
        break;
      case Variant::SpinPlus:
        if (f != Family::B && f != Family::D) throw Error("spin+ requires family B or D");
        if (p_ != n) throw Error("spin+ label must carry p = n");
        break;
      case Variant::SpinMinus:
        if (f != Family::D) throw Error("spin- requires family D");
        if (p_ != n - 1) throw Error("spin- label must carry p = n-1");
        break;
      case Variant::SplitTop:
      case Variant::SplitBottom:
        if (f != Family::D) throw Error("split variants require family D");
        if (p_ != n) throw Error("split variants require p = n");
        break;
    }
  }

  LieType lie_;
  int k_;
  int p_;
  Variant variant_;
};

/// Highest weights of the irreducible constituents of the labelled
/// representation, in epsilon coordinates (ambient n+1 coordinates for A).
/// Exactly one weight except for String with family D and p = n.
inline std::vector<Weight> highest_weights(StringLabel const& label) {
  int const dim = label.lie().ambient_dim();
  int const n = label.lie().rank();
  std::vector<std::int64_t> d(static_cast<std::size_t>(dim), 0);
  std::vector<Weight> out;
  switch (label.variant()) {
    case Variant::String:
      for (int i = 0; i < label.p(); ++i) d[static_cast<std::size_t>(i)] = 2;
      d[0] += 2 * label.k();
      out.push_back(Weight::from_doubled(d));
      if (label.lie().family() == Family::D && label.p() == n) {
        d.back() = -d.back();
        out.push_back(Weight::from_doubled(d));
      }
      break;
    case Variant::SpinPlus:
    case Variant::SpinMinus:
      std::fill(d.begin(), d.end(), 1);
      d[0] += 2 * label.k();
      if (label.variant() == Variant::SpinMinus) d.back() = -1;
      out.push_back(Weight::from_doubled(d));
      break;
    case Variant::SplitTop:
    case Variant::SplitBottom:
      std::fill(d.begin(), d.end(), 2);
      d[0] += 2 * label.k();
      if (label.variant() == Variant::SplitBottom) d.back() = -2;
      out.push_back(Weight::from_doubled(d));
      break;
  }
  return out;
}

/// Finite table weight -> multiplicity (zero entries are never stored).
struct WeightDiagram {
  std::string label;
  std::map<Weight, BigInt> entries;

  BigInt total() const {
    BigInt t = 0;
    for (auto const& [w, m] : entries) t += m;
    return t;
  }

  BigInt at(Weight const& mu) const {
    auto it = entries.find(mu);
    return it == entries.end() ? BigInt(0) : it->second;
  }

  void add(Weight const& mu, BigInt const& m) {
    if (m == 0) return;
    auto [it, inserted] = entries.try_emplace(mu, m);
    if (!inserted) {
      it->second += m;
      if (it->second == 0) entries.erase(it);
    }
  }
};

}  // namespace fundstring
