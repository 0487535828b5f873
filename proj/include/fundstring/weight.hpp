#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fundstring {

/// Raised for every contract violation: bad ranks, cosets, labels, ranges.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact element of (1/2)Z, stored as twice its value.
struct HalfInteger {
  std::int64_t twice = 0;

  static constexpr HalfInteger from_int(std::int64_t v) noexcept { return {2 * v}; }

  constexpr bool is_integer() const noexcept { return twice % 2 == 0; }
  /// Only meaningful when is_integer().
  constexpr std::int64_t as_int() const noexcept { return twice / 2; }

  constexpr auto operator<=>(HalfInteger const&) const = default;

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

enum class Family { A, B, C, D };

inline char family_char(Family f) noexcept {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      default: break;
    }
  }
  throw Error("family must be one of A, B, C, D (got '" + std::string(s) + "')");
}

/// A classical Lie algebra: A_n (n >= 1) or B_n, C_n, D_n (n >= 2).
/// D_2 = so(4) is non-simple and still accepted.
class LieType {
 public:
  LieType(Family family, int rank) : family_(family), rank_(rank) {
    int const min_rank = family == Family::A ? 1 : 2;
    if (rank < min_rank) {
      throw Error(std::string("rank of ") + family_char(family) + " must be >= " +
                  std::to_string(min_rank) + " (got " + std::to_string(rank) + ")");
    }
  }

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  /// Number of epsilon coordinates. Type A lives in the ambient R^{n+1}.
  int ambient_dim() const noexcept { return family_ == Family::A ? rank_ + 1 : rank_; }

  std::string name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

  bool operator==(LieType const&) const = default;

 private:
  Family family_;
  int rank_;
};

/// A weight in epsilon coordinates. Coordinates are all integers or all
/// half-odd-integers; they are stored doubled so arithmetic stays in Z.
class Weight {
 public:
  static Weight from_doubled(std::vector<std::int64_t> doubled) {
    if (doubled.empty()) throw Error("weight must have at least one coordinate");
    bool const odd = (doubled.front() % 2) != 0;
    for (auto v : doubled) {
      if (((v % 2) != 0) != odd) {
        throw Error("mixed cosets: coordinates must be all integers or all half-odd-integers");
      }
    }
    Weight w;
    w.doubled_ = std::move(doubled);
    return w;
  }

  static Weight from_ints(std::span<std::int64_t const> coords) {
    std::vector<std::int64_t> d(coords.begin(), coords.end());
    for (auto& v : d) v *= 2;
    return from_doubled(std::move(d));
  }

  static Weight from_ints(std::initializer_list<std::int64_t> coords) {
    return from_ints(std::span<std::int64_t const>(coords.begin(), coords.size()));
  }

  static Weight zero(std::size_t rank) { return from_doubled(std::vector<std::int64_t>(rank, 0)); }

  /// Parses `2,-1,0` or `1/2,1/2,-1/2`. Denominators other than 1 and 2 and
  /// mixed cosets are rejected.
  static Weight parse(std::string_view text);

  std::size_t rank() const noexcept { return doubled_.size(); }
  std::span<std::int64_t const> doubled() const noexcept { return doubled_; }
  HalfInteger operator[](std::size_t i) const noexcept { return {doubled_[i]}; }

  /// True on the integer coset.
  bool is_integral() const noexcept { return doubled_.front() % 2 == 0; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < doubled_.size(); ++i) {
      if (i) out += ',';
      out += HalfInteger{doubled_[i]}.to_string();
    }
    return out;
  }

  std::vector<std::string> coordinate_strings() const {
    std::vector<std::string> out;
    out.reserve(doubled_.size());
    for (auto v : doubled_) out.push_back(HalfInteger{v}.to_string());
    return out;
  }

  Weight operator+(Weight const& o) const { return combine(o, 1); }
  Weight operator-(Weight const& o) const { return combine(o, -1); }

  auto operator<=>(Weight const&) const = default;
  bool operator==(Weight const&) const = default;

 private:
  Weight() = default;

  Weight combine(Weight const& o, std::int64_t sign) const {
    if (o.rank() != rank()) throw Error("rank mismatch in weight arithmetic");
    std::vector<std::int64_t> d(doubled_);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += sign * o.doubled_[i];
    return from_doubled(std::move(d));
  }

  std::vector<std::int64_t> doubled_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("cannot parse weight coordinate '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace detail

inline Weight Weight::parse(std::string_view text) {
  std::vector<std::int64_t> doubled;
  std::size_t start = 0;
  while (true) {
    auto const comma = text.find(',', start);
    auto const token = detail::trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    auto const slash = token.find('/');
    if (slash == std::string_view::npos) {
      doubled.push_back(2 * detail::parse_int(token, token));
    } else {
      auto const num = detail::parse_int(token.substr(0, slash), token);
      auto const den = detail::parse_int(token.substr(slash + 1), token);
      if (den == 1) {
        doubled.push_back(2 * num);
      } else if (den == 2) {
        doubled.push_back(num);
      } else {
        throw Error("weight coordinate '" + std::string(token) + "' must have denominator 1 or 2");
      }
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return from_doubled(std::move(doubled));
}

inline void require_rank(LieType const& lie, Weight const& mu) {
  if (static_cast<int>(mu.rank()) != lie.ambient_dim()) {
    throw Error("rank mismatch: " + lie.name() + " expects " + std::to_string(lie.ambient_dim()) +
                " coordinates, weight has " + std::to_string(mu.rank()));
  }
}

/// Sum of absolute values of the coordinates.
inline HalfInteger one_norm(Weight const& mu) noexcept {
  std::int64_t s = 0;
  for (auto v : mu.doubled()) s += v < 0 ? -v : v;
  return {s};
}

inline int zero_count(Weight const& mu) noexcept {
  return static_cast<int>(std::count(mu.doubled().begin(), mu.doubled().end(), 0));
}

inline int neg_count(Weight const& mu) noexcept {
  return static_cast<int>(std::count_if(mu.doubled().begin(), mu.doubled().end(), [](auto v) { return v < 0; }));
}

/// Membership in the lattice of the compact classical group: integer
/// coordinates for every family (SO(m), Sp(n), SU(n+1)).
inline bool is_G_integral(LieType const& lie, Weight const& mu) {
  require_rank(lie, mu);
  return mu.is_integral();
}

/// The dominant weight in the Weyl orbit of mu.
///   A: coordinates non-increasing.
///   B, C: absolute values non-increasing.
///   D: a_1 >= ... >= a_{n-1} >= |a_n|, the last sign carrying the parity of
///      negative entries when no coordinate is zero.
inline Weight dominant_representative(LieType const& lie, Weight const& mu) {
  require_rank(lie, mu);
  std::vector<std::int64_t> d(mu.doubled().begin(), mu.doubled().end());
  if (lie.family() == Family::A) {
    std::sort(d.begin(), d.end(), std::greater<>());
    return Weight::from_doubled(std::move(d));
  }
  int const neg = neg_count(mu);
  for (auto& v : d) v = v < 0 ? -v : v;
  std::sort(d.begin(), d.end(), std::greater<>());
  if (lie.family() == Family::D && (neg % 2) == 1 && d.back() != 0) d.back() = -d.back();
  return Weight::from_doubled(std::move(d));
}

inline bool is_dominant(LieType const& lie, Weight const& mu) { return dominant_representative(lie, mu) == mu; }

/// Representative of a type-A weight modulo (1,...,1) whose coordinates are
/// non-negative and sum to k + p. Accepts n coordinates (a_{n+1} = 0 implied)
/// or n + 1 ambient coordinates. Empty when no such representative exists,
/// i.e. the multiplicity is zero.
inline std::optional<Weight> normalize_A(int n, int k, int p, Weight const& mu) {
  if (n < 1) throw Error("normalize_A: n must be >= 1");
  std::vector<std::int64_t> d(mu.doubled().begin(), mu.doubled().end());
  if (static_cast<int>(d.size()) == n) {
    d.push_back(0);
  } else if (static_cast<int>(d.size()) != n + 1) {
    throw Error("rank mismatch: A" + std::to_string(n) + " weights take " + std::to_string(n) + " or " +
                std::to_string(n + 1) + " coordinates, got " + std::to_string(d.size()));
  }
  if (!mu.is_integral()) return std::nullopt;
  std::int64_t sum = 0;
  for (auto v : d) sum += v / 2;
  std::int64_t const diff = static_cast<std::int64_t>(k) + p - sum;
  if (diff % (n + 1) != 0) return std::nullopt;
  std::int64_t const shift = diff / (n + 1);
  for (auto& v : d) {
    v += 2 * shift;
    if (v < 0) return std::nullopt;
  }
  return Weight::from_doubled(std::move(d));
}

}  // namespace fundstring
