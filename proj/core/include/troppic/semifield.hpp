#pragma once

// Idempotent semifields used as coefficient domains.
//
// TropRat is max-plus over Q with an adjoined bottom element: a (+) b is
// max(a, b), a (x) b is a + b, the additive identity is -inf and the
// multiplicative identity is the rational 0. BoolSF is the two-element
// Boolean semifield.

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "troppic/intlin.hpp"

namespace troppic {

class TropRat {
 public:
  /// Bottom element (-inf).
  constexpr TropRat() = default;
  explicit TropRat(Rational v) : value_(std::move(v)) {}
  explicit TropRat(long long v) : value_(Rational(v)) {}

  static TropRat zero() { return TropRat(); }
  static TropRat one() { return TropRat(Rational(0)); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  /// The underlying rational; throws DomainError on bottom.
  const Rational& value() const;

  /// "p/q" in lowest terms ("p" when q = 1), or "-inf".
  std::string str() const;
  static TropRat parse(std::string_view text);

  friend bool operator==(const TropRat&, const TropRat&) = default;
  /// Bottom compares below every rational.
  friend std::strong_ordering operator<=>(const TropRat& a, const TropRat& b);

 private:
  std::optional<Rational> value_;
};

TropRat add(const TropRat& a, const TropRat& b);
TropRat mul(const TropRat& a, const TropRat& b);
TropRat inv(const TropRat& a);
inline bool is_zero(const TropRat& a) { return a.is_bottom(); }

class BoolSF {
 public:
  constexpr BoolSF() = default;
  constexpr explicit BoolSF(bool v) : value_(v) {}

  static constexpr BoolSF zero() { return BoolSF(false); }
  static constexpr BoolSF one() { return BoolSF(true); }

  constexpr bool value() const noexcept { return value_; }
  std::string str() const { return value_ ? "1" : "0"; }
  static BoolSF parse(std::string_view text);

  friend constexpr bool operator==(BoolSF, BoolSF) = default;
  friend constexpr auto operator<=>(BoolSF, BoolSF) = default;

 private:
  bool value_ = false;
};

constexpr BoolSF add(BoolSF a, BoolSF b) { return BoolSF(a.value() || b.value()); }
constexpr BoolSF mul(BoolSF a, BoolSF b) { return BoolSF(a.value() && b.value()); }
BoolSF inv(BoolSF a);
constexpr bool is_zero(BoolSF a) { return !a.value(); }

template <class K>
concept IdempotentSemifield = std::regular<K> && requires(const K& a, const K& b) {
  { K::zero() } -> std::same_as<K>;
  { K::one() } -> std::same_as<K>;
  { add(a, b) } -> std::same_as<K>;
  { mul(a, b) } -> std::same_as<K>;
  { inv(a) } -> std::same_as<K>;
  { is_zero(a) } -> std::same_as<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { K::parse(std::string_view{}) } -> std::same_as<K>;
};

static_assert(IdempotentSemifield<TropRat>);
static_assert(IdempotentSemifield<BoolSF>);

}  // namespace troppic
