#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace skelsig {

__extension__ using int128 = __int128;

/// Exact fraction over 64-bit integers.
///
/// Values are kept in lowest terms with a strictly positive denominator, so
/// two rationals are equal iff their fields are equal. Arithmetic forms its
/// intermediates in 128 bits; a reduced result that does not fit back into
/// 64 bits throws std::overflow_error rather than wrapping.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;
  std::int64_t ceil() const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
  static Rational reduce(int128 numerator, int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational abs(const Rational& value);

}  // namespace skelsig
