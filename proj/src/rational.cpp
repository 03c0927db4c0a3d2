#include "skelsig/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace skelsig {

namespace {

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = reduce(numerator, denominator);
}

Rational Rational::reduce(int128 numerator, int128 denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  int128 g = gcd128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  Rational out;
  out.num_ = narrow(numerator);
  out.den_ = narrow(denominator);
  return out;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  return reduce(-static_cast<int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  int128 n = static_cast<int128>(num_) * rhs.den_ + static_cast<int128>(rhs.num_) * den_;
  int128 d = static_cast<int128>(den_) * rhs.den_;
  return *this = reduce(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) {
  int128 n = static_cast<int128>(num_) * rhs.den_ - static_cast<int128>(rhs.num_) * den_;
  int128 d = static_cast<int128>(den_) * rhs.den_;
  return *this = reduce(n, d);
}

Rational& Rational::operator*=(const Rational& rhs) {
  return *this = reduce(static_cast<int128>(num_) * rhs.num_,
                        static_cast<int128>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = reduce(static_cast<int128>(num_) * rhs.den_,
                        static_cast<int128>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  int128 l = static_cast<int128>(lhs.num_) * rhs.den_;
  int128 r = static_cast<int128>(rhs.num_) * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

Rational abs(const Rational& value) {
  return value < Rational{0} ? -value : value;
}

}  // namespace skelsig
