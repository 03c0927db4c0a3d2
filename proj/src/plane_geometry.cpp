#include "skelsig/plane_geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "skelsig/arith.hpp"

namespace skelsig {

namespace {

void require_genus(std::int64_t sigma) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
}

void require_order(std::int64_t order) {
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("line coefficient overflow");
  return out;
}

std::string term(std::int64_t coeff, const char* symbol, bool leading) {
  std::ostringstream os;
  if (coeff == 0) return {};
  if (!leading) os << (coeff < 0 ? " - " : " + ");
  else if (coeff < 0) os << '-';
  std::int64_t mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) os << mag;
  os << symbol;
  return os.str();
}

}  // namespace

RationalLine::RationalLine(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0) throw std::invalid_argument("line needs a non-zero h or r coefficient");
  std::int64_t g = std::gcd(std::gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  a_ = a;
  b_ = b;
  c_ = c;
}

Rational RationalLine::residual(const RationalPoint& p) const {
  return Rational(a_) * p.h + Rational(b_) * p.r - Rational(c_);
}

Rational RationalLine::r_at(const Rational& h) const {
  if (b_ == 0) throw std::domain_error("vertical line has no r-value function");
  return (Rational(c_) - Rational(a_) * h) / Rational(b_);
}

Rational RationalLine::slope() const {
  if (b_ == 0) throw std::domain_error("vertical line has no slope");
  return Rational(-a_, b_);
}

std::string RationalLine::str() const {
  std::string lhs = term(a_, "h", true);
  lhs += term(b_, "r", lhs.empty());
  return lhs + " = " + std::to_string(c_);
}

std::optional<RationalPoint> intersect(const RationalLine& first, const RationalLine& second) {
  // Cramer's rule on a1 h + b1 r = c1, a2 h + b2 r = c2.
  Rational det = Rational(first.a()) * Rational(second.b()) - Rational(first.b()) * Rational(second.a());
  if (det == Rational(0)) return std::nullopt;
  Rational h = (Rational(first.c()) * Rational(second.b()) - Rational(first.b()) * Rational(second.c())) / det;
  Rational r = (Rational(first.a()) * Rational(second.c()) - Rational(first.c()) * Rational(second.a())) / det;
  return RationalPoint{h, r};
}

RationalLine lower_line(std::int64_t sigma, std::int64_t order) {
  require_genus(sigma);
  require_order(order);
  return RationalLine(2 * order, order - 1, 2 * sigma - 2 + 2 * order);
}

RationalLine upper_line(std::int64_t sigma, std::int64_t order) {
  require_genus(sigma);
  require_order(order);
  return RationalLine(4 * order, order, 4 * (order + sigma - 1));
}

RationalLine p_group_line(std::int64_t sigma, std::int64_t p, std::int64_t n) {
  require_genus(sigma);
  if (!is_prime(p)) throw std::invalid_argument("p_group_line: p must be prime");
  if (n < 1) throw std::invalid_argument("p_group_line: exponent must be >= 1");
  std::int64_t pn1 = 1;
  for (std::int64_t i = 1; i < n; ++i) pn1 = checked_mul(pn1, p);
  std::int64_t pn = checked_mul(pn1, p);
  return RationalLine(checked_mul(2, pn), checked_mul(p - 1, pn1), 2 * pn - 2 + 2 * sigma);
}

RationalPoint common_point(std::int64_t sigma) {
  require_genus(sigma);
  return {Rational(sigma), Rational(2 - 2 * sigma)};
}

bool TriangleRegion::contains(const RationalPoint& p) const {
  if (p.h < Rational(0) || p.h > apex.h || p.r < Rational(0)) return false;
  return lower.r_at(p.h) <= p.r && p.r <= upper.r_at(p.h);
}

TriangleRegion triangle(std::int64_t sigma, std::int64_t order) {
  RationalLine lower = lower_line(sigma, order);
  RationalLine upper = upper_line(sigma, order);
  RationalPoint apex{Rational(1) + Rational(sigma - 1, order), Rational(0)};
  if (!lower.contains(apex) || !upper.contains(apex)) {
    throw std::logic_error("triangle apex off its bounding lines");
  }
  return {sigma, order, lower, upper, apex};
}

bool GapRegion::contains_raw(const RationalPoint& p) const {
  if (p.h <= corner.h) return false;
  return boundary_upper.r_at(p.h) < p.r && p.r < boundary_lower.r_at(p.h);
}

bool GapRegion::contains(const RationalPoint& p) const {
  if (!contains_raw(p)) return false;
  return !(exception_line && exception_line->contains(p));
}

GapRegion gap(std::int64_t sigma, std::int64_t lower_index) {
  require_genus(sigma);
  const std::int64_t n = lower_index;
  if (n < 3) throw std::invalid_argument("gaps are defined for N >= 3");
  const bool skip = is_prime(n + 1);
  const std::int64_t upper_index = n + (skip ? 2 : 1);

  RationalPoint corner;
  if (!skip) {
    const std::int64_t den = (n - 2) * (n + 1);
    corner = {Rational((n - 1) * (n - 1) + sigma * (n - 3), den), Rational(4 * (sigma - 1), den)};
  } else {
    const std::int64_t den = n * n - 4;
    corner = {Rational(n * n - n + sigma * (n - 4), den), Rational(8 * (sigma - 1), den)};
  }

  GapRegion out{sigma,
                n,
                skip ? GapSpan::skip : GapSpan::next,
                lower_line(sigma, n),
                upper_line(sigma, upper_index),
                corner,
                std::nullopt};
  if (skip) out.exception_line = p_group_line(sigma, n + 1, 1);
  if (!out.boundary_lower.contains(corner) || !out.boundary_upper.contains(corner)) {
    throw std::logic_error("gap corner off its bounding lines");
  }
  return out;
}

std::vector<SkeletalSignature> integer_points(const TriangleRegion& region) {
  std::vector<SkeletalSignature> out;
  for (std::int64_t h = 0; Rational(h) <= region.apex.h; ++h) {
    const std::int64_t lo = std::max<std::int64_t>(0, region.lower.r_at(Rational(h)).ceil());
    const std::int64_t hi = region.upper.r_at(Rational(h)).floor();
    for (std::int64_t r = lo; r <= hi; ++r) out.push_back({h, r});
  }
  return out;
}

GapLatticePoints integer_points(const GapRegion& region) {
  GapLatticePoints out;
  for (std::int64_t h = std::max<std::int64_t>(0, region.corner.h.floor() + 1);; ++h) {
    const Rational top = region.boundary_lower.r_at(Rational(h));
    if (top <= Rational(0)) break;
    const Rational bottom = region.boundary_upper.r_at(Rational(h));
    const std::int64_t lo = std::max<std::int64_t>(0, bottom.floor() + 1);
    const std::int64_t hi = top.ceil() - 1;
    for (std::int64_t r = lo; r <= hi; ++r) {
      SkeletalSignature s{h, r};
      out.raw.push_back(s);
      if (region.exception_line && region.exception_line->contains(to_point(s))) {
        out.on_exception_line.push_back(s);
      } else {
        out.filtered.push_back(s);
      }
    }
  }
  return out;
}

std::int64_t nearest_int(const Rational& x) {
  const Rational half(1, 2);
  if (x < Rational(0)) return -(abs(x) + half).floor();
  return (x + half).floor();
}

std::vector<SkeletalSignature> missing_points(std::int64_t sigma, std::int64_t h) {
  std::vector<std::int64_t> offsets;
  if (h == 2) {
    if (sigma < 7) throw std::invalid_argument("missing points at h = 2 need sigma >= 7");
    offsets = {4};
  } else if (h == 3) {
    if (sigma < 18) throw std::invalid_argument("missing points at h = 3 need sigma >= 18");
    offsets = {7, 8};
    if (sigma % 3 == 2) offsets.push_back(6);
  } else {
    throw std::invalid_argument("missing points are defined for h = 2 or h = 3");
  }

  const GapRegion region = gap(sigma, 4);
  std::vector<SkeletalSignature> out;
  for (auto k : offsets) {
    SkeletalSignature s{h, nearest_int(Rational(2 * sigma, 3) - Rational(k))};
    if (!region.contains(to_point(s))) {
      throw std::logic_error("missing point (" + std::to_string(s.h) + "," + std::to_string(s.r) +
                             ") outside G(4,6) at genus " + std::to_string(sigma));
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace skelsig
