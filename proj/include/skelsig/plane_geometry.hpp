#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skelsig/rational.hpp"
#include "skelsig/rh_core.hpp"

// Exact loci in the (h, r)-plane: the lines bounding the feasible region for
// order-N actions, the triangles between them, and the gaps the triangles
// leave uncovered.
namespace skelsig {

struct RationalPoint {
  Rational h;
  Rational r;

  bool is_lattice() const { return h.is_integer() && r.is_integer(); }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline RationalPoint to_point(const SkeletalSignature& s) { return {Rational(s.h), Rational(s.r)}; }

/// a*h + b*r = c with integer coefficients, gcd(a, b, c) = 1 and the first
/// non-zero of (a, b) positive. Two lines are the same locus iff equal.
class RationalLine {
public:
  /// Normalizes; throws std::invalid_argument when a = b = 0.
  RationalLine(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

  /// a*h + b*r - c; zero exactly on the line.
  Rational residual(const RationalPoint& p) const;
  bool contains(const RationalPoint& p) const { return residual(p) == Rational(0); }
  /// r-coordinate above h. Requires b != 0.
  Rational r_at(const Rational& h) const;
  /// dr/dh = -a/b. Requires b != 0.
  Rational slope() const;
  /// "3h + r = 50" style rendering.
  std::string str() const;

  friend bool operator==(const RationalLine&, const RationalLine&) = default;

private:
  std::int64_t a_, b_, c_;
};

std::optional<RationalPoint> intersect(const RationalLine& first, const RationalLine& second);

/// L_N: (N-1) r + 2N h = 2 sigma - 2 + 2N.
RationalLine lower_line(std::int64_t sigma, std::int64_t order);
/// U_N: N r + 4N h = 4 (N + sigma - 1).
RationalLine upper_line(std::int64_t sigma, std::int64_t order);
/// Locus of (C_p)^n actions: 2 p^n h + (p-1) p^(n-1) r = 2 p^n - 2 + 2 sigma.
RationalLine p_group_line(std::int64_t sigma, std::int64_t p, std::int64_t n);

/// Point (sigma, 2 - 2 sigma) shared by every lower line.
RationalPoint common_point(std::int64_t sigma);

/// Closed region between L_N and U_N for 0 <= h <= 1 + (sigma-1)/N, r >= 0.
struct TriangleRegion {
  std::int64_t sigma;
  std::int64_t order;
  RationalLine lower;
  RationalLine upper;
  RationalPoint apex;

  bool contains(const RationalPoint& p) const;
  bool degenerate() const { return lower == upper; }
};

TriangleRegion triangle(std::int64_t sigma, std::int64_t order);

enum class GapSpan { next, skip };

/// Open region strictly between L_N and U_{N+1} (span next) or U_{N+2}
/// (span skip), to the right of their intersection. Skip gaps carry the
/// line of cyclic actions of prime order N+1 as an exception.
struct GapRegion {
  std::int64_t sigma;
  std::int64_t lower_index;
  GapSpan span;
  RationalLine boundary_lower;  // L_N
  RationalLine boundary_upper;  // U_{N+1} or U_{N+2}
  RationalPoint corner;
  std::optional<RationalLine> exception_line;

  std::int64_t upper_index() const { return lower_index + (span == GapSpan::next ? 1 : 2); }
  /// Ignores the exception line.
  bool contains_raw(const RationalPoint& p) const;
  bool contains(const RationalPoint& p) const;
};

/// N >= 3; throws std::invalid_argument otherwise.
GapRegion gap(std::int64_t sigma, std::int64_t lower_index);

inline bool gap_member(const GapRegion& g, const RationalPoint& p) { return g.contains(p); }
inline bool gap_member_raw(const GapRegion& g, const RationalPoint& p) { return g.contains_raw(p); }

/// Lattice points with h, r >= 0, lexicographic.
std::vector<SkeletalSignature> integer_points(const TriangleRegion& region);

struct GapLatticePoints {
  std::vector<SkeletalSignature> raw;       // every lattice point of the open region, r >= 0
  std::vector<SkeletalSignature> filtered;  // raw minus points on the exception line
  std::vector<SkeletalSignature> on_exception_line;
};

GapLatticePoints integer_points(const GapRegion& region);

/// Nearest integer; exact halves round away from zero.
std::int64_t nearest_int(const Rational& x);

/// Points forced missing by the gap G(4,6): for h = 2, (2, [2s/3 - 4]) with
/// sigma >= 7; for h = 3, (3, [2s/3 - 7]), (3, [2s/3 - 8]) and, when
/// sigma = 2 mod 3, (3, [2s/3 - 6]) with sigma >= 18.
std::vector<SkeletalSignature> missing_points(std::int64_t sigma, std::int64_t h);

}  // namespace skelsig
