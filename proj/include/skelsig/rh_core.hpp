#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skelsig/rational.hpp"

// Riemann-Hurwitz arithmetic for finite group actions on closed surfaces.
//
// Everything here is exact integer or Rational arithmetic. Nothing in this
// module asserts that a group action exists; it only answers whether the
// genus formula admits a solution.
namespace skelsig {

/// The pair (h, r): quotient genus and number of branch points.
struct SkeletalSignature {
  std::int64_t h = 0;
  std::int64_t r = 0;

  friend auto operator<=>(const SkeletalSignature&, const SkeletalSignature&) = default;
};

/// Quotient genus h and the ordered branching periods n_1..n_r.
struct OrbifoldSignature {
  std::int64_t genus = 0;
  std::vector<std::int64_t> periods;

  /// Throws std::invalid_argument unless h >= 0 and every period is >= 2.
  OrbifoldSignature(std::int64_t h, std::vector<std::int64_t> n);
  OrbifoldSignature() = default;

  std::int64_t branch_count() const { return static_cast<std::int64_t>(periods.size()); }
  SkeletalSignature skeleton() const { return {genus, branch_count()}; }
  /// "(h;n1,n2,...)", or "(h;)" when unbranched.
  std::string str() const;

  friend bool operator==(const OrbifoldSignature&, const OrbifoldSignature&) = default;
};

/// Raised by parse_signature; position is a 0-based offset into the input.
class SignatureParseError : public std::runtime_error {
public:
  SignatureParseError(std::string message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses "(h;n1,n2,...)" (whitespace tolerated, "(h)" and "(h;)" mean r = 0).
OrbifoldSignature parse_signature(std::string_view text);

/// Raised for skeletal points where the genus formula forces sigma <= 1.
class HyperbolicityError : public std::domain_error {
public:
  explicit HyperbolicityError(const SkeletalSignature& skel);
};

enum class Verdict { exists, not_exists, unknown };

std::string_view to_string(Verdict v);

/// Outcome of an exhaustive search. not_exists is only produced when the
/// search space was fully covered; running out of budget yields unknown.
template <typename Witness>
struct SearchResult {
  Verdict verdict = Verdict::not_exists;
  std::optional<Witness> witness;

  static SearchResult exists(Witness w) { return {Verdict::exists, std::move(w)}; }
  static SearchResult not_exists() { return {Verdict::not_exists, std::nullopt}; }
  static SearchResult unknown() { return {Verdict::unknown, std::nullopt}; }

  bool found() const { return verdict == Verdict::exists; }
};

/// Which branching periods are tried for a group of order N.
///   divides_order     every n_j divides N (element orders, by Lagrange)
///   bounded_by_order  any 2 <= n_j <= N (the coarse box behind the triangles)
enum class PeriodRule { divides_order, bounded_by_order };

/// sigma = 1 + N (h - 1 + r/2 - (1/2) sum 1/n_j), exactly.
Rational rh_genus(std::int64_t order, const OrbifoldSignature& sig);

bool rh_holds(std::int64_t sigma, std::int64_t order, const OrbifoldSignature& sig);

/// Calls visit on every non-decreasing list of r values drawn from allowed
/// (sorted ascending, each >= 2) whose signature (h; list) has genus sigma at
/// the given order. Lists arrive in lexicographic order; visit returns false
/// to stop early. Throws std::overflow_error if lcm(allowed, order) does not
/// fit in 64 bits.
void for_each_period_list(std::int64_t sigma, const SkeletalSignature& skel, std::int64_t order,
                          std::span<const std::int64_t> allowed,
                          const std::function<bool(std::span<const std::int64_t>)>& visit);

/// The period values a rule permits at a given order, ascending.
std::vector<std::int64_t> allowed_periods(std::int64_t order, PeriodRule rule);

/// Lexicographically first feasible period list, or not_exists.
SearchResult<std::vector<std::int64_t>> period_feasible(
    std::int64_t sigma, const SkeletalSignature& skel, std::int64_t order,
    PeriodRule rule = PeriodRule::divides_order);

/// Every feasible period list at this order.
std::vector<std::vector<std::int64_t>> all_period_lists(
    std::int64_t sigma, const SkeletalSignature& skel, std::int64_t order,
    PeriodRule rule = PeriodRule::divides_order);

/// Upper bound on any group order that can satisfy the genus formula at this
/// skeletal point: sigma-1 for h >= 2, 4(sigma-1) for h = 1, 84(sigma-1) for
/// h = 0. Throws HyperbolicityError for (0,0), (0,1), (0,2), (1,0).
std::int64_t order_bound(std::int64_t sigma, const SkeletalSignature& skel);

struct OrderedPeriods {
  std::int64_t order = 0;
  std::vector<std::int64_t> periods;

  friend bool operator==(const OrderedPeriods&, const OrderedPeriods&) = default;
};

/// Smallest order N <= order_bound with a feasible period list.
SearchResult<OrderedPeriods> rh_admissible(std::int64_t sigma, const SkeletalSignature& skel,
                                           PeriodRule rule = PeriodRule::divides_order);

/// All orders N <= order_bound admitting at least one feasible period list.
std::vector<std::int64_t> rh_compatible_orders(std::int64_t sigma, const SkeletalSignature& skel,
                                               PeriodRule rule = PeriodRule::divides_order);

bool is_degenerate(const SkeletalSignature& skel);

}  // namespace skelsig
