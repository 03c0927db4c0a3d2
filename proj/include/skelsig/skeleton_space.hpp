#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skelsig/catalog.hpp"
#include "skelsig/genvec.hpp"
#include "skelsig/plane_geometry.hpp"
#include "skelsig/rh_core.hpp"

// Assembles the skeletal-signature space for a fixed genus from the
// arithmetic, geometric and group-theoretic pieces.
namespace skelsig {

/// Genus-formula feasible points of the box [0, h_max] x [0, r_max]
/// (defaults sigma+1 and 2 sigma+2 when negative), lexicographic.
std::vector<SkeletalSignature> admissible_set(std::int64_t sigma, std::int64_t h_max = -1, std::int64_t r_max = -1,
                                              unsigned threads = 1);

/// Everything known about one skeletal point for one genus.
struct PointAnalysis {
  SkeletalSignature point;
  Verdict verdict = Verdict::unknown;
  std::optional<ActionWitness> witness;
  std::vector<ExclusionReason> reasons;
  std::vector<std::int64_t> compatible_orders;
  std::vector<std::int64_t> uncovered_orders;
};

/// Tries the extra groups first, then walks every order compatible with the
/// genus formula. An order is closed when a period equal to the order forces
/// a cyclic (hence abelian) group with r = 1, or when the catalog is complete
/// there and every group fails. not_exists requires every order closed;
/// orders above max_order (when positive) are never closed by search.
PointAnalysis analyze_point(std::int64_t sigma, const SkeletalSignature& skel, const CatalogManifest& catalog,
                            std::span<const GroupTable> extra_groups = {},
                            std::uint64_t budget = default_search_budget, std::int64_t max_order = -1);

/// Lower bound on the skeletal space from explicit witnesses. Points are
/// excluded only when the analysis closed every compatible order.
struct KSpaceApproximation {
  std::int64_t sigma = 0;
  std::int64_t h_max = 0;
  std::int64_t r_max = 0;
  std::int64_t max_order = 0;
  std::vector<SkeletalSignature> admissible;
  std::map<SkeletalSignature, ActionWitness> realized;
  std::vector<SkeletalSignature> excluded;
  std::vector<SkeletalSignature> undetermined;
  std::string scope;
};

KSpaceApproximation realizable_set(std::int64_t sigma, const CatalogManifest& catalog, std::int64_t max_order,
                                   std::uint64_t budget = default_search_budget, std::int64_t h_max = -1,
                                   std::int64_t r_max = -1, unsigned threads = 1);

enum class GapConclusion { verified, refuted, partial };
std::string_view to_string(GapConclusion c);

struct GapPointVerdict {
  SkeletalSignature point;
  bool on_exception_line = false;
  Verdict arithmetic = Verdict::not_exists;
  std::optional<OrderedPeriods> arithmetic_witness;
  std::optional<PointAnalysis> realizability;  // exception-line points that pass the arithmetic
};

struct GapReport {
  GapRegion gap;
  std::vector<GapPointVerdict> points;
  GapConclusion conclusion = GapConclusion::verified;
};

/// Every lattice point of gap(sigma, N) off the exception line must fail the
/// genus formula at every order; exception-line points are analyzed against
/// C_{N+1} and the catalog.
GapReport verify_gap(std::int64_t sigma, std::int64_t lower_index, const CatalogManifest& catalog,
                     std::uint64_t budget = default_search_budget);

struct SporadicCase {
  std::int64_t divisor = 0;  // candidate value of n(2h-1) - 1 dividing 2(sigma-1)
  std::optional<std::int64_t> period;
  std::optional<std::int64_t> order;
  std::string classification;  // no-integer-period | cyclic-forced | catalog-search | uncovered
  Verdict verdict = Verdict::not_exists;
  std::vector<ExclusionReason> reasons;
  std::optional<ActionWitness> witness;
};

struct SporadicGenus {
  std::int64_t prime = 0;
  std::int64_t sigma = 0;
  std::vector<SporadicCase> cases;
  Verdict verdict = Verdict::not_exists;
};

struct SporadicWitness {
  std::int64_t n = 0;
  std::int64_t sigma = 0;
  bool verified = false;
  ActionWitness action;
};

struct SporadicReport {
  std::int64_t h = 0;
  std::vector<SporadicGenus> nonexistence;
  std::vector<SporadicWitness> witnesses;
  /// not_exists: every genus excluded; unknown: some case uncovered;
  /// exists: some genus p+1 carries (h,1) after all.
  Verdict nonexistence_verdict = Verdict::not_exists;
};

/// For each odd prime p, shows (h,1) is not skeletal in genus p+1 by the
/// divisor cases of n(2h-1)-1 | 2p; for each n, builds the quaternion action
/// with skeletal signature (h,1). Throws std::logic_error if the case split
/// disagrees with a direct sweep over orders.
SporadicReport sporadic_analysis(std::int64_t h, std::span<const std::int64_t> primes,
                                 std::span<const std::int64_t> witness_ns, const CatalogManifest& catalog,
                                 std::uint64_t budget = default_search_budget);

enum class PointStatus { admissible, realized, gap, exception_realized, exception_excluded };
std::string_view to_string(PointStatus s);

struct NamedLine {
  std::string name;
  RationalLine line;
};

struct DatasetPoint {
  SkeletalSignature point;
  PointStatus status;
};

struct FigureOptions {
  const CatalogManifest* catalog = nullptr;
  bool with_realized = false;
  std::int64_t max_order = 15;
  std::uint64_t budget = default_search_budget;
  unsigned threads = 1;
};

struct FigureDataset {
  std::int64_t sigma = 0;
  std::int64_t h_max = 0;  // viewport: h in [0, sigma/2 + 2], r in [0, 2 sigma + 2]
  std::int64_t r_max = 0;
  std::vector<NamedLine> lines;
  std::vector<GapRegion> gaps;
  RationalLine guide{0, 1, 1};  // r = 1
  std::vector<DatasetPoint> points;  // lexicographic
};

/// The hyperelliptic line always; G(3,4) and G(4,6) with their bounding and
/// exception lines whenever the gap holds a lattice point with r >= 0.
FigureDataset figure_dataset(std::int64_t sigma, const FigureOptions& options = {});

}  // namespace skelsig
