#include "doctest.h"
#include "oracles.hpp"
#include "skelsig/arith.hpp"
#include "skelsig/skeleton_space.hpp"

using namespace skelsig;

namespace {

const CatalogManifest& bundled() {
  static const CatalogManifest catalog = load_catalog(SKELSIG_CATALOG_DIR);
  return catalog;
}

bool contains(const std::vector<SkeletalSignature>& v, SkeletalSignature p) {
  return std::find(v.begin(), v.end(), p) != v.end();
}

}  // namespace

TEST_CASE("admissible set against the oracle") {
  for (std::int64_t sigma = 2; sigma <= 10; ++sigma) {
    std::vector<SkeletalSignature> expected;
    for (std::int64_t h = 0; h <= sigma + 1; ++h)
      for (std::int64_t r = 0; r <= 2 * sigma + 2; ++r)
        if (!is_degenerate({h, r}) && oracle::smallest_order(sigma, h, r)) expected.push_back({h, r});
    CHECK(admissible_set(sigma) == expected);
    CHECK(admissible_set(sigma, -1, -1, 4) == expected);
  }
}

TEST_CASE("analyze_point") {
  auto a = analyze_point(48, {8, 6}, bundled());
  CHECK(a.verdict == Verdict::exists);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->group_name == "C5");
  auto b = analyze_point(48, {10, 1}, bundled());
  CHECK(b.verdict == Verdict::not_exists);
  CHECK(b.compatible_orders == std::vector<std::int64_t>{5});
  CHECK(b.uncovered_orders.empty());
  auto c = analyze_point(48, {3, 40}, bundled());
  CHECK(c.verdict == Verdict::not_exists);
  CHECK(c.reasons.front().rule == ExclusionRule::arithmetic);
  // (2,1) in genus 11: order 8 carries Q8 in the catalog.
  auto d = analyze_point(11, {2, 1}, bundled());
  CHECK(d.verdict == Verdict::exists);
  CHECK(d.witness->group_order == 8);
  // An empty catalog can only close orders through the cyclic-forced rule.
  auto e = analyze_point(11, {2, 1}, CatalogManifest{});
  CHECK(e.verdict == Verdict::unknown);
  CHECK_FALSE(e.uncovered_orders.empty());
}

TEST_CASE("verify_gap examples") {
  const auto g3 = verify_gap(48, 3, bundled());
  CHECK(g3.conclusion == GapConclusion::verified);
  CHECK(std::any_of(g3.points.begin(), g3.points.end(), [](const auto& v) {
    return v.point == SkeletalSignature{3, 40} && v.arithmetic == Verdict::not_exists;
  }));

  const auto g4 = verify_gap(48, 4, bundled());
  CHECK(g4.conclusion == GapConclusion::verified);
  std::vector<SkeletalSignature> on_line;
  for (const auto& v : g4.points) {
    if (!v.on_exception_line) {
      CHECK(v.arithmetic == Verdict::not_exists);
      continue;
    }
    on_line.push_back(v.point);
    REQUIRE(v.realizability.has_value());
    if (v.point == SkeletalSignature{8, 6}) CHECK(v.realizability->verdict == Verdict::exists);
    if (v.point == SkeletalSignature{10, 1}) CHECK(v.realizability->verdict == Verdict::not_exists);
  }
  CHECK(on_line == std::vector<SkeletalSignature>{{8, 6}, {10, 1}});

  const auto g20 = verify_gap(20, 4, bundled());
  CHECK(g20.conclusion == GapConclusion::verified);
  for (auto p : missing_points(20, 3)) {
    CHECK(std::any_of(g20.points.begin(), g20.points.end(), [&](const auto& v) {
      return v.point == p && v.arithmetic == Verdict::not_exists && !v.on_exception_line;
    }));
  }
}

TEST_CASE("sporadic analysis") {
  const std::int64_t primes[] = {3, 5, 7};
  const std::int64_t ns[] = {2, 3};
  const auto report = sporadic_analysis(2, primes, ns, bundled());
  CHECK(report.nonexistence_verdict == Verdict::not_exists);
  REQUIRE(report.witnesses.size() == 2);
  CHECK(report.witnesses[0].sigma == 11);
  CHECK(report.witnesses[1].sigma == 17);
  for (const auto& w : report.witnesses) CHECK(w.verified);
  // p = 5: the surviving divisor case is n = 2 with |G| = 4.
  const auto& g5 = report.nonexistence[1];
  CHECK(g5.sigma == 6);
  bool saw_order4 = false;
  for (const auto& c : g5.cases) {
    if (c.order && *c.order == 4) {
      saw_order4 = true;
      CHECK(c.period == 2);
      CHECK(c.classification == "catalog-search");
      CHECK(c.verdict == Verdict::not_exists);
    }
  }
  CHECK(saw_order4);
  // Without a catalog the same case stays open.
  const auto open = sporadic_analysis(2, primes, {}, CatalogManifest{});
  CHECK(open.nonexistence_verdict == Verdict::unknown);
}

TEST_CASE("realizable_set lower bound") {
  const auto k = realizable_set(6, bundled(), 15, default_search_budget, -1, -1, 2);
  for (const auto& [p, w] : k.realized) {
    CHECK(contains(k.admissible, p));
    const auto g = resolve_group_spec(
        [&] {
          for (const auto& e : bundled().entries())
            if (e.label == w.group_name) return e.spec;
          return std::string("cyclic:1");
        }(),
        SKELSIG_CATALOG_DIR);
    CHECK(oracle::is_generating_vector(g, w.vector, w.signature));
    CHECK(rh_holds(6, static_cast<std::int64_t>(g.order()), w.signature));
  }
  for (auto p : k.excluded) CHECK_FALSE(k.realized.contains(p));
  CHECK(k.realized.size() + k.excluded.size() + k.undetermined.size() == k.admissible.size());
  // Every unbranched point with N | sigma - 1 is realized.
  for (auto n : divisors(5))
    if (n >= 2) CHECK(k.realized.contains({5 / n + 1, 0}));
  // The hyperelliptic point.
  CHECK(k.realized.contains({0, 14}));
}

TEST_CASE("figure dataset") {
  const auto d2 = figure_dataset(2);
  CHECK(d2.lines.size() == 1);
  CHECK(d2.gaps.empty());
  const auto d48 = figure_dataset(48, {&bundled()});
  std::vector<std::string> names;
  for (const auto& l : d48.lines) names.push_back(l.name);
  CHECK(names == std::vector<std::string>{"L_sigma(2,1)", "L_3", "U_4", "L_4", "U_6", "L_sigma(5,1)"});
  CHECK(d48.h_max == 26);
  CHECK(d48.r_max == 98);
  auto status_of = [&](SkeletalSignature p) {
    for (const auto& dp : d48.points)
      if (dp.point == p) return std::optional<PointStatus>(dp.status);
    return std::optional<PointStatus>();
  };
  CHECK(status_of({8, 6}) == PointStatus::exception_realized);
  CHECK(status_of({10, 1}) == PointStatus::exception_excluded);
  CHECK(status_of({3, 40}) == PointStatus::gap);
  CHECK(status_of({0, 98}) == PointStatus::admissible);
  CHECK(std::is_sorted(d48.points.begin(), d48.points.end(),
                       [](const auto& a, const auto& b) { return a.point < b.point; }));
}
