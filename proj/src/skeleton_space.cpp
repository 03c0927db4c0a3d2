#include "skelsig/skeleton_space.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "skelsig/arith.hpp"

namespace skelsig {

namespace {

// Runs fn(i) for i in [0, count) over up to `threads` workers. Results are
// written by index, so output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void add_reason(std::vector<ExclusionReason>& out, ExclusionReason reason) {
  for (const auto& r : out) {
    if (r.rule == reason.rule && r.scope == reason.scope) return;
  }
  out.push_back(std::move(reason));
}

void add_reasons(std::vector<ExclusionReason>& out, const std::vector<ExclusionReason>& more) {
  for (const auto& r : more) add_reason(out, r);
}

}  // namespace

std::vector<SkeletalSignature> admissible_set(std::int64_t sigma, std::int64_t h_max, std::int64_t r_max,
                                              unsigned threads) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (h_max < 0) h_max = sigma + 1;
  if (r_max < 0) r_max = 2 * sigma + 2;
  std::vector<SkeletalSignature> box;
  for (std::int64_t h = 0; h <= h_max; ++h) {
    for (std::int64_t r = 0; r <= r_max; ++r) {
      if (!is_degenerate({h, r})) box.push_back({h, r});
    }
  }
  std::vector<char> keep(box.size());
  parallel_for(box.size(), threads, [&](std::size_t i) { keep[i] = rh_admissible(sigma, box[i]).found(); });
  std::vector<SkeletalSignature> out;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (keep[i]) out.push_back(box[i]);
  }
  return out;
}

PointAnalysis analyze_point(std::int64_t sigma, const SkeletalSignature& skel, const CatalogManifest& catalog,
                            std::span<const GroupTable> extra_groups, std::uint64_t budget, std::int64_t max_order) {
  PointAnalysis out;
  out.point = skel;
  for (const auto& g : extra_groups) {
    auto report = realizable(g, sigma, skel, budget);
    if (report.verdict == Verdict::exists) {
      out.verdict = Verdict::exists;
      out.witness = std::move(report.witness);
      out.compatible_orders = {static_cast<std::int64_t>(g.order())};
      return out;
    }
    add_reasons(out.reasons, report.reasons);
  }

  out.compatible_orders = rh_compatible_orders(sigma, skel);
  if (out.compatible_orders.empty()) {
    add_reason(out.reasons, {ExclusionRule::arithmetic, "no group order up to " +
                                                            std::to_string(order_bound(sigma, skel)) +
                                                            " satisfies the genus formula"});
    out.verdict = Verdict::not_exists;
    return out;
  }

  for (const std::int64_t order : out.compatible_orders) {
    bool closed = false;
    if (skel.r == 1) {
      const auto lists = all_period_lists(sigma, skel, order);
      closed = std::all_of(lists.begin(), lists.end(), [&](const auto& l) { return l[0] == order; });
      if (closed) {
        const std::string scope = "order " + std::to_string(order) + ": the single period equals |G|";
        add_reason(out.reasons, {ExclusionRule::cyclic_forced, scope + ", so G is cyclic"});
        add_reason(out.reasons, {ExclusionRule::abelian_r1, scope + "; cyclic groups are abelian"});
        continue;
      }
    }
    if (max_order > 0 && order > max_order) {
      out.uncovered_orders.push_back(order);
      continue;
    }
    bool unknown = false;
    for (const auto* entry : catalog.of_order(order)) {
      auto report = realizable(entry->group, sigma, skel, budget);
      if (report.verdict == Verdict::exists) {
        report.witness->group_name = entry->label;
        out.verdict = Verdict::exists;
        out.witness = std::move(report.witness);
        return out;
      }
      if (report.verdict == Verdict::unknown) unknown = true;
      add_reasons(out.reasons, report.reasons);
    }
    if (!unknown && catalog.complete_at(order)) closed = true;
    if (!closed) out.uncovered_orders.push_back(order);
  }
  out.verdict = out.uncovered_orders.empty() ? Verdict::not_exists : Verdict::unknown;
  return out;
}

KSpaceApproximation realizable_set(std::int64_t sigma, const CatalogManifest& catalog, std::int64_t max_order,
                                   std::uint64_t budget, std::int64_t h_max, std::int64_t r_max, unsigned threads) {
  KSpaceApproximation out;
  out.sigma = sigma;
  out.h_max = h_max < 0 ? sigma + 1 : h_max;
  out.r_max = r_max < 0 ? 2 * sigma + 2 : r_max;
  out.max_order = max_order;
  out.admissible = admissible_set(sigma, out.h_max, out.r_max, threads);

  std::vector<PointAnalysis> analyses(out.admissible.size());
  parallel_for(out.admissible.size(), threads, [&](std::size_t i) {
    analyses[i] = analyze_point(sigma, out.admissible[i], catalog, {}, budget, max_order);
  });
  for (auto& a : analyses) {
    switch (a.verdict) {
      case Verdict::exists: out.realized.emplace(a.point, std::move(*a.witness)); break;
      case Verdict::not_exists: out.excluded.push_back(a.point); break;
      case Verdict::unknown: out.undetermined.push_back(a.point); break;
    }
  }
  out.scope = "lower bound on the skeletal space: catalog groups of order <= " + std::to_string(max_order) +
              " (complete through order " + std::to_string(catalog.complete_through()) + "), search budget " +
              std::to_string(budget) + "; " + std::to_string(out.undetermined.size()) +
              " admissible point(s) undetermined";
  return out;
}

std::string_view to_string(GapConclusion c) {
  switch (c) {
    case GapConclusion::verified: return "verified";
    case GapConclusion::refuted: return "refuted";
    case GapConclusion::partial: return "partial";
  }
  return "partial";
}

GapReport verify_gap(std::int64_t sigma, std::int64_t lower_index, const CatalogManifest& catalog,
                     std::uint64_t budget) {
  GapReport report{gap(sigma, lower_index), {}, GapConclusion::verified};
  const auto lattice = integer_points(report.gap);
  std::vector<GroupTable> cyclic;
  if (report.gap.exception_line) cyclic.push_back(build_cyclic(lower_index + 1));

  for (const auto& p : lattice.raw) {
    GapPointVerdict v;
    v.point = p;
    v.on_exception_line = report.gap.exception_line && report.gap.exception_line->contains(to_point(p));
    if (!is_degenerate(p)) {
      auto rh = rh_admissible(sigma, p);
      v.arithmetic = rh.verdict;
      v.arithmetic_witness = std::move(rh.witness);
    }
    if (v.on_exception_line && v.arithmetic == Verdict::exists) {
      v.realizability = analyze_point(sigma, p, catalog, cyclic, budget);
    }
    if (!v.on_exception_line && v.arithmetic != Verdict::not_exists) {
      report.conclusion = v.arithmetic == Verdict::exists ? GapConclusion::refuted : GapConclusion::partial;
    }
    report.points.push_back(std::move(v));
  }
  return report;
}

SporadicReport sporadic_analysis(std::int64_t h, std::span<const std::int64_t> primes,
                                 std::span<const std::int64_t> witness_ns, const CatalogManifest& catalog,
                                 std::uint64_t budget) {
  if (h < 2) throw std::invalid_argument("sporadic analysis needs h >= 2");
  SporadicReport report;
  report.h = h;
  const SkeletalSignature skel{h, 1};
  bool any_unknown = false, any_exists = false;

  for (const std::int64_t p : primes) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("sporadic analysis needs odd primes");
    SporadicGenus genus{p, p + 1, {}, Verdict::not_exists};
    std::set<std::pair<std::int64_t, std::int64_t>> from_cases;

    // n(2h-1) - 1 must divide 2(sigma-1) = 2p.
    for (const std::int64_t d : divisors(2 * p)) {
      SporadicCase c;
      c.divisor = d;
      if ((d + 1) % (2 * h - 1) != 0 || (d + 1) / (2 * h - 1) < 2) {
        c.classification = "no-integer-period";
        c.reasons.push_back({ExclusionRule::arithmetic, "n(2h-1) - 1 = " + std::to_string(d) + " has no solution n >= 2"});
        genus.cases.push_back(std::move(c));
        continue;
      }
      const std::int64_t n = (d + 1) / (2 * h - 1);
      const std::int64_t order = 2 * n * p / d;
      c.period = n;
      c.order = order;
      if (!rh_holds(genus.sigma, order, OrbifoldSignature(h, {n}))) {
        throw std::logic_error("sporadic case arithmetic disagrees with the genus formula");
      }
      from_cases.emplace(order, n);

      if (order == n) {
        c.classification = "cyclic-forced";
        c.reasons.push_back({ExclusionRule::cyclic_forced, "|G| = n = " + std::to_string(n) + ": c_1 has order |G|"});
        c.reasons.push_back({ExclusionRule::abelian_r1, "cyclic groups are abelian, so c_1 = 1"});
      } else if (catalog.complete_at(order)) {
        c.classification = "catalog-search";
        const OrbifoldSignature sig(h, {n});
        for (const auto* entry : catalog.of_order(order)) {
          auto found = search(entry->group, sig, budget);
          if (found.found()) {
            c.verdict = Verdict::exists;
            c.witness = make_witness(entry->group, sig, *found.witness);
            c.witness->group_name = entry->label;
            break;
          }
          if (found.verdict == Verdict::unknown) {
            c.verdict = Verdict::unknown;
            continue;
          }
          if (is_abelian(entry->group)) {
            c.reasons.push_back({ExclusionRule::abelian_r1, entry->label + " is abelian"});
          } else {
            c.reasons.push_back({ExclusionRule::exhausted_search, entry->label + ": no " + sig.str() + " vector"});
          }
        }
      } else {
        c.classification = "uncovered";
        c.verdict = Verdict::unknown;
      }
      if (c.verdict == Verdict::exists) genus.verdict = Verdict::exists;
      if (c.verdict == Verdict::unknown && genus.verdict != Verdict::exists) genus.verdict = Verdict::unknown;
      genus.cases.push_back(std::move(c));
    }

    std::set<std::pair<std::int64_t, std::int64_t>> from_sweep;
    for (std::int64_t order = 2; order <= order_bound(genus.sigma, skel); ++order) {
      for (const auto& list : all_period_lists(genus.sigma, skel, order)) from_sweep.emplace(order, list[0]);
    }
    if (from_sweep != from_cases) {
      throw std::logic_error("sporadic case split misses a solution of the genus formula at genus " +
                             std::to_string(genus.sigma));
    }

    any_exists |= genus.verdict == Verdict::exists;
    any_unknown |= genus.verdict == Verdict::unknown;
    report.nonexistence.push_back(std::move(genus));
  }
  report.nonexistence_verdict = any_exists ? Verdict::exists : any_unknown ? Verdict::unknown : Verdict::not_exists;

  for (const std::int64_t n : witness_ns) {
    auto action = quaternion_vector(n, h);
    const Rational genus = rh_genus(static_cast<std::int64_t>(action.group.order()), action.signature);
    if (!genus.is_integer()) throw std::logic_error("quaternion genus is not an integer");
    report.witnesses.push_back({n, genus.num(), verify(action.group, action.vector, action.signature).ok(),
                                make_witness(action.group, action.signature, action.vector)});
  }
  return report;
}

std::string_view to_string(PointStatus s) {
  switch (s) {
    case PointStatus::admissible: return "admissible";
    case PointStatus::realized: return "realized";
    case PointStatus::gap: return "gap";
    case PointStatus::exception_realized: return "exception-realized";
    case PointStatus::exception_excluded: return "exception-excluded";
  }
  return "admissible";
}

FigureDataset figure_dataset(std::int64_t sigma, const FigureOptions& options) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  FigureDataset out;
  out.sigma = sigma;
  out.h_max = sigma / 2 + 2;
  out.r_max = 2 * sigma + 2;
  out.lines.push_back({"L_sigma(2,1)", p_group_line(sigma, 2, 1)});

  std::map<SkeletalSignature, PointStatus> status;
  const CatalogManifest empty;
  const CatalogManifest& catalog = options.catalog ? *options.catalog : empty;

  const GapRegion g34 = gap(sigma, 3);
  const GapRegion g46 = gap(sigma, 4);
  const auto pts34 = integer_points(g34);
  const auto pts46 = integer_points(g46);
  if (!pts34.raw.empty()) {
    out.lines.push_back({"L_3", g34.boundary_lower});
    out.lines.push_back({"U_4", g34.boundary_upper});
    out.gaps.push_back(g34);
  }
  if (!pts46.raw.empty()) {
    out.lines.push_back({"L_4", g46.boundary_lower});
    out.lines.push_back({"U_6", g46.boundary_upper});
    out.lines.push_back({"L_sigma(5,1)", *g46.exception_line});
    out.gaps.push_back(g46);
  }

  if (options.with_realized) {
    const auto k = realizable_set(sigma, catalog, options.max_order, options.budget, out.h_max, out.r_max,
                                  options.threads);
    for (const auto& p : k.admissible) status[p] = PointStatus::admissible;
    for (const auto& [p, w] : k.realized) status[p] = PointStatus::realized;
  } else {
    for (const auto& p : admissible_set(sigma, out.h_max, out.r_max, options.threads)) {
      status[p] = PointStatus::admissible;
    }
  }

  for (const auto& g : out.gaps) {
    const auto report = verify_gap(sigma, g.lower_index, catalog, options.budget);
    for (const auto& v : report.points) {
      if (v.point.h > out.h_max || v.point.r > out.r_max) continue;
      if (!v.on_exception_line) {
        status[v.point] = PointStatus::gap;
      } else if (v.arithmetic != Verdict::exists) {
        status[v.point] = PointStatus::exception_excluded;
      } else if (v.realizability->verdict == Verdict::exists) {
        status[v.point] = PointStatus::exception_realized;
      } else if (v.realizability->verdict == Verdict::not_exists) {
        status[v.point] = PointStatus::exception_excluded;
      }
    }
  }
  for (const auto& [p, s] : status) out.points.push_back({p, s});
  return out;
}

}  // namespace skelsig
