#include "skelsig/genvec.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <unordered_set>

#include "skelsig/arith.hpp"

namespace skelsig {

VerifyReport verify(const GroupTable& g, const GeneratingVector& v, const OrbifoldSignature& sig) {
  if (static_cast<std::int64_t>(v.pairs.size()) != sig.genus ||
      static_cast<std::int64_t>(v.branch.size()) != sig.branch_count()) {
    throw std::invalid_argument("generating vector shape does not match signature " + sig.str());
  }
  std::vector<Element> entries;
  for (const auto& [a, b] : v.pairs) {
    entries.push_back(a);
    entries.push_back(b);
  }
  entries.insert(entries.end(), v.branch.begin(), v.branch.end());
  for (Element e : entries) {
    if (e >= g.order()) throw std::invalid_argument("generating vector entry out of range");
  }

  VerifyReport report;
  report.generated_order = subgroup_closure(g, entries);
  report.generates = report.generated_order == g.order();

  report.orders_match = true;
  for (std::size_t j = 0; j < v.branch.size(); ++j) {
    if (static_cast<std::int64_t>(g.element_order(v.branch[j])) != sig.periods[j]) report.orders_match = false;
  }

  Element product = g.identity();
  for (const auto& [a, b] : v.pairs) product = g.mul(product, commutator(g, a, b));
  for (Element c : v.branch) product = g.mul(product, c);
  report.relation_value = product;
  report.relation_holds = product == g.identity();
  return report;
}

namespace {

// Subgroup as a membership bitmask plus the generators that produced it.
struct Subgroup {
  std::vector<std::uint64_t> bits;
  std::vector<Element> gens;
  std::size_t size = 1;

  bool contains(Element e) const { return (bits[e / 64] >> (e % 64)) & 1U; }
};

class VectorSearch {
public:
  VectorSearch(const GroupTable& g, const OrbifoldSignature& sig, std::uint64_t budget)
      : g_(g), sig_(sig), budget_(budget) {
    for (auto n : sig_.periods) {
      std::vector<Element> options;
      for (Element e = 0; e < g_.order(); ++e) {
        if (static_cast<std::int64_t>(g_.element_order(e)) == n) options.push_back(e);
      }
      candidates_.push_back(std::move(options));
    }
  }

  SearchResult<GeneratingVector> run() {
    for (const auto& options : candidates_) {
      if (options.empty()) return SearchResult<GeneratingVector>::not_exists();
    }
    Subgroup trivial;
    trivial.bits.assign((g_.order() + 63) / 64, 0);
    trivial.bits[0] = 1;
    current_.pairs.assign(static_cast<std::size_t>(sig_.genus), {0, 0});
    current_.branch.assign(static_cast<std::size_t>(sig_.branch_count()), 0);
    if (descend(0, g_.identity(), trivial)) return SearchResult<GeneratingVector>::exists(current_);
    if (out_of_budget_) return SearchResult<GeneratingVector>::unknown();
    return SearchResult<GeneratingVector>::not_exists();
  }

private:
  Subgroup extend(const Subgroup& base, std::initializer_list<Element> extra) const {
    Subgroup out;
    out.gens = base.gens;
    for (Element e : extra) {
      if (!base.contains(e) && std::find(out.gens.begin(), out.gens.end(), e) == out.gens.end()) {
        out.gens.push_back(e);
      }
    }
    if (out.gens.size() == base.gens.size()) return base;
    const auto mask = generated_subgroup(g_, out.gens);
    out.bits.assign(base.bits.size(), 0);
    out.size = 0;
    for (Element e = 0; e < g_.order(); ++e) {
      if (mask[e]) {
        out.bits[e / 64] |= std::uint64_t{1} << (e % 64);
        ++out.size;
      }
    }
    return out;
  }

  std::string state_key(std::size_t step, Element product, const Subgroup& h) const {
    std::string key(sizeof(std::size_t) + sizeof(Element) + h.bits.size() * sizeof(std::uint64_t), '\0');
    char* out = key.data();
    std::memcpy(out, &step, sizeof step);
    std::memcpy(out + sizeof step, &product, sizeof product);
    std::memcpy(out + sizeof step + sizeof product, h.bits.data(), h.bits.size() * sizeof(std::uint64_t));
    return key;
  }

  bool tick() {
    if (++nodes_ > budget_) out_of_budget_ = true;
    return !out_of_budget_;
  }

  // Steps 0..h-1 fill commutator pairs, steps h..h+r-1 fill branch entries.
  bool descend(std::size_t step, Element product, const Subgroup& h) {
    const auto genus = static_cast<std::size_t>(sig_.genus);
    const auto r = static_cast<std::size_t>(sig_.branch_count());
    const std::size_t last = genus + r;

    if (step == last) return r == 0 && product == g_.identity() && h.size == g_.order();

    if (step + 1 == last && r > 0) {
      if (!tick()) return false;
      const Element c = g_.inverse(product);
      if (static_cast<std::int64_t>(g_.element_order(c)) != sig_.periods[r - 1]) return false;
      if (extend(h, {c}).size != g_.order()) return false;
      current_.branch[r - 1] = c;
      return true;
    }

    const std::string key = state_key(step, product, h);
    if (dead_.contains(key)) return false;

    if (step < genus) {
      for (Element a = 0; a < g_.order(); ++a) {
        for (Element b = 0; b < g_.order(); ++b) {
          if (!tick()) return false;
          current_.pairs[step] = {a, b};
          if (descend(step + 1, g_.mul(product, commutator(g_, a, b)), extend(h, {a, b}))) return true;
          if (out_of_budget_) return false;
        }
      }
    } else {
      const std::size_t j = step - genus;
      for (Element c : candidates_[j]) {
        if (!tick()) return false;
        current_.branch[j] = c;
        if (descend(step + 1, g_.mul(product, c), extend(h, {c}))) return true;
        if (out_of_budget_) return false;
      }
    }
    dead_.insert(key);
    return false;
  }

  const GroupTable& g_;
  const OrbifoldSignature& sig_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::vector<Element>> candidates_;
  GeneratingVector current_;
  std::unordered_set<std::string> dead_;
};

}  // namespace

SearchResult<GeneratingVector> search(const GroupTable& g, const OrbifoldSignature& sig, std::uint64_t budget) {
  if (sig.branch_count() == 1 && is_abelian(g)) return SearchResult<GeneratingVector>::not_exists();
  return VectorSearch(g, sig, budget).run();
}

GroupAction quaternion_vector(std::int64_t n, std::int64_t h) {
  if (n < 2) throw std::invalid_argument("quaternion_vector needs n >= 2");
  if (h < 1) throw std::invalid_argument("quaternion_vector needs h >= 1");
  GroupTable group = build_generalized_quaternion(n);
  const Element x = 1;
  const auto y = static_cast<Element>(2 * n);
  // c_1 = y x^-2 y^-1, which equals x^2 in G_n.
  const Element x2 = group.mul(x, x);
  const Element c1 = group.mul(group.mul(y, group.inverse(x2)), group.inverse(y));

  GeneratingVector vec;
  vec.pairs.emplace_back(x, y);
  for (std::int64_t i = 1; i < h; ++i) vec.pairs.emplace_back(group.identity(), group.identity());
  vec.branch.push_back(c1);

  OrbifoldSignature sig(h, {n});
  if (!verify(group, vec, sig).ok()) throw std::logic_error("quaternion generating vector failed verification");
  return {std::move(group), std::move(sig), std::move(vec)};
}

std::optional<GroupAction> unbranched_cyclic(std::int64_t sigma, std::int64_t order) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
  if ((sigma - 1) % order != 0) return std::nullopt;
  GroupTable group = build_cyclic(order);
  const std::int64_t h = (sigma - 1) / order + 1;
  GeneratingVector vec;
  vec.pairs.emplace_back(1, group.identity());
  for (std::int64_t i = 1; i < h; ++i) vec.pairs.emplace_back(group.identity(), group.identity());
  OrbifoldSignature sig(h, {});
  if (!verify(group, vec, sig).ok()) throw std::logic_error("unbranched cyclic vector failed verification");
  return GroupAction{std::move(group), std::move(sig), std::move(vec)};
}

bool all_groups_unbranched_condition(std::int64_t sigma, std::int64_t order) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
  if ((sigma - 1) % order != 0) return false;
  return (sigma - 1) / order + 1 >= max_prime_exponent(order) + 1;
}

std::string_view to_string(ExclusionRule rule) {
  switch (rule) {
    case ExclusionRule::arithmetic: return "arithmetic";
    case ExclusionRule::abelian_r1: return "abelian-r1";
    case ExclusionRule::cyclic_forced: return "cyclic-forced";
    case ExclusionRule::exhausted_search: return "exhausted-search";
  }
  return "arithmetic";
}

ActionWitness make_witness(const GroupTable& g, const OrbifoldSignature& sig, const GeneratingVector& v) {
  ActionWitness w{g.name(), g.order(), sig, v, {}};
  if (g.has_labels()) {
    for (const auto& [a, b] : v.pairs) {
      w.words.push_back(g.label(a));
      w.words.push_back(g.label(b));
    }
    for (Element c : v.branch) w.words.push_back(g.label(c));
  }
  return w;
}

RealizabilityReport realizable(const GroupTable& g, std::int64_t sigma, const SkeletalSignature& skel,
                               std::uint64_t budget) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  RealizabilityReport report;
  const auto order = static_cast<std::int64_t>(g.order());
  const std::string where = " for " + g.name() + " (order " + std::to_string(order) + ")";

  std::vector<std::vector<std::int64_t>> lists;
  if (order >= 2) {
    const auto orders = nontrivial_element_orders(g);
    for_each_period_list(sigma, skel, order, orders, [&](std::span<const std::int64_t> list) {
      lists.emplace_back(list.begin(), list.end());
      return true;
    });
  }
  if (lists.empty()) {
    report.reasons.push_back({ExclusionRule::arithmetic,
                              "no period list drawn from element orders meets the genus formula" + where});
    return report;
  }

  const bool abelian = is_abelian(g);
  bool any_unknown = false;
  std::size_t searched = 0;
  for (const auto& list : lists) {
    OrbifoldSignature sig(skel.h, list);
    if (skel.r == 1 && list[0] == order) {
      report.reasons.push_back({ExclusionRule::cyclic_forced, "signature " + sig.str() + where +
                                                                   ": a period equal to |G| forces G cyclic"});
    }
    if (skel.r == 1 && abelian) {
      report.reasons.push_back({ExclusionRule::abelian_r1, "signature " + sig.str() + where +
                                                                ": c_1 is a product of commutators"});
      continue;
    }
    auto found = search(g, sig, budget);
    if (found.found()) {
      report.verdict = Verdict::exists;
      report.witness = make_witness(g, sig, *found.witness);
      report.reasons.clear();
      return report;
    }
    if (found.verdict == Verdict::unknown) {
      any_unknown = true;
    } else {
      ++searched;
    }
  }
  if (searched > 0) {
    report.reasons.push_back({ExclusionRule::exhausted_search,
                              std::to_string(searched) + " signature(s) searched exhaustively" + where});
  }
  report.verdict = any_unknown ? Verdict::unknown : Verdict::not_exists;
  return report;
}

}  // namespace skelsig
