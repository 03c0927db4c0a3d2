#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skelsig/groups.hpp"
#include "skelsig/rh_core.hpp"

// Generating vectors (a_1, b_1, ..., a_h, b_h, c_1, ..., c_r) for a finite
// group G and a signature (h; n_1, ..., n_r):
//   1. the entries generate G,
//   2. c_j has order n_j,
//   3. [a_1,b_1] ... [a_h,b_h] c_1 ... c_r = 1, with [a,b] = a^-1 b^-1 a b.
// Together with the genus formula, existence of such a vector is equivalent
// to existence of an action of G with that signature.
namespace skelsig {

struct GeneratingVector {
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Element> branch;

  friend bool operator==(const GeneratingVector&, const GeneratingVector&) = default;
};

struct VerifyReport {
  bool generates = false;
  bool orders_match = false;
  bool relation_holds = false;
  std::size_t generated_order = 0;
  Element relation_value = 0;

  bool ok() const { return generates && orders_match && relation_holds; }
};

/// Checks the three conditions separately. Throws std::invalid_argument when
/// the vector's shape does not match the signature or an index is out of range.
VerifyReport verify(const GroupTable& g, const GeneratingVector& v, const OrbifoldSignature& sig);

inline constexpr std::uint64_t default_search_budget = 100'000'000;

/// Depth-first search over entries in ascending index order; the first
/// witness found is returned. Budget counts candidate entries tried.
///
/// Sound prunes only: c_r is solved from the relation, each c_j ranges over
/// elements of order n_j, an abelian G with r = 1 is rejected outright (c_1
/// would be a product of trivial commutators), and search states
/// (position, running product, generated subgroup) already shown to be dead
/// ends are not re-entered.
SearchResult<GeneratingVector> search(const GroupTable& g, const OrbifoldSignature& sig,
                                      std::uint64_t budget = default_search_budget);

/// A verified action: group, signature, vector.
struct GroupAction {
  GroupTable group;
  OrbifoldSignature signature;
  GeneratingVector vector;
};

/// Generalized quaternion G_n with signature (h; n) and the vector
/// (x, y, e, e, ..., e, c_1) where c_1 = y x^-2 y^-1 = x^2.
/// Genus is 2n(2(h-1)+1) - 1. n >= 2, h >= 1.
GroupAction quaternion_vector(std::int64_t n, std::int64_t h);

/// When N divides sigma-1: C_N with signature ((sigma-1)/N + 1; ) and the
/// vector a_1 = generator, every other entry trivial.
std::optional<GroupAction> unbranched_cyclic(std::int64_t sigma, std::int64_t order);

/// N | sigma-1 and (sigma-1)/N + 1 >= e + 1, e the largest exponent in the
/// prime factorization of N.
bool all_groups_unbranched_condition(std::int64_t sigma, std::int64_t order);

enum class ExclusionRule { arithmetic, abelian_r1, cyclic_forced, exhausted_search };

std::string_view to_string(ExclusionRule rule);

struct ExclusionReason {
  ExclusionRule rule;
  std::string scope;
};

struct ActionWitness {
  std::string group_name;
  std::size_t group_order = 0;
  OrbifoldSignature signature;
  GeneratingVector vector;
  std::vector<std::string> words;  // element labels, empty if the group has none
};

ActionWitness make_witness(const GroupTable& g, const OrbifoldSignature& sig, const GeneratingVector& v);

struct RealizabilityReport {
  Verdict verdict = Verdict::not_exists;
  std::optional<ActionWitness> witness;
  std::vector<ExclusionReason> reasons;
};

/// Decides whether G acts on a genus-sigma surface with skeletal signature
/// (h, r). Periods are drawn from the element orders of G, every period list
/// satisfying the genus formula at |G| is searched.
RealizabilityReport realizable(const GroupTable& g, std::int64_t sigma, const SkeletalSignature& skel,
                               std::uint64_t budget = default_search_budget);

}  // namespace skelsig
