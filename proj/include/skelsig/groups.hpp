#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Finite groups stored extensionally as validated multiplication tables.
namespace skelsig {

using Element = std::uint32_t;

enum class GroupErrorKind {
  bad_format,
  bad_index,
  missing_identity,
  not_latin_square,
  non_associative,
  bad_parameter,
  malformed_cycle,
  cap_exceeded,
};

class GroupError : public std::runtime_error {
public:
  GroupError(GroupErrorKind kind, const std::string& message);
  GroupErrorKind kind() const { return kind_; }

private:
  GroupErrorKind kind_;
};

/// Immutable multiplication table. Element 0 is the identity; entry (i, j)
/// is the index of g_i * g_j. Construction always runs the full validator:
/// index range, identity row and column, Latin square, associativity.
class GroupTable {
public:
  GroupTable(std::size_t order, std::vector<Element> table, std::string name,
             std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const { return element_order_[a]; }
  std::span<const Element> table() const { return table_; }
  /// Normal-form word for an element when the constructor provided one.
  std::string label(Element a) const;
  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const GroupTable& x, const GroupTable& y) {
    return x.order_ == y.order_ && x.table_ == y.table_;
  }

private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::string name_;
  std::vector<std::string> labels_;
};

GroupTable build_cyclic(std::int64_t n);
GroupTable build_elementary_abelian(std::int64_t p, std::int64_t k);
GroupTable build_dihedral(std::int64_t n);
/// <x, y | x^n = y^2, y^-1 x y = x^-1>, order 4n, elements x^a y^b at index a + 2n b.
GroupTable build_generalized_quaternion(std::int64_t n);
/// Pairs (a, b) at index a * |B| + b.
GroupTable direct_product(const GroupTable& first, const GroupTable& second);

struct Permutation {
  std::vector<std::uint32_t> image;  // 0-based: point i maps to image[i]
};

/// Parses "(1 2 3)(4 5)" over {1..degree}; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Closure of the generators under composition (apply left factor first).
GroupTable build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                   std::string name = "perm", std::size_t cap = 4096);

bool is_abelian(const GroupTable& g);
bool is_cyclic(const GroupTable& g);
inline std::size_t element_order(const GroupTable& g, Element a) { return g.element_order(a); }
/// a^-1 b^-1 a b.
Element commutator(const GroupTable& g, Element a, Element b);

/// Membership mask of the subgroup generated by the given elements.
std::vector<bool> generated_subgroup(const GroupTable& g, std::span<const Element> generators);
/// Size of the subgroup generated by the given elements.
std::size_t subgroup_closure(const GroupTable& g, std::span<const Element> generators);

/// Sorted element orders plus commutativity; used to tell catalog entries apart.
struct GroupFingerprint {
  std::size_t order;
  bool abelian;
  std::vector<std::size_t> element_orders;

  friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const GroupTable& g);

/// Distinct element orders >= 2, ascending.
std::vector<std::int64_t> nontrivial_element_orders(const GroupTable& g);

// Cayley text format:
//   order N
//   name <label>          (optional)
//   N rows of N integers in [0, N)
// Blank lines and lines starting with # are skipped.
GroupTable read_cayley(std::istream& in, const std::string& fallback_name = "cayley");
void write_cayley(std::ostream& out, const GroupTable& g);
GroupTable load_cayley_file(const std::filesystem::path& path);
void save_cayley_file(const std::filesystem::path& path, const GroupTable& g);

/// Resolves cyclic:n | elab:p^k | dihedral:n | quaternion:n |
/// product:A,B[,C...] | perm:degree:gens;gens | file:path. Relative file
/// paths resolve against base_dir.
GroupTable resolve_group_spec(std::string_view spec, const std::filesystem::path& base_dir = {});

}  // namespace skelsig
