#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "skelsig/catalog.hpp"
#include "skelsig/groups.hpp"

using namespace skelsig;

namespace {

std::multiset<std::int64_t> order_multiset(const GroupTable& g) {
  std::multiset<std::int64_t> out;
  for (Element a = 0; a < g.order(); ++a) out.insert(oracle::order_of(g, a));
  return out;
}

GroupErrorKind kind_of(const std::string& text) {
  std::istringstream in(text);
  try {
    read_cayley(in);
  } catch (const GroupError& e) {
    return e.kind();
  }
  FAIL("table accepted");
  return GroupErrorKind::bad_format;
}

}  // namespace

TEST_CASE("builders") {
  const auto c6 = build_cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(is_cyclic(c6));
  CHECK(is_abelian(c6));
  CHECK(c6.label(2) == "g^2");
  CHECK(is_cyclic(build_cyclic(7)));

  const auto e = build_elementary_abelian(3, 2);
  CHECK(e.order() == 9);
  CHECK(is_abelian(e));
  CHECK_FALSE(is_cyclic(e));
  CHECK(order_multiset(e) == std::multiset<std::int64_t>{1, 3, 3, 3, 3, 3, 3, 3, 3});

  const auto d5 = build_dihedral(5);
  CHECK(d5.order() == 10);
  CHECK_FALSE(is_abelian(d5));
  CHECK(order_multiset(d5).count(2) == 5);

  const auto q8 = build_generalized_quaternion(2);
  CHECK(q8.order() == 8);
  CHECK(order_multiset(q8) == std::multiset<std::int64_t>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK_FALSE(is_abelian(q8));
  CHECK_FALSE(is_cyclic(q8));
  const auto q12 = build_generalized_quaternion(3);
  CHECK(q12.order() == 12);
  CHECK(q12.element_order(1) == 6);

  const auto prod = direct_product(build_cyclic(4), build_cyclic(2));
  CHECK(prod.order() == 8);
  CHECK(prod.name() == "C4 x C2");
  CHECK(is_abelian(prod));
  CHECK_FALSE(is_cyclic(prod));
  CHECK(is_cyclic(direct_product(build_cyclic(3), build_cyclic(2))));

  CHECK_THROWS_AS(build_elementary_abelian(4, 2), GroupError);
  CHECK_THROWS_AS(build_dihedral(0), GroupError);
}

TEST_CASE("quaternion relations and commutator convention") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    const auto q = build_generalized_quaternion(n);
    const Element x = 1, y = static_cast<Element>(2 * n);
    CHECK(oracle::power(q, x, n) == oracle::power(q, y, 2));
    CHECK(q.mul(q.mul(q.inverse(y), x), y) == q.inverse(x));
    // a^-1 b^-1 a b with a = x, b = y gives x^-2
    CHECK(commutator(q, x, y) == q.inverse(q.mul(x, x)));
    CHECK(oracle::closure_size(q, {x, y}) == q.order());
  }
}

TEST_CASE("permutation closure") {
  const Permutation s_gens[] = {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)};
  const auto s3 = build_from_permutations(3, s_gens, "S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3));
  const Permutation c_gens[] = {parse_cycles("(1 2 3 4)", 4)};
  const auto c4 = build_from_permutations(4, c_gens);
  CHECK(c4.order() == 4);
  CHECK(is_cyclic(c4));
  const Permutation a_gens[] = {parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)};
  const auto a4 = build_from_permutations(4, a_gens);
  CHECK(a4.order() == 12);
  CHECK(order_multiset(a4) == std::multiset<std::int64_t>{1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3});
  CHECK(parse_cycles("()", 3).image == std::vector<std::uint32_t>{0, 1, 2});
  CHECK_THROWS_AS(parse_cycles("(1 5)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 4), GroupError);
  const Permutation big[] = {parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(1 2)", 7)};
  try {
    build_from_permutations(7, big, "S7", 100);
    FAIL("cap ignored");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupErrorKind::cap_exceeded);
  }
}

TEST_CASE("table validation") {
  CHECK(kind_of("") == GroupErrorKind::bad_format);
  CHECK(kind_of("order 2\n0 1\n") == GroupErrorKind::bad_format);
  CHECK(kind_of("order 2\n0 1\n1 2\n") == GroupErrorKind::bad_index);
  CHECK(kind_of("order 2\n1 0\n0 1\n") == GroupErrorKind::missing_identity);
  CHECK(kind_of("order 3\n0 1 2\n1 1 0\n2 0 1\n") == GroupErrorKind::not_latin_square);
  // A Latin square with identity that is not associative (order-5 loop).
  CHECK(kind_of("order 5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n") ==
        GroupErrorKind::non_associative);
  try {
    std::istringstream in("order 3\n0 1 2\n1 1 0\n2 0 1\n");
    read_cayley(in);
  } catch (const GroupError& e) {
    CHECK(std::string(e.what()).find("not a group table") != std::string::npos);
  }
  std::istringstream trivial("order 1\n0\n");
  CHECK(read_cayley(trivial).order() == 1);
}

TEST_CASE("cayley round trip") {
  const auto q8 = build_generalized_quaternion(2);
  std::stringstream buf;
  write_cayley(buf, q8);
  const auto back = read_cayley(buf);
  CHECK(back == q8);
  CHECK(back.name() == q8.name());
  CHECK(order_multiset(back) == std::multiset<std::int64_t>{1, 2, 4, 4, 4, 4, 4, 4});
  const auto path = std::filesystem::temp_directory_path() / "skelsig_q8_roundtrip.cayley";
  save_cayley_file(path, q8);
  CHECK(load_cayley_file(path) == q8);
  std::filesystem::remove(path);
}

TEST_CASE("group specs") {
  CHECK(resolve_group_spec("cyclic:5").order() == 5);
  CHECK(resolve_group_spec("elab:2^3").order() == 8);
  CHECK(resolve_group_spec("product:cyclic:2,cyclic:3,cyclic:3").order() == 18);
  CHECK(resolve_group_spec("perm:4:(1 2 3);(2 3 4)").order() == 12);
  CHECK(resolve_group_spec("file:q8.cayley", SKELSIG_CATALOG_DIR).order() == 8);
  CHECK_THROWS_AS(resolve_group_spec("bogus:3"), GroupError);
  CHECK_THROWS_AS(resolve_group_spec("cyclic:x"), GroupError);
}

TEST_CASE("bundled catalog") {
  const auto catalog = load_catalog(SKELSIG_CATALOG_DIR);
  CHECK(catalog.complete_through() == 15);
  // Number of isomorphism classes of groups of each order 1..15.
  const std::int64_t counts[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  std::set<GroupFingerprint> seen;
  for (std::int64_t n = 1; n <= 15; ++n) {
    const auto entries = catalog.of_order(n);
    CHECK(static_cast<std::int64_t>(entries.size()) == counts[n - 1]);
    for (const auto* e : entries) {
      CHECK(e->group.order() == static_cast<std::size_t>(n));
      // Fingerprints separate every pair of groups of order < 16.
      CHECK(seen.insert(fingerprint(e->group)).second);
    }
  }
  const auto q8 = catalog.of_order(8).back();
  CHECK(q8->label == "Q8");
  CHECK(fingerprint(q8->group) == fingerprint(build_generalized_quaternion(2)));
}

TEST_CASE("catalog errors") {
  const auto dir = std::filesystem::temp_directory_path() / "skelsig_bad_catalog";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "manifest.json") << R"([{"order": 4, "spec": "cyclic:5", "label": "C5", "complete": true}])";
  }
  CHECK_THROWS_AS(load_catalog(dir), GroupError);
  {
    std::ofstream(dir / "manifest.json") << R"([{"order": 4, "spec": "cyclic:4")";
  }
  CHECK_THROWS_AS(load_catalog(dir), GroupError);
  {
    std::ofstream(dir / "manifest.json") << R"([{"order": 4, "spec": "file:t.cayley", "label": "T", "complete": true}])";
    std::ofstream(dir / "t.cayley") << "order 4\n0 1 2 3\n1 0\n";
  }
  CHECK_THROWS_AS(load_catalog(dir), GroupError);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(load_catalog(dir), GroupError);

  CatalogManifest partial({CatalogEntry{1, "cyclic:1", "C1", true, build_cyclic(1)},
                           CatalogEntry{2, "cyclic:2", "C2", true, build_cyclic(2)},
                           CatalogEntry{3, "cyclic:3", "C3", false, build_cyclic(3)}});
  CHECK(partial.complete_at(2));
  CHECK_FALSE(partial.complete_at(3));
  CHECK_FALSE(partial.complete_at(4));
  CHECK(partial.complete_through() == 2);
}
