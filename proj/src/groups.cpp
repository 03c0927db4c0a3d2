#include "skelsig/groups.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "skelsig/arith.hpp"

namespace skelsig {

GroupError::GroupError(GroupErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

GroupTable::GroupTable(std::size_t order, std::vector<Element> table, std::string name,
                       std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = order_;
  if (n == 0 || table_.size() != n * n) {
    throw GroupError(GroupErrorKind::bad_format, "table size does not match order " + std::to_string(n));
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw GroupError(GroupErrorKind::bad_format, "label count does not match order");
  }
  for (Element e : table_) {
    if (e >= n) throw GroupError(GroupErrorKind::bad_index, "element index " + std::to_string(e) + " out of range");
  }
  for (Element i = 0; i < n; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) {
      throw GroupError(GroupErrorKind::missing_identity, "element 0 is not a two-sided identity");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[i * n + j]]++) {
        throw GroupError(GroupErrorKind::not_latin_square, "not a group table: row " + std::to_string(i) + " repeats an entry");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table_[j * n + i]]++) {
        throw GroupError(GroupErrorKind::not_latin_square, "not a group table: column " + std::to_string(i) + " repeats an entry");
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw GroupError(GroupErrorKind::non_associative,
                           "table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                               "," + std::to_string(c) + ")");
        }
      }
    }
  }

  inverse_.resize(n);
  element_order_.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (a == 0) continue;
    std::size_t k = 1;
    for (Element p = a; p != 0; p = mul(p, a)) ++k;
    element_order_[a] = k;
  }
}

std::string GroupTable::label(Element a) const {
  if (!labels_.empty()) return labels_.at(a);
  return "#" + std::to_string(a);
}

namespace {

std::size_t checked_size(std::int64_t n, const char* what) {
  if (n < 1 || n > 1'000'000) throw GroupError(GroupErrorKind::bad_parameter, std::string(what) + " out of range");
  return static_cast<std::size_t>(n);
}

std::string power_label(const char* symbol, std::int64_t k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

}  // namespace

GroupTable build_cyclic(std::int64_t n) {
  const std::size_t order = checked_size(n, "cyclic order");
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    labels[i] = i == 0 ? "e" : power_label("g", static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < order; ++j) table[i * order + j] = static_cast<Element>((i + j) % order);
  }
  return GroupTable(order, std::move(table), "C" + std::to_string(n), std::move(labels));
}

GroupTable build_elementary_abelian(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw GroupError(GroupErrorKind::bad_parameter, "elementary abelian group needs prime p");
  if (k < 1) throw GroupError(GroupErrorKind::bad_parameter, "elementary abelian rank must be >= 1");
  std::int64_t order = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    order *= p;
    checked_size(order, "elementary abelian order");
  }
  const auto n = static_cast<std::size_t>(order);
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // digit-wise addition mod p
      std::size_t x = a, y = b, sum = 0, place = 1;
      for (std::int64_t d = 0; d < k; ++d) {
        sum += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      table[a * n + b] = static_cast<Element>(sum);
    }
  }
  std::string name = "C" + std::to_string(p);
  if (k > 1) name += "^" + std::to_string(k);
  return GroupTable(n, std::move(table), name);
}

GroupTable build_dihedral(std::int64_t n) {
  const std::size_t m = checked_size(n, "dihedral parameter");
  const std::size_t order = 2 * m;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  // r^a s^b at index a + m b; s r = r^-1 s.
  for (std::size_t i = 0; i < order; ++i) {
    const std::size_t a = i % m, b = i / m;
    std::string word = power_label("r", static_cast<std::int64_t>(a)) + (b ? "s" : "");
    labels[i] = word.empty() ? "e" : word;
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t c = j % m, d = j / m;
      const std::size_t exp = b == 0 ? (a + c) % m : (a + m - c) % m;
      table[i * order + j] = static_cast<Element>(exp + m * ((b + d) % 2));
    }
  }
  return GroupTable(order, std::move(table), "D" + std::to_string(n), std::move(labels));
}

GroupTable build_generalized_quaternion(std::int64_t n) {
  if (n < 2) throw GroupError(GroupErrorKind::bad_parameter, "generalized quaternion group needs n >= 2");
  const std::size_t half = 2 * checked_size(n, "quaternion parameter");
  const std::size_t order = 2 * half;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    const std::size_t a = i % half, b = i / half;
    std::string word = power_label("x", static_cast<std::int64_t>(a)) + (b ? "y" : "");
    labels[i] = word.empty() ? "e" : word;
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t c = j % half, d = j / half;
      std::size_t exp, ybit;
      if (b == 0) {
        exp = (a + c) % half;
        ybit = d;
      } else {
        // x^a y x^c y^d = x^(a-c) y^(1+d), and y^2 = x^n
        exp = (a + half - c) % half;
        ybit = 1 + d;
        if (ybit == 2) {
          exp = (exp + static_cast<std::size_t>(n)) % half;
          ybit = 0;
        }
      }
      table[i * order + j] = static_cast<Element>(exp + half * ybit);
    }
  }
  return GroupTable(order, std::move(table), "Q" + std::to_string(4 * n), std::move(labels));
}

GroupTable direct_product(const GroupTable& first, const GroupTable& second) {
  const std::size_t na = first.order(), nb = second.order(), n = na * nb;
  if (n > 1'000'000) throw GroupError(GroupErrorKind::bad_parameter, "direct product too large");
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element a = first.mul(static_cast<Element>(i / nb), static_cast<Element>(j / nb));
      const Element b = second.mul(static_cast<Element>(i % nb), static_cast<Element>(j % nb));
      table[i * n + j] = static_cast<Element>(a * nb + b);
    }
  }
  std::vector<std::string> labels;
  if (first.has_labels() && second.has_labels()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = "(" + first.label(static_cast<Element>(i / nb)) + "," +
                  second.label(static_cast<Element>(i % nb)) + ")";
    }
  }
  return GroupTable(n, std::move(table), first.name() + " x " + second.name(), std::move(labels));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation perm;
  perm.image.resize(degree);
  std::iota(perm.image.begin(), perm.image.end(), 0u);
  std::vector<bool> used(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw GroupError(GroupErrorKind::malformed_cycle,
                     "malformed cycle '" + std::string(text) + "': " + why + " at " + std::to_string(pos));
  };
  skip_ws();
  if (pos == text.size()) fail("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) fail("point exceeds degree");
        ++pos;
      }
      if (value < 1) fail("points are numbered from 1");
      if (used[value - 1]) fail("point repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      perm.image[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return perm;
}

GroupTable build_from_permutations(std::size_t degree, std::span<const Permutation> generators,
                                   std::string name, std::size_t cap) {
  if (degree == 0) throw GroupError(GroupErrorKind::bad_parameter, "permutation degree must be >= 1");
  for (const auto& g : generators) {
    if (g.image.size() != degree) throw GroupError(GroupErrorKind::bad_parameter, "generator has wrong degree");
    std::vector<bool> hit(degree);
    for (auto x : g.image) {
      if (x >= degree || hit[x]) throw GroupError(GroupErrorKind::bad_parameter, "generator is not a permutation");
      hit[x] = true;
    }
  }
  using Perm = std::vector<std::uint32_t>;
  auto compose = [&](const Perm& first, const Perm& then) {
    Perm out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = then[first[i]];
    return out;
  };

  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<Perm> elements{identity};
  std::map<Perm, Element> index{{identity, 0}};
  for (std::size_t at = 0; at < elements.size(); ++at) {
    for (const auto& g : generators) {
      Perm next = compose(elements[at], g.image);
      if (index.contains(next)) continue;
      if (elements.size() >= cap) {
        throw GroupError(GroupErrorKind::cap_exceeded, "permutation group exceeds " + std::to_string(cap) + " elements");
      }
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index.at(compose(elements[i], elements[j]));
  }
  return GroupTable(n, std::move(table), std::move(name));
}

bool is_abelian(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const GroupTable& g) {
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == g.order()) return true;
  }
  return false;
}

Element commutator(const GroupTable& g, Element a, Element b) {
  return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

std::vector<bool> generated_subgroup(const GroupTable& g, std::span<const Element> generators) {
  std::vector<bool> member(g.order());
  std::vector<Element> queue{0};
  member[0] = true;
  for (std::size_t at = 0; at < queue.size(); ++at) {
    for (Element s : generators) {
      const Element next = g.mul(queue[at], s);
      if (!member[next]) {
        member[next] = true;
        queue.push_back(next);
      }
    }
  }
  return member;
}

std::size_t subgroup_closure(const GroupTable& g, std::span<const Element> generators) {
  const auto member = generated_subgroup(g, generators);
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint fp{g.order(), is_abelian(g), {}};
  for (Element a = 0; a < g.order(); ++a) fp.element_orders.push_back(g.element_order(a));
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  return fp;
}

std::vector<std::int64_t> nontrivial_element_orders(const GroupTable& g) {
  std::vector<std::int64_t> out;
  for (Element a = 1; a < g.order(); ++a) out.push_back(static_cast<std::int64_t>(g.element_order(a)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupTable read_cayley(std::istream& in, const std::string& fallback_name) {
  std::string line;
  std::size_t order = 0;
  std::string name = fallback_name;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      const auto first = out.find_first_not_of(" \t\r");
      if (first != std::string::npos && out[first] != '#') return true;
    }
    return false;
  };
  if (!next_content_line(line)) throw GroupError(GroupErrorKind::bad_format, "empty Cayley file");
  {
    std::istringstream head(line);
    std::string keyword;
    long long value = -1;
    if (!(head >> keyword >> value) || keyword != "order" || value < 1) {
      throw GroupError(GroupErrorKind::bad_format, "first line must be 'order N' with N >= 1");
    }
    order = static_cast<std::size_t>(value);
  }
  std::vector<Element> table;
  table.reserve(order * order);
  std::size_t rows = 0;
  while (rows < order && next_content_line(line)) {
    std::istringstream row(line);
    if (rows == 0 && table.empty() && line.rfind("name", 0) == 0) {
      std::string keyword;
      row >> keyword;
      std::getline(row >> std::ws, name);
      while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) name.pop_back();
      continue;
    }
    std::string token;
    std::size_t count = 0;
    while (row >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw GroupError(GroupErrorKind::bad_format, "non-integer entry '" + token + "'");
      if (v < 0 || static_cast<std::size_t>(v) >= order) {
        throw GroupError(GroupErrorKind::bad_index, "entry " + token + " out of range [0," + std::to_string(order) + ")");
      }
      table.push_back(static_cast<Element>(v));
      ++count;
    }
    if (count != order) {
      throw GroupError(GroupErrorKind::bad_format, "row " + std::to_string(rows) + " has " + std::to_string(count) +
                                                       " entries, expected " + std::to_string(order));
    }
    ++rows;
  }
  if (rows != order) throw GroupError(GroupErrorKind::bad_format, "truncated Cayley table");
  return GroupTable(order, std::move(table), name);
}

void write_cayley(std::ostream& out, const GroupTable& g) {
  out << "order " << g.order() << '\n';
  out << "name " << g.name() << '\n';
  for (Element i = 0; i < g.order(); ++i) {
    for (Element j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << '\n';
  }
}

GroupTable load_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::bad_format, "cannot open Cayley file " + path.string());
  return read_cayley(in, path.stem().string());
}

void save_cayley_file(const std::filesystem::path& path, const GroupTable& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_cayley(out, g);
}

namespace {

std::int64_t spec_int(std::string_view text, std::string_view spec) {
  std::int64_t v = 0;
  if (text.empty()) throw GroupError(GroupErrorKind::bad_parameter, "missing integer in group spec '" + std::string(spec) + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1'000'000'000) {
      throw GroupError(GroupErrorKind::bad_parameter, "bad integer in group spec '" + std::string(spec) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(' || text[i] == '[') ++depth;
    if (text[i] == ')' || text[i] == ']') --depth;
    if (text[i] == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupTable resolve_group_spec(std::string_view spec, const std::filesystem::path& base_dir) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw GroupError(GroupErrorKind::bad_parameter, "group spec '" + std::string(spec) + "' lacks a kind prefix");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);

  if (kind == "cyclic") return build_cyclic(spec_int(rest, spec));
  if (kind == "dihedral") return build_dihedral(spec_int(rest, spec));
  if (kind == "quaternion") return build_generalized_quaternion(spec_int(rest, spec));
  if (kind == "elab") {
    const auto caret = rest.find('^');
    if (caret == std::string_view::npos) return build_elementary_abelian(spec_int(rest, spec), 1);
    return build_elementary_abelian(spec_int(rest.substr(0, caret), spec), spec_int(rest.substr(caret + 1), spec));
  }
  if (kind == "product") {
    const auto parts = split_top_level(rest, ',');
    if (parts.size() < 2) throw GroupError(GroupErrorKind::bad_parameter, "product needs at least two factors");
    GroupTable acc = resolve_group_spec(parts[0], base_dir);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, resolve_group_spec(parts[i], base_dir));
    return acc;
  }
  if (kind == "perm") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw GroupError(GroupErrorKind::bad_parameter, "perm spec needs perm:<degree>:<gens>");
    const auto degree = static_cast<std::size_t>(spec_int(rest.substr(0, second), spec));
    std::vector<Permutation> gens;
    for (auto part : split_top_level(rest.substr(second + 1), ';')) {
      part = trim(part);
      if (!part.empty()) gens.push_back(parse_cycles(part, degree));
    }
    return build_from_permutations(degree, gens, std::string(spec));
  }
  if (kind == "file") {
    std::filesystem::path path{std::string(trim(rest))};
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    return load_cayley_file(path);
  }
  throw GroupError(GroupErrorKind::bad_parameter, "unknown group kind '" + std::string(kind) + "'");
}

}  // namespace skelsig
