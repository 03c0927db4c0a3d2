#include "skelsig/rh_core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "skelsig/arith.hpp"

namespace skelsig {

OrbifoldSignature::OrbifoldSignature(std::int64_t h, std::vector<std::int64_t> n)
    : genus(h), periods(std::move(n)) {
  if (genus < 0) throw std::invalid_argument("quotient genus must be non-negative");
  for (auto p : periods) {
    if (p < 2) throw std::invalid_argument("branching periods must be >= 2");
  }
}

std::string OrbifoldSignature::str() const {
  std::ostringstream os;
  os << '(' << genus << ';';
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) os << ',';
    os << periods[i];
  }
  os << ')';
  return os.str();
}

SignatureParseError::SignatureParseError(std::string message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class SignatureParser {
public:
  explicit SignatureParser(std::string_view text) : text_(text) {}

  OrbifoldSignature parse() {
    skip_ws();
    expect('(');
    std::int64_t h = integer("quotient genus");
    std::vector<std::int64_t> periods;
    skip_ws();
    if (peek() == ';') {
      ++pos_;
      skip_ws();
      if (peek() != ')') {
        for (;;) {
          std::size_t at = pos_;
          std::int64_t n = integer("period");
          if (n < 2) throw SignatureParseError("period must be >= 2", at);
          periods.push_back(n);
          skip_ws();
          if (peek() != ',') break;
          ++pos_;
        }
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw SignatureParseError("trailing characters", pos_);
    return OrbifoldSignature(h, std::move(periods));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw SignatureParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::int64_t integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        throw SignatureParseError(std::string(what) + " too large", start);
      }
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw SignatureParseError(std::string("expected ") + what, start);
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t narrow(int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("period search target overflow");
  }
  return static_cast<std::int64_t>(v);
}

// Non-decreasing period lists as multisets: for each value (ascending) pick a
// multiplicity, largest first, so lists come out in lexicographic order. In
// units of 1/L every period n contributes the integer weight L/n. States
// (value index, remaining count, remaining target) proven empty are memoized.
class PeriodEnumerator {
public:
  PeriodEnumerator(std::span<const std::int64_t> values, std::vector<std::int64_t> weights,
                   const std::function<bool(std::span<const std::int64_t>)>& visit)
      : values_(values), weights_(std::move(weights)), visit_(visit) {}

  void run(std::int64_t count, std::int64_t target) { descend(0, count, target); }

private:
  struct Key {
    std::size_t index;
    std::int64_t count;
    std::int64_t target;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::int64_t>{}(k.target);
      h ^= std::hash<std::int64_t>{}(k.count) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<std::size_t>{}(k.index) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

  bool descend(std::size_t index, std::int64_t count, std::int64_t target) {
    if (count == 0) {
      if (target != 0) return false;
      if (!visit_(current_)) stopped_ = true;
      return true;
    }
    if (index == values_.size()) return false;
    const int128 lightest = weights_.back();
    const int128 heaviest = weights_[index];
    if (target < lightest * count || target > heaviest * count) return false;
    Key key{index, count, target};
    if (dead_.contains(key)) return false;

    bool any = false;
    const std::int64_t w = weights_[index];
    const std::int64_t most = std::min<std::int64_t>(count, target / w);
    for (std::int64_t c = most; c >= 0; --c) {
      current_.insert(current_.end(), static_cast<std::size_t>(c), values_[index]);
      any |= descend(index + 1, count - c, target - c * w);
      current_.resize(current_.size() - static_cast<std::size_t>(c));
      if (stopped_) return true;
    }
    if (!any) dead_.insert(key);
    return any;
  }

  std::span<const std::int64_t> values_;
  std::vector<std::int64_t> weights_;
  const std::function<bool(std::span<const std::int64_t>)>& visit_;
  std::vector<std::int64_t> current_;
  std::unordered_set<Key, KeyHash> dead_;
  bool stopped_ = false;
};

}  // namespace

OrbifoldSignature parse_signature(std::string_view text) {
  return SignatureParser(text).parse();
}

HyperbolicityError::HyperbolicityError(const SkeletalSignature& skel)
    : std::domain_error("hyperbolicity violated: skeletal signature (" + std::to_string(skel.h) +
                        "," + std::to_string(skel.r) + ") forces genus <= 1") {}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::exists: return "exists";
    case Verdict::not_exists: return "not_exists";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Rational rh_genus(std::int64_t order, const OrbifoldSignature& sig) {
  Rational reciprocal_sum{0};
  for (auto n : sig.periods) reciprocal_sum += Rational(1, n);
  Rational bracket = Rational(sig.genus - 1) + Rational(sig.branch_count(), 2) -
                     reciprocal_sum * Rational(1, 2);
  return Rational(1) + Rational(order) * bracket;
}

bool rh_holds(std::int64_t sigma, std::int64_t order, const OrbifoldSignature& sig) {
  return rh_genus(order, sig) == Rational(sigma);
}

void for_each_period_list(std::int64_t sigma, const SkeletalSignature& skel, std::int64_t order,
                          std::span<const std::int64_t> allowed,
                          const std::function<bool(std::span<const std::int64_t>)>& visit) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  if (skel.h < 0 || skel.r < 0) throw std::invalid_argument("skeletal signature must be non-negative");
  if (skel.r == 0) {
    // sigma - 1 = N (h - 1)
    if (static_cast<int128>(order) * (skel.h - 1) == static_cast<int128>(sigma) - 1) {
      visit({});
    }
    return;
  }
  if (allowed.empty()) return;
  if (!std::is_sorted(allowed.begin(), allowed.end()) ||
      std::adjacent_find(allowed.begin(), allowed.end()) != allowed.end() || allowed.front() < 2) {
    throw std::invalid_argument("allowed periods must be strictly ascending and >= 2");
  }

  std::int64_t scale = order;
  for (auto v : allowed) scale = checked_lcm(scale, v);

  // sum 1/n_j = 2(h-1) + r - 2(sigma-1)/N, multiplied through by scale.
  int128 target = (static_cast<int128>(2) * (skel.h - 1) + skel.r) * scale -
                    static_cast<int128>(2) * (sigma - 1) * (scale / order);
  if (target <= 0) return;

  std::vector<std::int64_t> weights;
  weights.reserve(allowed.size());
  for (auto v : allowed) weights.push_back(scale / v);

  PeriodEnumerator(allowed, std::move(weights), visit).run(skel.r, narrow(target));
}

std::vector<std::int64_t> allowed_periods(std::int64_t order, PeriodRule rule) {
  std::vector<std::int64_t> out;
  if (rule == PeriodRule::divides_order) {
    for (auto d : divisors(order)) {
      if (d >= 2) out.push_back(d);
    }
  } else {
    for (std::int64_t n = 2; n <= order; ++n) out.push_back(n);
  }
  return out;
}

SearchResult<std::vector<std::int64_t>> period_feasible(std::int64_t sigma,
                                                        const SkeletalSignature& skel,
                                                        std::int64_t order, PeriodRule rule) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
  const auto allowed = allowed_periods(order, rule);
  std::optional<std::vector<std::int64_t>> first;
  for_each_period_list(sigma, skel, order, allowed, [&](std::span<const std::int64_t> list) {
    first.emplace(list.begin(), list.end());
    return false;
  });
  if (first) return SearchResult<std::vector<std::int64_t>>::exists(std::move(*first));
  return SearchResult<std::vector<std::int64_t>>::not_exists();
}

std::vector<std::vector<std::int64_t>> all_period_lists(std::int64_t sigma,
                                                        const SkeletalSignature& skel,
                                                        std::int64_t order, PeriodRule rule) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (order < 2) throw std::invalid_argument("group order must be >= 2");
  const auto allowed = allowed_periods(order, rule);
  std::vector<std::vector<std::int64_t>> out;
  for_each_period_list(sigma, skel, order, allowed, [&](std::span<const std::int64_t> list) {
    out.emplace_back(list.begin(), list.end());
    return true;
  });
  return out;
}

bool is_degenerate(const SkeletalSignature& skel) {
  return (skel.h == 0 && skel.r <= 2) || (skel.h == 1 && skel.r == 0);
}

std::int64_t order_bound(std::int64_t sigma, const SkeletalSignature& skel) {
  if (sigma < 2) throw std::invalid_argument("genus must be >= 2");
  if (skel.h < 0 || skel.r < 0) throw std::invalid_argument("skeletal signature must be non-negative");
  if (is_degenerate(skel)) throw HyperbolicityError(skel);
  if (skel.h >= 2) return sigma - 1;
  if (skel.h == 1) return 4 * (sigma - 1);
  return 84 * (sigma - 1);
}

SearchResult<OrderedPeriods> rh_admissible(std::int64_t sigma, const SkeletalSignature& skel,
                                           PeriodRule rule) {
  const std::int64_t bound = order_bound(sigma, skel);
  for (std::int64_t n = 2; n <= bound; ++n) {
    auto found = period_feasible(sigma, skel, n, rule);
    if (found.found()) {
      return SearchResult<OrderedPeriods>::exists({n, std::move(*found.witness)});
    }
  }
  return SearchResult<OrderedPeriods>::not_exists();
}

std::vector<std::int64_t> rh_compatible_orders(std::int64_t sigma, const SkeletalSignature& skel,
                                               PeriodRule rule) {
  const std::int64_t bound = order_bound(sigma, skel);
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (period_feasible(sigma, skel, n, rule).found()) out.push_back(n);
  }
  return out;
}

}  // namespace skelsig
