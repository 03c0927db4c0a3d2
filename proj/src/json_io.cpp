#include "skelsig/json_io.hpp"

#include <cmath>
#include <sstream>

namespace skelsig::io {

namespace {

double rounded(const Rational& x) {
  const double value = static_cast<double>(x.num()) / static_cast<double>(x.den());
  return std::round(value * 1e6) / 1e6;
}

json points_json(const std::vector<SkeletalSignature>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

json reasons_json(const std::vector<ExclusionReason>& reasons) {
  json out = json::array();
  for (const auto& r : reasons) out.push_back(to_json(r));
  return out;
}

}  // namespace

json to_json(const Rational& x) { return {{"fraction", x.str()}, {"decimal", rounded(x)}}; }

json to_json(const RationalPoint& p) { return {{"h", to_json(p.h)}, {"r", to_json(p.r)}}; }

json to_json(const SkeletalSignature& s) { return json::array({s.h, s.r}); }

json to_json(const OrbifoldSignature& s) {
  return {{"h", s.genus}, {"periods", s.periods}, {"text", s.str()}};
}

json line_json(const RationalLine& line, const std::string& name) {
  json out{{"kind", "line"}, {"coefficients", {line.a(), line.b(), line.c()}}, {"equation", line.str()}};
  if (!name.empty()) out["name"] = name;
  return out;
}

json to_json(const TriangleRegion& t) {
  return {{"kind", "triangle"},       {"sigma", t.sigma},       {"N", t.order},
          {"lower", line_json(t.lower)}, {"upper", line_json(t.upper)}, {"apex", to_json(t.apex)},
          {"degenerate", t.degenerate()}};
}

json to_json(const GapRegion& g) {
  return {{"kind", "gap"},
          {"sigma", g.sigma},
          {"N", g.lower_index},
          {"upperIndex", g.upper_index()},
          {"span", g.span == GapSpan::next ? "next" : "skip"},
          {"coefficients", {{"boundaryLower", {g.boundary_lower.a(), g.boundary_lower.b(), g.boundary_lower.c()}},
                            {"boundaryUpper", {g.boundary_upper.a(), g.boundary_upper.b(), g.boundary_upper.c()}}}},
          {"boundaryLower", line_json(g.boundary_lower)},
          {"boundaryUpper", line_json(g.boundary_upper)},
          {"corner", to_json(g.corner)},
          {"exceptionLine", g.exception_line ? line_json(*g.exception_line) : json(nullptr)}};
}

json to_json(const ActionWitness& w) {
  json pairs = json::array();
  for (const auto& [a, b] : w.vector.pairs) pairs.push_back({a, b});
  json out{{"group", w.group_name},
           {"order", w.group_order},
           {"signature", to_json(w.signature)},
           {"vector", {{"pairs", pairs}, {"branch", w.vector.branch}}}};
  out["words"] = w.words.empty() ? json(nullptr) : json(w.words);
  return out;
}

json to_json(const ExclusionReason& r) { return {{"rule", to_string(r.rule)}, {"scope", r.scope}}; }

json to_json(const RealizabilityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
          {"reasons", reasons_json(r.reasons)}};
}

json to_json(const PointAnalysis& a) {
  return {{"point", to_json(a.point)},
          {"verdict", to_string(a.verdict)},
          {"witness", a.witness ? to_json(*a.witness) : json(nullptr)},
          {"reasons", reasons_json(a.reasons)},
          {"compatibleOrders", a.compatible_orders},
          {"uncoveredOrders", a.uncovered_orders}};
}

json to_json(const GapReport& r) {
  json points = json::array();
  for (const auto& v : r.points) {
    json item{{"point", to_json(v.point)},
              {"onExceptionLine", v.on_exception_line},
              {"arithmetic", to_string(v.arithmetic)}};
    if (v.arithmetic_witness) {
      item["arithmeticWitness"] = {{"order", v.arithmetic_witness->order},
                                   {"periods", v.arithmetic_witness->periods}};
    }
    if (v.realizability) item["realizability"] = to_json(*v.realizability);
    points.push_back(std::move(item));
  }
  return {{"gap", to_json(r.gap)}, {"points", points}, {"conclusion", to_string(r.conclusion)}};
}

json to_json(const SporadicReport& r) {
  json genera = json::array();
  for (const auto& g : r.nonexistence) {
    json cases = json::array();
    for (const auto& c : g.cases) {
      cases.push_back({{"divisor", c.divisor},
                       {"period", c.period ? json(*c.period) : json(nullptr)},
                       {"order", c.order ? json(*c.order) : json(nullptr)},
                       {"classification", c.classification},
                       {"verdict", to_string(c.verdict)},
                       {"reasons", reasons_json(c.reasons)},
                       {"witness", c.witness ? to_json(*c.witness) : json(nullptr)}});
    }
    genera.push_back({{"prime", g.prime}, {"sigma", g.sigma}, {"verdict", to_string(g.verdict)}, {"cases", cases}});
  }
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"n", w.n}, {"sigma", w.sigma}, {"verified", w.verified}, {"action", to_json(w.action)}});
  }
  return {{"h", r.h},
          {"nonexistence", genera},
          {"nonexistenceVerdict", to_string(r.nonexistence_verdict)},
          {"witnesses", witnesses}};
}

json to_json(const KSpaceApproximation& k) {
  json realized = json::array();
  for (const auto& [p, w] : k.realized) realized.push_back({{"point", to_json(p)}, {"witness", to_json(w)}});
  return {{"sigma", k.sigma},
          {"box", {{"hMax", k.h_max}, {"rMax", k.r_max}}},
          {"maxOrder", k.max_order},
          {"admissible", points_json(k.admissible)},
          {"realized", realized},
          {"excluded", points_json(k.excluded)},
          {"undetermined", points_json(k.undetermined)},
          {"scope", k.scope}};
}

json to_json(const FigureDataset& d) {
  json lines = json::array();
  for (const auto& l : d.lines) lines.push_back(line_json(l.line, l.name));
  json gaps = json::array();
  for (const auto& g : d.gaps) gaps.push_back(to_json(g));
  json points = json::array();
  for (const auto& p : d.points) points.push_back({{"h", p.point.h}, {"r", p.point.r}, {"status", to_string(p.status)}});
  return {{"sigma", d.sigma},
          {"viewport", {{"hMax", d.h_max}, {"rMax", d.r_max}}},
          {"lines", lines},
          {"guide", line_json(d.guide, "r=1")},
          {"gaps", gaps},
          {"points", points}};
}

std::string dataset_csv(const FigureDataset& d) {
  std::ostringstream os;
  os << "h,r,status\n";
  for (const auto& p : d.points) os << p.point.h << ',' << p.point.r << ',' << to_string(p.status) << '\n';
  return os.str();
}

}  // namespace skelsig::io
