// skelsig: command-line front end for skeletal-signature queries.
//
// Exit codes: 0 success / verified / exists, 1 refuted / absent,
// 2 usage or input error, 3 partial (unknown verdicts present).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skelsig/catalog.hpp"
#include "skelsig/genvec.hpp"
#include "skelsig/json_io.hpp"
#include "skelsig/plane_geometry.hpp"
#include "skelsig/rh_core.hpp"
#include "skelsig/skeleton_space.hpp"
#include "skelsig/svg_plot.hpp"

#ifndef SKELSIG_DEFAULT_CATALOG
#define SKELSIG_DEFAULT_CATALOG "data/catalog"
#endif

namespace {

using namespace skelsig;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kPartial = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t sigma = 0;
  std::vector<std::int64_t> n;
  std::int64_t h = -1;
  std::int64_t r = -1;
  std::int64_t order = 0;
  std::string sig;
  std::string catalog;
  std::int64_t max_order = 15;
  std::uint64_t budget = default_search_budget;
  unsigned threads = 1;
  std::string format;
  std::string out;
  std::string group;
  std::vector<std::int64_t> primes;
  std::vector<std::int64_t> witness_n;
  std::int64_t h_max = -1;
  std::int64_t r_max = -1;
  std::string csv;
  bool realized = false;
};

std::string catalog_dir(const Options& o) {
  if (!o.catalog.empty()) return o.catalog;
  if (const char* env = std::getenv("SKELSIG_CATALOG"); env && *env) return env;
  return SKELSIG_DEFAULT_CATALOG;
}

CatalogManifest open_catalog(const Options& o) {
  try {
    return load_catalog(catalog_dir(o));
  } catch (const GroupError& e) {
    throw UsageError(std::string("catalog: ") + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

void emit_json(const Options& o, const json& doc) { emit(o, doc.dump(2) + "\n"); }

json base_config(const std::string& command, const Options& o) {
  json c{{"command", command}};
  if (o.sigma) c["sigma"] = o.sigma;
  c["budget"] = o.budget;
  c["threads"] = o.threads;
  return c;
}

void require_sigma(const Options& o) {
  if (o.sigma < 2) throw UsageError("--sigma must be >= 2");
}

int cmd_rh(const Options& o) {
  OrbifoldSignature sig;
  try {
    sig = parse_signature(o.sig);
  } catch (const SignatureParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << o.sig << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kUsage;
  }
  if (o.order < 1) throw UsageError("--order must be >= 1");
  const Rational genus = rh_genus(o.order, sig);
  json config{{"command", "rh"}, {"order", o.order}, {"sig", o.sig}};
  json doc{{"config", config},
           {"order", o.order},
           {"signature", io::to_json(sig)},
           {"genus", io::to_json(genus)},
           {"integralGenus", genus.is_integer() && genus >= Rational(2)}};
  if (o.sigma) {
    config["sigma"] = o.sigma;
    doc["config"] = config;
    doc["holds"] = rh_holds(o.sigma, o.order, sig);
  } else {
    doc["holds"] = nullptr;
  }
  emit_json(o, doc);
  return kOk;
}

int cmd_gaps(const Options& o) {
  require_sigma(o);
  std::vector<std::int64_t> ns = o.n.empty() ? std::vector<std::int64_t>{3, 4} : o.n;
  json config = base_config("gaps", o);
  config["n"] = ns;
  json gaps = json::array(), triangles = json::array();
  for (auto n : ns) {
    if (n < 3) throw UsageError("--n must be >= 3 for gaps");
    const auto g = gap(o.sigma, n);
    json item = io::to_json(g);
    const auto lattice = integer_points(g);
    json raw = json::array(), exc = json::array();
    for (const auto& p : lattice.raw) raw.push_back(io::to_json(p));
    for (const auto& p : lattice.on_exception_line) exc.push_back(io::to_json(p));
    item["latticePoints"] = raw;
    item["exceptionLinePoints"] = exc;
    gaps.push_back(std::move(item));
    for (auto m : {n, n + 1, n + 2}) {
      if (m > n + 1 && g.span == GapSpan::next) break;
      triangles.push_back(io::to_json(triangle(o.sigma, m)));
    }
  }
  emit_json(o, {{"config", config},
                {"commonPoint", io::to_json(common_point(o.sigma))},
                {"gaps", gaps},
                {"triangles", triangles}});
  return kOk;
}

int cmd_verify_gap(const Options& o) {
  require_sigma(o);
  if (o.n.size() != 1 || o.n[0] < 3) throw UsageError("verify-gap needs exactly one --n >= 3");
  const auto catalog = open_catalog(o);
  const auto report = verify_gap(o.sigma, o.n[0], catalog, o.budget);
  json config = base_config("verify-gap", o);
  config["n"] = o.n[0];
  config["catalog"] = catalog_dir(o);
  emit_json(o, {{"config", config}, {"report", io::to_json(report)}});
  switch (report.conclusion) {
    case GapConclusion::verified: return kOk;
    case GapConclusion::refuted: return kNegative;
    case GapConclusion::partial: return kPartial;
  }
  return kPartial;
}

int cmd_missing(const Options& o) {
  require_sigma(o);
  std::vector<SkeletalSignature> points;
  try {
    points = missing_points(o.sigma, o.h);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::logic_error& e) {
    std::cerr << "refuted: " << e.what() << '\n';
    return kNegative;
  }
  json config = base_config("missing", o);
  config["h"] = o.h;
  json list = json::array();
  bool all_absent = true;
  for (const auto& p : points) {
    const bool absent = !rh_admissible(o.sigma, p).found();
    all_absent &= absent;
    list.push_back({{"point", io::to_json(p)}, {"inGap", true}, {"arithmetic", absent ? "not_exists" : "exists"}});
  }
  emit_json(o, {{"config", config}, {"points", list}});
  return all_absent ? kOk : kNegative;
}

FigureDataset kspace_as_dataset(const KSpaceApproximation& k) {
  FigureDataset d;
  d.sigma = k.sigma;
  d.h_max = k.h_max;
  d.r_max = k.r_max;
  for (const auto& p : k.admissible) {
    d.points.push_back({p, k.realized.contains(p) ? PointStatus::realized : PointStatus::admissible});
  }
  return d;
}

int cmd_kspace(const Options& o) {
  require_sigma(o);
  json config = base_config("kspace", o);
  config["hMax"] = o.h_max < 0 ? o.sigma + 1 : o.h_max;
  config["rMax"] = o.r_max < 0 ? 2 * o.sigma + 2 : o.r_max;
  config["realized"] = o.realized;
  KSpaceApproximation k;
  if (o.realized) {
    const auto catalog = open_catalog(o);
    config["catalog"] = catalog_dir(o);
    config["maxOrder"] = o.max_order;
    k = realizable_set(o.sigma, catalog, o.max_order, o.budget, o.h_max, o.r_max, o.threads);
  } else {
    k.sigma = o.sigma;
    k.h_max = config["hMax"];
    k.r_max = config["rMax"];
    k.admissible = admissible_set(o.sigma, k.h_max, k.r_max, o.threads);
    k.scope = "genus-formula admissible points only";
  }
  if (o.format == "csv") {
    emit(o, io::dataset_csv(kspace_as_dataset(k)));
  } else if (o.format.empty() || o.format == "json") {
    emit_json(o, {{"config", config}, {"kspace", io::to_json(k)}});
  } else {
    throw UsageError("kspace supports --format json|csv");
  }
  return k.undetermined.empty() ? kOk : kPartial;
}

int cmd_sporadic(const Options& o) {
  if (o.h < 2) throw UsageError("sporadic needs --h >= 2");
  const auto catalog = open_catalog(o);
  SporadicReport report;
  try {
    report = sporadic_analysis(o.h, o.primes, o.witness_n, catalog, o.budget);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json config = base_config("sporadic", o);
  config["h"] = o.h;
  config["primes"] = o.primes;
  config["witnessN"] = o.witness_n;
  config["catalog"] = catalog_dir(o);
  emit_json(o, {{"config", config}, {"report", io::to_json(report)}});
  bool witnesses_ok = true;
  for (const auto& w : report.witnesses) witnesses_ok &= w.verified;
  if (report.nonexistence_verdict == Verdict::exists || !witnesses_ok) return kNegative;
  if (report.nonexistence_verdict == Verdict::unknown) return kPartial;
  return kOk;
}

int cmd_genvec(const Options& o) {
  OrbifoldSignature sig;
  try {
    sig = parse_signature(o.sig);
  } catch (const SignatureParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << o.sig << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kUsage;
  }
  std::optional<GroupTable> group;
  try {
    group = resolve_group_spec(o.group, catalog_dir(o));
  } catch (const GroupError& e) {
    throw UsageError(std::string("group: ") + e.what());
  }
  const auto result = search(*group, sig, o.budget);
  json config = base_config("genvec", o);
  config["group"] = o.group;
  config["sig"] = o.sig;
  json doc{{"config", config},
           {"group", group->name()},
           {"order", group->order()},
           {"signature", io::to_json(sig)},
           {"genus", io::to_json(rh_genus(static_cast<std::int64_t>(group->order()), sig))},
           {"verdict", to_string(result.verdict)}};
  doc["witness"] = result.witness ? io::to_json(make_witness(*group, sig, *result.witness)) : json(nullptr);
  emit_json(o, doc);
  switch (result.verdict) {
    case Verdict::exists: return kOk;
    case Verdict::not_exists: return kNegative;
    case Verdict::unknown: return kPartial;
  }
  return kPartial;
}

int cmd_plot(const Options& o) {
  require_sigma(o);
  std::optional<CatalogManifest> catalog;
  catalog = open_catalog(o);
  FigureOptions options;
  options.catalog = &*catalog;
  options.with_realized = o.realized;
  options.max_order = o.max_order;
  options.budget = o.budget;
  options.threads = o.threads;
  const auto dataset = figure_dataset(o.sigma, options);

  json config = base_config("plot", o);
  config["realized"] = o.realized;
  config["maxOrder"] = o.max_order;
  const std::string format = o.format.empty() ? "svg" : o.format;
  config["format"] = format;

  if (!o.csv.empty()) {
    std::ofstream side(o.csv, std::ios::binary);
    if (!side) throw UsageError("cannot write " + o.csv);
    side << io::dataset_csv(dataset);
  }
  if (format == "svg") {
    json metadata = config;
    metadata.erase("threads");
    emit(o, render_svg(dataset, metadata.dump()));
  } else if (format == "csv") {
    emit(o, io::dataset_csv(dataset));
  } else if (format == "json") {
    emit_json(o, {{"config", config}, {"dataset", io::to_json(dataset)}});
  } else {
    throw UsageError("plot supports --format svg|csv|json");
  }
  return kOk;
}

int cmd_catalog(const Options& o) {
  const auto catalog = open_catalog(o);
  json entries = json::array();
  for (const auto& e : catalog.entries()) {
    const auto fp = fingerprint(e.group);
    entries.push_back({{"order", e.order},
                       {"spec", e.spec},
                       {"label", e.label},
                       {"complete", e.complete},
                       {"abelian", fp.abelian},
                       {"elementOrders", fp.element_orders}});
  }
  json config{{"command", "catalog"}, {"catalog", catalog_dir(o)}};
  emit_json(o, {{"config", config}, {"completeThrough", catalog.complete_through()}, {"entries", entries}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skeletal signatures of finite group actions on closed Riemann surfaces"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--catalog", o.catalog, "Catalog directory (default $SKELSIG_CATALOG or bundled)");
    sub->add_option("--budget", o.budget, "Search budget in candidate entries");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
    sub->add_option("--format", o.format, "json|csv|svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  };

  auto* rh = app.add_subcommand("rh", "Evaluate the Riemann-Hurwitz genus of a signature");
  rh->add_option("--order", o.order, "Group order N")->required();
  rh->add_option("--sig", o.sig, "Signature \"(h;n1,n2,...)\"")->required();
  rh->add_option("--sigma", o.sigma, "Compare against this genus");
  add_common(rh);

  auto* gaps = app.add_subcommand("gaps", "Gap regions, corners and lattice points");
  gaps->add_option("--sigma", o.sigma)->required();
  gaps->add_option("--n", o.n, "Lower indices N >= 3 (default 3 4)");
  add_common(gaps);

  auto* vgap = app.add_subcommand("verify-gap", "Check every lattice point of a gap");
  vgap->add_option("--sigma", o.sigma)->required();
  vgap->add_option("--n", o.n)->required();
  add_common(vgap);

  auto* missing = app.add_subcommand("missing", "Persistently missing points at h = 2 or 3");
  missing->add_option("--sigma", o.sigma)->required();
  missing->add_option("--h", o.h)->required();
  add_common(missing);

  auto* kspace = app.add_subcommand("kspace", "Admissible and realized skeletal signatures");
  kspace->add_option("--sigma", o.sigma)->required();
  kspace->add_option("--h-max", o.h_max);
  kspace->add_option("--r-max", o.r_max);
  kspace->add_option("--max-order", o.max_order);
  kspace->add_flag("--realized", o.realized, "Search catalog groups for witnesses");
  add_common(kspace);

  auto* sporadic = app.add_subcommand("sporadic", "Sporadic-point analysis for (h,1)");
  sporadic->add_option("--h", o.h)->required();
  sporadic->add_option("--primes", o.primes)->delimiter(',')->required();
  sporadic->add_option("--witness-n", o.witness_n)->delimiter(',');
  add_common(sporadic);

  auto* genvec = app.add_subcommand("genvec", "Search for a generating vector");
  genvec->add_option("--group", o.group, "Group spec, e.g. quaternion:2")->required();
  genvec->add_option("--sig", o.sig)->required();
  add_common(genvec);

  auto* plot = app.add_subcommand("plot", "Render the (h,r)-plane");
  plot->add_option("--sigma", o.sigma)->required();
  plot->add_option("--csv", o.csv, "CSV sidecar path");
  plot->add_option("--max-order", o.max_order);
  plot->add_flag("--realized", o.realized);
  add_common(plot);

  auto* catalog = app.add_subcommand("catalog", "Validate and list a group catalog");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rh) return cmd_rh(o);
    if (*gaps) return cmd_gaps(o);
    if (*vgap) return cmd_verify_gap(o);
    if (*missing) return cmd_missing(o);
    if (*kspace) return cmd_kspace(o);
    if (*sporadic) return cmd_sporadic(o);
    if (*genvec) return cmd_genvec(o);
    if (*plot) return cmd_plot(o);
    if (*catalog) return cmd_catalog(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
