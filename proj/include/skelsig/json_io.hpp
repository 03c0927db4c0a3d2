#pragma once

#include <string>

#include "json.hpp"
#include "skelsig/genvec.hpp"
#include "skelsig/plane_geometry.hpp"
#include "skelsig/skeleton_space.hpp"

// JSON and CSV shapes shared by the command-line tool and its golden tests.
// Exact values are always emitted as "p/q" strings; the decimal field is a
// convenience rounded to six places.
namespace skelsig::io {

using nlohmann::json;

json to_json(const Rational& x);
json to_json(const RationalPoint& p);
json to_json(const SkeletalSignature& s);
json to_json(const OrbifoldSignature& s);
json line_json(const RationalLine& line, const std::string& name = {});
json to_json(const TriangleRegion& t);
json to_json(const GapRegion& g);
json to_json(const ActionWitness& w);
json to_json(const ExclusionReason& r);
json to_json(const RealizabilityReport& r);
json to_json(const PointAnalysis& a);
json to_json(const GapReport& r);
json to_json(const SporadicReport& r);
json to_json(const KSpaceApproximation& k);
json to_json(const FigureDataset& d);

/// Columns h,r,status; one row per dataset point, lexicographic.
std::string dataset_csv(const FigureDataset& d);

}  // namespace skelsig::io
