#pragma once

#include <optional>
#include <string>

#include "stablegon/diagonals.hpp"
#include "stablegon/io.hpp"
#include "stablegon/module.hpp"
#include "stablegon/qseries.hpp"

namespace sgon {

extern const char* const kVersion;

// round half away from zero to 6 places
std::string decimal6(const Rat& r);

json dim_to_json(const DimVector& d);
json map_to_json(const RepMap& f);

json diagonals_report(const PolygonAnalysis& a);
json stability_report_json(const TotalStabilityReport& r);
json ext_report_json(const ExtQuiverReport& r);
json series_to_json(const QSeries& s);

struct VerifyOutcome {
  bool ok = false;
  json report;
};

// relations, stability, triangle orientation (E), intersection quiver, target, Ext-quiver, total stability
VerifyOutcome verify_polygon(const RawPolygon& raw, const std::optional<DynkinQuiver>& target);

std::string render_svg(const StablePolygon& p);

}  // namespace sgon
