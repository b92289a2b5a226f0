#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "banach_cover/coderivative.hpp"
#include "banach_cover/covering.hpp"
#include "banach_cover/fixpoint.hpp"
#include "banach_cover/lp_function.hpp"
#include "banach_cover/lp_space.hpp"
#include "banach_cover/projections.hpp"

namespace bcover {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "banach-cover/1";

json to_json(const LpVector& x);
json to_json(const DualVector& w);
json to_json(const IndexMask& mask);
json to_json(const MeasureGrid& grid);
json to_json(const StepFunction& f);
json to_json(const ConvexSet& set);
json to_json(const CoderivativeValue& value);
json to_json(const QuotientReport& report);
json to_json(const CoveringReport& report);
json to_json(const FixpointRecord& record);

LpVector lp_vector_from_json(const json& j);
DualVector dual_vector_from_json(const json& j);
IndexMask mask_from_json(const json& j);
MeasureGrid grid_from_json(const json& j);
StepFunction step_function_from_json(const json& j);

/// Tagged set descriptor. The cone tag carries no grid, so one must be
/// supplied for it out of band.
ConvexSet set_from_json(const json& j, const std::optional<MeasureGrid>& grid_for_cone);

/// Fixed-point formatting: '.' decimal separator, 17 significant digits, so
/// doubles round-trip losslessly through CSV.
std::string format_double(double v);

std::string covering_report_csv(const CoveringReport& report);
std::string fixpoint_records_csv(const std::vector<FixpointRecord>& records);

}  // namespace bcover
