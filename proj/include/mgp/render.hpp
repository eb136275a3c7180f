#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mgp/hilbert.hpp"
#include "mgp/lines.hpp"

namespace mgp {

// Text layers: one 2D block per combination of the trailing axes, rows
// indexed by axis 0 and columns by axis 1, everything 0-indexed. The header
// names the stabilization corner so readers can extend the finite box.
std::string render_layers(const HilbertTable& table);

std::string render_axis_report(const AxisReport& report);

std::string render_checks(const std::vector<CheckResult>& checks);

nlohmann::json table_to_json(const HilbertTable& table);

nlohmann::json axis_report_to_json(const AxisReport& report);

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace mgp
