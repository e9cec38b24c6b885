// Library facade used by the remote-analysis service: one call per
// operation, pure function of the model text.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iotforge/diagnostics.hpp"
#include "iotforge/sched.hpp"
#include "iotforge/thingml.hpp"

namespace iotforge {

enum class ApiOperation { Validate, Generate, Analyze };

/// Parses "validate" / "generate" / "analyze".
std::optional<ApiOperation> parse_operation(std::string_view name);

struct ApiOutcome {
    enum class Status { Ok, Invalid, Unschedulable, Error };
    Status status = Status::Error;
    std::vector<Diagnostic> diagnostics;
    std::optional<SchedReport> report;  // analyze only
    std::vector<ThingMLUnit> units;     // generate only
};

/// Stateless: identical inputs give identical outcomes.
ApiOutcome run_operation(const std::string& model_text, ApiOperation operation);

/// Full response body: `{status, diagnostics, report?, units?}`. The report
/// object is byte-compatible with the CLI's JSON report rendering.
std::string outcome_body_json(const ApiOutcome& outcome);

}  // namespace iotforge
