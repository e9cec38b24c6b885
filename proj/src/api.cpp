#include "iotforge/api.hpp"

#include <json.hpp>

#include "iotforge/parser.hpp"
#include "iotforge/validator.hpp"

namespace iotforge {

std::optional<ApiOperation> parse_operation(std::string_view name) {
    if (name == "validate") return ApiOperation::Validate;
    if (name == "generate") return ApiOperation::Generate;
    if (name == "analyze") return ApiOperation::Analyze;
    return std::nullopt;
}

ApiOutcome run_operation(const std::string& model_text, ApiOperation operation) {
    ApiOutcome outcome;
    ParseResult parsed = parse_model({"<request>", model_text});
    if (!parsed.ok()) {
        outcome.status = ApiOutcome::Status::Invalid;
        outcome.diagnostics = std::move(parsed.diagnostics);
        return outcome;
    }
    outcome.diagnostics = validate(*parsed.model);
    if (has_errors(outcome.diagnostics)) {
        outcome.status = ApiOutcome::Status::Invalid;
        return outcome;
    }
    switch (operation) {
        case ApiOperation::Validate:
            outcome.status = ApiOutcome::Status::Ok;
            break;
        case ApiOperation::Generate:
            outcome.units = generate(*parsed.model).units;
            outcome.status = ApiOutcome::Status::Ok;
            break;
        case ApiOperation::Analyze: {
            outcome.report = analyze(*parsed.model);
            outcome.status = outcome.report->schedulable ? ApiOutcome::Status::Ok
                                                         : ApiOutcome::Status::Unschedulable;
            break;
        }
    }
    return outcome;
}

std::string outcome_body_json(const ApiOutcome& outcome) {
    nlohmann::ordered_json body;
    switch (outcome.status) {
        case ApiOutcome::Status::Ok: body["status"] = "ok"; break;
        case ApiOutcome::Status::Invalid: body["status"] = "invalid"; break;
        case ApiOutcome::Status::Unschedulable: body["status"] = "unschedulable"; break;
        case ApiOutcome::Status::Error: body["status"] = "error"; break;
    }
    // Reuse the canonical renderers so the service and the CLI agree
    // field-for-field.
    body["diagnostics"] =
        nlohmann::ordered_json::parse(render_diagnostics_json(outcome.diagnostics));
    if (outcome.report)
        body["report"] = nlohmann::ordered_json::parse(render_report_json(*outcome.report));
    if (!outcome.units.empty()) {
        nlohmann::ordered_json units = nlohmann::ordered_json::array();
        for (const auto& unit : outcome.units) {
            nlohmann::ordered_json u;
            u["name"] = unit.file_name;
            u["text"] = unit.text;
            units.push_back(std::move(u));
        }
        body["units"] = std::move(units);
    }
    return body.dump(2) + "\n";
}

}  // namespace iotforge
