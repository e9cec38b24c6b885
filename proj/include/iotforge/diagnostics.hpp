#pragma once

#include <span>
#include <string>
#include <vector>

#include "iotforge/model.hpp"

namespace iotforge {

enum class Severity { Error, Warning };

/// A single finding with a stable code, e.g. E_SYNTAX or V_STATE_EVENTS.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceLoc loc;
};

bool has_errors(std::span<const Diagnostic> diagnostics);

/// `path:line:col: severity[CODE]: message`
std::string render_diagnostic(const std::string& path, const Diagnostic& d,
                              bool color = false);

/// JSON array of `{code, severity, message, line, column}` objects, 2-space
/// indented, trailing newline. Stable field order.
std::string render_diagnostics_json(std::span<const Diagnostic> diagnostics);

}  // namespace iotforge
