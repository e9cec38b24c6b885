#include "iotforge/diagnostics.hpp"

#include <sstream>

#include <json.hpp>

namespace iotforge {

bool has_errors(std::span<const Diagnostic> diagnostics) {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::Error) return true;
    return false;
}

std::string render_diagnostic(const std::string& path, const Diagnostic& d, bool color) {
    std::ostringstream out;
    if (!path.empty()) out << path << ":";
    out << d.loc.line << ":" << d.loc.column << ": ";
    const char* label = d.severity == Severity::Error ? "error" : "warning";
    if (color) {
        const char* tint = d.severity == Severity::Error ? "\033[31m" : "\033[33m";
        out << tint << label << "[" << d.code << "]\033[0m";
    } else {
        out << label << "[" << d.code << "]";
    }
    out << ": " << d.message;
    return out.str();
}

std::string render_diagnostics_json(std::span<const Diagnostic> diagnostics) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : diagnostics) {
        nlohmann::ordered_json item;
        item["code"] = d.code;
        item["severity"] = d.severity == Severity::Error ? "error" : "warning";
        item["message"] = d.message;
        item["line"] = d.loc.line;
        item["column"] = d.loc.column;
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

}  // namespace iotforge
