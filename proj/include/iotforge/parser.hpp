#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iotforge/diagnostics.hpp"
#include "iotforge/model.hpp"

namespace iotforge {

struct SourceFile {
    std::string path;
    std::string text;
};

/// Either a model or at least one error diagnostic, never both. Warnings may
/// accompany a successful parse.
struct ParseResult {
    std::optional<Model> model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
};

/// Parses a `.ciot` source. The parser resynchronizes at declaration
/// boundaries, so independent syntax errors in separate blocks each produce
/// their own diagnostic. Name resolution beyond local duplicates is the
/// validator's job.
ParseResult parse_model(const SourceFile& source);

}  // namespace iotforge
