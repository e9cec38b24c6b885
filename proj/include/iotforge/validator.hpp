#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iotforge/diagnostics.hpp"
#include "iotforge/model.hpp"

namespace iotforge {

/// A well-formedness rule with a stable code. Codes never change meaning
/// across releases; rules only get added.
struct RuleId {
    std::string code;
    std::string description;
    Severity severity = Severity::Error;
};

/// The full rule catalog, in code order.
const std::vector<RuleId>& rule_catalog();

/// Checks every well-formedness rule and returns all findings, ordered by
/// source position. Empty result means the model is valid. Pure and
/// deterministic.
std::vector<Diagnostic> validate(const Model& model);

struct GuardType {
    std::optional<TypeKind> type;  // unset when diagnostics were produced
    std::vector<Diagnostic> diagnostics;

    bool is_boolean() const { return type && *type == TypeKind::Bool; }
};

/// Types a guard expression against a component's properties. Transition
/// guards must come out boolean; anything else is a V_GUARD_TYPE finding at
/// the use site.
GuardType typecheck_guard(const GuardNode& guard, const Component& component);

}  // namespace iotforge
